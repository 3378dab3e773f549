//! Seeded identity suites with a machine-readable report.
//!
//! Every named check draws its own instances from a corpus seeded by the run
//! seed and the check's position, so a suite run alone reproduces exactly the
//! numbers it reports inside `all`. Exact checks report the largest
//! coefficient of the difference polynomial, which must be zero; numerical
//! checks report the largest observed error against their tolerance.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive};
use rand::Rng;
use serde_json::{json, Value};

use crate::corpus::Corpus;
use crate::kernels::{delta_s_inv, f_j, s_inv};
use crate::oracle::{fd_cauchy_fueter, fd_global_v, fd_laplacian, fd_slice_cr_left, fd_slice_cr_right, richardson};
use crate::qpoly::{
    build_poly_fueter, c_n, cauchy_fueter, cauchy_fueter_pow, conjugate_cf, expand_q_power, expand_qbar_power,
    global_g, global_v, global_v_pow, is_poly_fueter, laplacian, partial, tau_n, top_component_factor, QPoly,
};
use crate::quad::{
    cauchy_theorem_residual, fueter_integral, fueter_integral_explicit, poly_cauchy_eval, unit_independence_check,
    CirclePath, IntegralKind,
};
use crate::quat::{FloatQuat, UnitImaginary};
use crate::scalar::Rational;
use crate::slicefn::{appell_check, decompose};

/// Finite-difference step and tolerance of the kernel checks.
pub const FD_STEP: f64 = 1e-3;
pub const FD_TOL: f64 = 1e-5;
/// The two kernel forms of the Fueter integral differ only by rounding.
pub const KERNEL_FORMS_TOL: f64 = 1e-12;
/// Change of the Cauchy quadrature when the node count doubles.
pub const DOUBLING_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Leibniz,
    Appell,
    Vn,
    PolyFueter,
    Tauc,
    Kernels,
    Quadrature,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = ["leibniz", "appell", "vn", "poly_fueter", "tauc", "kernels", "quadrature", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Self::Leibniz => "leibniz",
            Self::Appell => "appell",
            Self::Vn => "vn",
            Self::PolyFueter => "poly_fueter",
            Self::Tauc => "tauc",
            Self::Kernels => "kernels",
            Self::Quadrature => "quadrature",
            Self::All => "all",
        }
    }

    fn members(self) -> Vec<Suite> {
        match self {
            Self::All => vec![
                Self::Leibniz,
                Self::Appell,
                Self::Vn,
                Self::PolyFueter,
                Self::Tauc,
                Self::Kernels,
                Self::Quadrature,
            ],
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "leibniz" => Self::Leibniz,
            "appell" => Self::Appell,
            "vn" => Self::Vn,
            "poly_fueter" | "poly-fueter" => Self::PolyFueter,
            "tauc" => Self::Tauc,
            "kernels" => Self::Kernels,
            "quadrature" => Self::Quadrature,
            "all" => Self::All,
            other => return Err(format!("unknown suite {other:?}; expected one of {}", Self::NAMES.join(", "))),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Instances per named check.
    pub cases: usize,
    /// Tolerance of the quadrature checks.
    pub tol: f64,
    pub nodes: usize,
    pub radius: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            cases: 20,
            tol: 1e-9,
            nodes: 512,
            radius: 1.0,
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub max_error: f64,
    pub tolerance: f64,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed(),
            "cases": self.cases,
            "failures": self.failures,
            "max_error": self.max_error,
            "tolerance": self.tolerance,
            "first_failure": self.first_failure,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub suite: Suite,
    pub config: VerifyConfig,
    pub checks: Vec<CheckResult>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "seed": self.config.seed,
            "cases": self.config.cases,
            "tol": self.config.tol,
            "nodes": self.config.nodes,
            "radius": self.config.radius,
            "passed": self.passed(),
            "warnings": self.warnings,
            "checks": self.checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!(
                "{} {}/{} cases={} max_error={:e} tol={:e}\n",
                if c.passed() { "PASS" } else { "FAIL" },
                c.suite,
                c.name,
                c.cases,
                c.max_error,
                c.tolerance
            ));
            if let Some(f) = &c.first_failure {
                out.push_str(&format!("    first failure: {f}\n"));
            }
        }
        out.push_str(if self.passed() { "overall: PASS\n" } else { "overall: FAIL\n" });
        out
    }
}

/// Largest absolute coefficient component of `a - b`.
pub fn poly_gap(a: &QPoly, b: &QPoly) -> f64 {
    (a - b)
        .terms()
        .flat_map(|(_, c)| c.components().map(|r| r.abs().to_f64().unwrap_or(f64::INFINITY)))
        .fold(0.0, f64::max)
}

/// Relative distance with the denominator floored at one.
pub fn rel_error(got: &FloatQuat, want: &FloatQuat) -> f64 {
    got.dist(want) / want.norm().max(1.0)
}

struct Tally {
    result: CheckResult,
}

impl Tally {
    fn new(suite: Suite, name: &'static str, tolerance: f64) -> Self {
        Self {
            result: CheckResult {
                suite: suite.name(),
                name,
                cases: 0,
                failures: 0,
                max_error: 0.0,
                tolerance,
                first_failure: None,
            },
        }
    }

    fn record(&mut self, err: f64, context: impl FnOnce() -> String) {
        let r = &mut self.result;
        r.cases += 1;
        // NaN must fail, hence the negated comparison
        if !(err <= r.tolerance) {
            r.failures += 1;
            if r.first_failure.is_none() {
                r.first_failure = Some(format!("{} (error {err:e})", context()));
            }
        }
        if err.is_nan() || err > r.max_error {
            r.max_error = err;
        }
    }

    fn fail(&mut self, context: String) {
        self.record(f64::INFINITY, || context);
    }
}

struct Runner<'a> {
    config: &'a VerifyConfig,
    checks: Vec<CheckResult>,
    counter: u64,
}

impl Runner<'_> {
    /// Runs `body` once per case with a corpus private to this check.
    fn check<F>(&mut self, suite: Suite, name: &'static str, tolerance: f64, mut body: F)
    where
        F: FnMut(&mut Corpus, usize, &mut Tally),
    {
        self.counter += 1;
        let seed = self.config.seed.wrapping_add(self.counter.wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut corpus = Corpus::new(seed);
        let mut tally = Tally::new(suite, name, tolerance);
        for i in 0..self.config.cases {
            body(&mut corpus, i, &mut tally);
        }
        self.checks.push(tally.result);
    }
}

/// Runs a suite (or all of them) and collects the report.
pub fn run(suite: Suite, config: &VerifyConfig) -> Report {
    let mut warnings = Vec::new();
    if config.cases == 0 {
        warnings.push("zero cases requested: every check passes vacuously".to_string());
    }
    let mut checks = Vec::new();
    for s in suite.members() {
        let mut runner = Runner {
            config,
            checks: Vec::new(),
            counter: 0,
        };
        match s {
            Suite::Leibniz => leibniz(&mut runner),
            Suite::Appell => appell(&mut runner),
            Suite::Vn => vn(&mut runner),
            Suite::PolyFueter => poly_fueter(&mut runner),
            Suite::Tauc => tauc(&mut runner),
            Suite::Kernels => kernels(&mut runner),
            Suite::Quadrature => {
                if let Err(e) = CirclePath::new(UnitImaginary::i(), config.radius, config.nodes) {
                    warnings.push(format!("quadrature skipped: {e}"));
                    let mut t = Tally::new(s, "contour", 0.0);
                    t.fail(e.to_string());
                    runner.checks.push(t.result);
                } else {
                    quadrature(&mut runner);
                }
            }
            Suite::All => unreachable!("members() expands All"),
        }
        checks.extend(runner.checks);
    }
    Report {
        suite,
        config: config.clone(),
        checks,
        warnings,
    }
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn leibniz(r: &mut Runner<'_>) {
    let s = Suite::Leibniz;
    r.check(s, "g-right-linear", 0.0, |c, _, t| {
        let (f, g, lam) = (c.qpoly(4, 4), c.qpoly(4, 4), c.quat());
        let lhs = global_g(&(&f.right_mul_quat(&lam) + &g));
        let rhs = &global_g(&f).right_mul_quat(&lam) + &global_g(&g);
        t.record(poly_gap(&lhs, &rhs), || format!("f = {f}, g = {g}, lambda = {lam}"));
    });
    r.check(s, "g-x0-rule", 0.0, |c, _, t| {
        let f = c.qpoly(5, 5);
        let lhs = global_g(&(&QPoly::var(0) * &f));
        let rhs = &(&QPoly::vec_norm_sq() * &f) + &(&QPoly::var(0) * &global_g(&f));
        t.record(poly_gap(&lhs, &rhs), || format!("f = {f}"));
    });
    r.check(s, "g-vector-rule", 0.0, |c, _, t| {
        let f = c.qpoly(5, 5);
        let lhs = global_g(&(&QPoly::vec_q() * &f));
        let rhs = &(&QPoly::vec_q() * &global_g(&f)) - &(&QPoly::vec_norm_sq() * &f);
        t.record(poly_gap(&lhs, &rhs), || format!("f = {f}"));
    });
    r.check(s, "g-product-rule", 0.0, |c, _, t| {
        let (f, g) = (c.qpoly(3, 4), c.qpoly(3, 4));
        let euler_g = (1..4).fold(QPoly::zero(), |acc, l| &acc + &(&QPoly::var(l) * &partial(&g, l)));
        let commutator = &(&QPoly::vec_q() * &f) - &(&f * &QPoly::vec_q());
        let rhs = &(&(&global_g(&f) * &g) + &(&f * &global_g(&g))) + &(&commutator * &euler_g);
        t.record(poly_gap(&global_g(&(&f * &g)), &rhs), || format!("f = {f}, g = {g}"));
    });
    r.check(s, "g-commutes-with-q-powers", 0.0, |c, _, t| {
        let k = c.rng().gen_range(1..=8);
        let f = c.qpoly(3, 3);
        let qk = expand_q_power(k);
        t.record(poly_gap(&global_g(&(&qk * &f)), &(&qk * &global_g(&f))), || {
            format!("k = {k}, f = {f}")
        });
    });
    r.check(s, "g-qbar-rule", 0.0, |c, _, t| {
        let psi = c.qpoly(5, 5);
        let qbar = QPoly::var_qbar();
        let rhs = &(&qbar * &global_g(&psi)) + &(&QPoly::vec_norm_sq() * &psi).scale(&rat(2));
        t.record(poly_gap(&global_g(&(&qbar * &psi)), &rhs), || format!("psi = {psi}"));
    });
    r.check(s, "v-qbar-power", 0.0, |c, _, t| {
        let k = c.rng().gen_range(1..=8);
        let f = c.series_upto(4).expand();
        let rhs = (&expand_qbar_power(k - 1) * &f).scale(&rat(2 * i64::from(k)));
        match global_v(&(&expand_qbar_power(k) * &f)) {
            Ok(lhs) => t.record(poly_gap(&lhs, &rhs), || format!("k = {k}, f = {f}")),
            Err(e) => t.fail(format!("k = {k}, f = {f}: {e}")),
        }
    });
}

fn appell(r: &mut Runner<'_>) {
    r.check(Suite::Appell, "appell-step", 0.0, |c, i, t| {
        let k = (i % 7) as u32;
        let f = c.series_upto(6);
        match appell_check(&f, k) {
            Ok(true) => t.record(0.0, String::new),
            Ok(false) => t.fail(format!("k = {k}, f = {}", f.expand())),
            Err(e) => t.fail(format!("k = {k}: {e}")),
        }
    });
}

fn vn(r: &mut Runner<'_>) {
    let s = Suite::Vn;
    r.check(s, "v-lowers-order", 0.0, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        match global_v(&f.expand()) {
            Ok(v) => t.record(poly_gap(&v, &f.v_image().expand()), || format!("f = {}", f.to_json())),
            Err(e) => t.fail(format!("f = {}: {e}", f.to_json())),
        }
    });
    r.check(s, "v-power-annihilates", 0.0, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        match global_v_pow(&f.expand(), f.order()) {
            Ok(v) => t.record(poly_gap(&v, &QPoly::zero()), || format!("f = {}", f.to_json())),
            Err(e) => t.fail(format!("f = {}: {e}", f.to_json())),
        }
    });
    r.check(s, "v-power-top-component", 0.0, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        let n = f.order();
        let top = f.component(n as usize - 1).expand().scale(&top_component_factor(n));
        match global_v_pow(&f.expand(), n - 1) {
            Ok(v) => t.record(poly_gap(&v, &top), || format!("f = {}", f.to_json())),
            Err(e) => t.fail(format!("f = {}: {e}", f.to_json())),
        }
    });
    r.check(s, "decompose-inverts-expand", 0.0, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        match decompose(&f.expand(), f.order()) {
            Ok(g) if g == f.minimal() => t.record(0.0, String::new),
            Ok(g) => t.fail(format!("f = {}, got {}", f.to_json(), g.to_json())),
            Err(e) => t.fail(format!("f = {}: {e}", f.to_json())),
        }
    });
}

fn poly_fueter(r: &mut Runner<'_>) {
    let s = Suite::PolyFueter;
    r.check(s, "d-of-q-power", 0.0, |c, _, t| {
        let n = c.rng().gen_range(1..=8);
        let rhs = (1..=n).fold(QPoly::zero(), |acc, k| {
            &acc + &(&expand_q_power(n - k) * &expand_qbar_power(k - 1))
        });
        t.record(poly_gap(&cauchy_fueter(&expand_q_power(n)), &rhs.scale(&rat(-2))), || format!("n = {n}"));
    });
    r.check(s, "laplacian-of-q-power", 0.0, |c, _, t| {
        let n = c.rng().gen_range(1..=8);
        let rhs = (1..n).fold(QPoly::zero(), |acc, k| {
            let term = &expand_q_power(n - k - 1) * &expand_qbar_power(k - 1);
            &acc + &term.scale(&rat(i64::from(n - k)))
        });
        t.record(poly_gap(&laplacian(&expand_q_power(n)), &rhs.scale(&rat(-4))), || format!("n = {n}"));
    });
    r.check(s, "laplacian-factors", 0.0, |c, _, t| {
        let p = c.qpoly(6, 5);
        let lap = laplacian(&p);
        let err = poly_gap(&cauchy_fueter(&conjugate_cf(&p)), &lap).max(poly_gap(&conjugate_cf(&cauchy_fueter(&p)), &lap));
        t.record(err, || format!("p = {p}"));
    });
    r.check(s, "tau-image-fueter-regular", 0.0, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        match tau_n(&f.expand(), f.order()) {
            Ok(tau) => t.record(poly_gap(&cauchy_fueter(&tau), &QPoly::zero()), || format!("f = {}", f.to_json())),
            Err(e) => t.fail(format!("f = {}: {e}", f.to_json())),
        }
    });
    r.check(s, "c-image-poly-fueter", 0.0, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        let img = cauchy_fueter_pow(&c_n(&f), f.order());
        t.record(poly_gap(&img, &QPoly::zero()), || format!("f = {}", f.to_json()));
    });
    r.check(s, "poly-fueter-build", 0.0, |c, _, t| {
        let n = c.rng().gen_range(1..=4);
        let phis: Vec<QPoly> = (0..n).map(|_| laplacian(&c.series_upto(6).expand())).collect();
        match build_poly_fueter(&phis) {
            Ok(p) if is_poly_fueter(&p, n) => t.record(0.0, String::new),
            Ok(p) => t.fail(format!("D^{n} does not annihilate {p}")),
            Err(e) => t.fail(e.to_string()),
        }
    });
}

fn tauc(r: &mut Runner<'_>) {
    r.check(Suite::Tauc, "tau-c-relation", 0.0, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        let n = f.order();
        let lhs = cauchy_fueter_pow(&c_n(&f), n - 1);
        match tau_n(&f.expand(), n) {
            Ok(tau) => {
                let rhs = tau.scale(&(rat(1) / pow2(n - 1)));
                t.record(poly_gap(&lhs, &rhs), || format!("f = {}", f.to_json()))
            }
            Err(e) => t.fail(format!("f = {}: {e}", f.to_json())),
        }
    });
}

fn pow2(e: u32) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(1) << e as usize)
}

/// Kernel singularity points: `w` on a random slice circle of radius one, `q`
/// in the ball of radius 1/2 and away from the real axis.
fn kernel_pair(c: &mut Corpus) -> (FloatQuat, FloatQuat) {
    let unit = c.unit();
    let theta: f64 = c.rng().gen_range(0.0..std::f64::consts::TAU);
    let w = unit.point(&theta.cos(), &theta.sin());
    (w, c.point_off_axis(0.5, 0.2))
}

fn kernels(r: &mut Runner<'_>) {
    let s = Suite::Kernels;
    r.check(s, "kernel-v-lowers-index", FD_TOL, |c, _, t| {
        let (w, q) = kernel_pair(c);
        for j in 1..=2 {
            let got = fd_global_v(|p: &FloatQuat| f_j(&w, p, j).expect("q stays inside"), &q, FD_STEP);
            let want = -f_j(&w, &q, j - 1).expect("q stays inside");
            match got {
                Ok(g) => t.record(g.dist(&want), || format!("j = {j}, w = {w}, q = {q}")),
                Err(e) => t.fail(e.to_string()),
            }
        }
    });
    r.check(s, "kernel-laplacian-closed-form", FD_TOL, |c, _, t| {
        let (w, q) = kernel_pair(c);
        let kernel = |p: &FloatQuat| s_inv(&w, p).expect("q stays inside");
        let got = richardson(|h| fd_laplacian(kernel, &q, h), FD_STEP);
        let want = delta_s_inv(&w, &q).expect("q stays inside");
        t.record(got.dist(&want), || format!("w = {w}, q = {q}"));
    });
    r.check(s, "kernel-laplacian-fueter-regular", FD_TOL, |c, _, t| {
        let (w, q) = kernel_pair(c);
        let kernel = |p: &FloatQuat| delta_s_inv(&w, p).expect("q stays inside");
        let got = richardson(|h| fd_cauchy_fueter(kernel, &q, h), FD_STEP);
        t.record(got.norm(), || format!("w = {w}, q = {q}"));
    });
    r.check(s, "kernel-left-slice-regular-in-q", FD_TOL, |c, _, t| {
        let (w, q) = kernel_pair(c);
        let sc = q.slice_decompose();
        let got = fd_slice_cr_left(|p: &FloatQuat| s_inv(&w, p).expect("q stays inside"), &sc.unit, sc.x, sc.y, FD_STEP);
        t.record(got.norm(), || format!("w = {w}, q = {q}"));
    });
    r.check(s, "kernel-right-slice-regular-in-s", FD_TOL, |c, _, t| {
        let (w, q) = kernel_pair(c);
        let sc = w.slice_decompose();
        let got = fd_slice_cr_right(|p: &FloatQuat| s_inv(p, &q).expect("q stays inside"), &sc.unit, sc.x, sc.y, FD_STEP);
        t.record(got.norm(), || format!("w = {w}, q = {q}"));
    });
}

fn quadrature(r: &mut Runner<'_>) {
    let s = Suite::Quadrature;
    let cfg = r.config.clone();
    let path_on = |unit: UnitImaginary<f64>| CirclePath::new(unit, cfg.radius, cfg.nodes).expect("validated contour");
    let inner = 0.6 * cfg.radius;
    r.check(s, "poly-cauchy-reproduces", cfg.tol, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        let q = c.point_in_ball(inner);
        let path = path_on(c.unit());
        match poly_cauchy_eval(&f, &q, &path) {
            Ok(v) => t.record(rel_error(&v, &f.eval(&q)), || format!("f = {}, q = {q}", f.to_json())),
            Err(e) => t.fail(e.to_string()),
        }
    });
    r.check(s, "poly-cauchy-unit-independent", cfg.tol, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        let q = c.point_in_ball(inner);
        let (u1, u2) = (c.unit(), c.unit());
        let scale = f.eval(&q).norm().max(1.0);
        match unit_independence_check(IntegralKind::Cauchy, &f, &q, &u1, &u2, &path_on(u1.clone())) {
            Ok(d) => t.record(d / scale, || format!("f = {}, q = {q}", f.to_json())),
            Err(e) => t.fail(e.to_string()),
        }
    });
    r.check(s, "fueter-integral-matches-tau", cfg.tol, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        let q = c.point_in_ball(inner);
        let want = match tau_n(&f.expand(), f.order()) {
            Ok(tau) => tau.evaluate(&q),
            Err(e) => return t.fail(e.to_string()),
        };
        match fueter_integral(&f, &q, &path_on(c.unit())) {
            Ok(v) => t.record(rel_error(&v, &want), || format!("f = {}, q = {q}", f.to_json())),
            Err(e) => t.fail(e.to_string()),
        }
    });
    r.check(s, "fueter-kernel-forms-agree", KERNEL_FORMS_TOL, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        let q = c.point_in_ball(inner);
        let path = path_on(c.unit());
        match (fueter_integral(&f, &q, &path), fueter_integral_explicit(&f, &q, &path)) {
            (Ok(a), Ok(b)) => t.record(rel_error(&b, &a), || format!("f = {}, q = {q}", f.to_json())),
            (Err(e), _) | (_, Err(e)) => t.fail(e.to_string()),
        }
    });
    r.check(s, "cauchy-theorem-residual", cfg.tol, |c, _, t| {
        let n = c.rng().gen_range(1..=4);
        let f = c.slice_poly(n, 6);
        let g = c.right_slice_poly(n, 6);
        match cauchy_theorem_residual(&f, &g, &path_on(c.unit())) {
            Ok(v) => t.record(v.norm(), || format!("f = {}, g = {}", f.to_json(), g.to_json())),
            Err(e) => t.fail(e.to_string()),
        }
    });
    r.check(s, "spectral-doubling", DOUBLING_TOL, |c, _, t| {
        let f = c.slice_poly_orders(1..=4, 6);
        let q = c.point_in_ball(inner);
        let path = path_on(c.unit());
        let doubled = path.with_nodes(2 * cfg.nodes).expect("power of two");
        match (poly_cauchy_eval(&f, &q, &path), poly_cauchy_eval(&f, &q, &doubled)) {
            (Ok(a), Ok(b)) => t.record(rel_error(&a, &b), || format!("f = {}, q = {q}", f.to_json())),
            (Err(e), _) | (_, Err(e)) => t.fail(e.to_string()),
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(cases: usize) -> VerifyConfig {
        VerifyConfig {
            cases,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn exact_suites_pass() {
        for s in [Suite::Leibniz, Suite::Appell, Suite::Vn, Suite::PolyFueter, Suite::Tauc] {
            let report = run(s, &small(3));
            assert!(report.passed(), "{}", report.to_text());
            assert!(report.checks.iter().all(|c| c.cases == 3 && c.max_error == 0.0));
        }
    }

    #[test]
    fn numeric_suites_pass() {
        for s in [Suite::Kernels, Suite::Quadrature] {
            let report = run(s, &small(2));
            assert!(report.passed(), "{}", report.to_text());
        }
    }

    #[test]
    fn zero_cases_is_vacuous_with_warning() {
        let report = run(Suite::All, &small(0));
        assert!(report.passed());
        assert_eq!(report.warnings.len(), 1);
        assert!(report.checks.iter().all(|c| c.cases == 0));
    }

    #[test]
    fn bad_contour_fails_quadrature() {
        let cfg = VerifyConfig {
            nodes: 500,
            ..small(1)
        };
        let report = run(Suite::Quadrature, &cfg);
        assert!(!report.passed());
    }

    #[test]
    fn report_is_deterministic() {
        let a = run(Suite::Vn, &small(2)).to_json();
        let b = run(Suite::Vn, &small(2)).to_json();
        assert_eq!(a, b);
        let gap = poly_gap(&QPoly::from_i64(3), &QPoly::from_i64(1));
        assert_eq!(gap, 2.0);
    }
}
