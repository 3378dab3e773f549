//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for malformed input or flags, 2 when the input
//! is well formed but outside the domain of the requested operation (not in
//! the function class, not divisible, point outside the contour, failed
//! verification).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::qpoly::{
    c_n, cauchy_fueter, conjugate_cf, global_g, global_v, laplacian, tau_n, PolyError, QPoly, DEFAULT_MAX_DEGREE,
};
use crate::quad::{
    cauchy_theorem_residual, fueter_integral, fueter_integral_explicit, poly_cauchy_eval, CirclePath, QuadError,
};
use crate::quat::{ExactQuat, FloatQuat, UnitImaginary};
use crate::scalar::parse_rational;
use crate::slicefn::{decompose, RightSlicePolyFn, SliceError, SlicePolyFn};
use crate::verify::{self, Suite, VerifyConfig};

#[derive(Parser, Debug)]
#[command(name = "polyfueter", version, about = "Slice polyanalytic functions, global operators and poly-Fueter mappings")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Quadrature node count (power of two)
    #[arg(long, global = true, default_value_t = 512)]
    pub nodes: usize,
    /// Contour radius
    #[arg(long, global = true, default_value_t = 1.0)]
    pub radius: f64,
    /// Imaginary unit of the contour slice, as X,Y,Z (normalized)
    #[arg(long, global = true, default_value = "1,0,0", allow_hyphen_values = true)]
    pub unit: String,
    /// Full contour as JSON {"unit":[x,y,z],"radius":r,"nodes":n}; overrides the separate flags
    #[arg(long, global = true)]
    pub contour: Option<String>,
    /// Tolerance of the numerical checks
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest total degree accepted for inputs
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: u32,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply a differential operator and print the resulting polynomial
    Apply {
        #[arg(value_enum)]
        op: Op,
        /// Function spec: inline JSON, a file path, or - for stdin
        spec: String,
        /// Order for tau and c_n when the input is a bare polynomial
        #[arg(long)]
        order: Option<u32>,
    },
    /// Run the seeded identity suites
    Verify {
        #[arg(value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        /// Instances per check
        #[arg(long, default_value_t = 20)]
        cases: usize,
    },
    /// Evaluate a contour integral representation at a point
    Integrate {
        #[arg(value_enum)]
        kind: IntegralArg,
        spec: String,
        /// Evaluation point W,X,Y,Z (not used by residual)
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Right slice polyanalytic partner for residual
        #[arg(long)]
        right: Option<String>,
    },
    /// Evaluate a function exactly at a rational point
    Evaluate {
        spec: String,
        /// Point W,X,Y,Z; entries may be integers, decimals or p/q
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Expand a slice polyanalytic function into a polynomial in x0..x3
    Expand { spec: String },
    /// Recover the poly-decomposition of a polynomial
    Decompose {
        spec: String,
        /// Order to test; defaults to total degree + 1
        #[arg(long)]
        order: Option<u32>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    #[value(name = "G")]
    G,
    #[value(name = "V")]
    V,
    #[value(name = "D")]
    D,
    #[value(name = "Dbar")]
    Dbar,
    #[value(name = "laplacian")]
    Laplacian,
    #[value(name = "tau")]
    Tau,
    #[value(name = "c_n")]
    CN,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralArg {
    Cauchy,
    Fueter,
    FueterExplicit,
    Residual,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Domain { message: String, detail: Value },
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            Self::Input(_) => 1,
            Self::Domain { .. } => 2,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match &e {
            PolyError::NotDivisible { remainder } => Self::Domain {
                message: e.to_string(),
                detail: json!({"error": "not_divisible", "remainder": remainder.to_json()}),
            },
            PolyError::NotFueterRegular { index } => Self::Domain {
                message: e.to_string(),
                detail: json!({"error": "not_fueter_regular", "index": index}),
            },
            PolyError::DegreeCapExceeded { .. } | PolyError::InvalidOrder | PolyError::Json(_) => {
                Self::Input(e.to_string())
            }
        }
    }
}

impl From<SliceError> for CliError {
    fn from(e: SliceError) -> Self {
        match e {
            SliceError::Poly(p) => p.into(),
            SliceError::NotInClass { order, .. } => Self::Domain {
                message: e.to_string(),
                detail: json!({"error": "not_in_class", "order": order}),
            },
            SliceError::OrderMismatch { left, right } => Self::Domain {
                message: e.to_string(),
                detail: json!({"error": "order_mismatch", "left": left, "right": right}),
            },
            SliceError::NotOrthogonal => Self::Domain {
                message: e.to_string(),
                detail: json!({"error": "not_orthogonal"}),
            },
            SliceError::NoComponents | SliceError::Json(_) => Self::Input(e.to_string()),
        }
    }
}

impl From<QuadError> for CliError {
    fn from(e: QuadError) -> Self {
        let kind = match &e {
            QuadError::InvalidContour(_) => return Self::Input(e.to_string()),
            QuadError::OutsideContour { .. } => "outside_contour",
            QuadError::OrderMismatch { .. } => "order_mismatch",
            QuadError::Kernel(_) => "singular_kernel",
        };
        Self::Domain {
            message: e.to_string(),
            detail: json!({"error": kind}),
        }
    }
}

/// A function spec is either a slice polyanalytic function or a bare polynomial.
enum Input {
    Slice(SlicePolyFn),
    Poly(QPoly),
}

fn read_json(arg: &str) -> Result<Value, CliError> {
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        s
    } else if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| CliError::Input(format!("reading {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("malformed JSON: {e}")))
}

fn read_input(arg: &str, cap: u32) -> Result<Input, CliError> {
    let v = read_json(arg)?;
    if v.get("terms").is_some() {
        let p = QPoly::from_json(&v)?;
        p.check_degree(cap)?;
        Ok(Input::Poly(p))
    } else if v.get("components").is_some() {
        let f = SlicePolyFn::from_json(&v)?;
        if let Some(d) = f.total_degree() {
            if d > cap {
                return Err(PolyError::DegreeCapExceeded { degree: d, cap }.into());
            }
        }
        Ok(Input::Slice(f))
    } else {
        Err(CliError::Input(
            "spec must be a function {\"order\", \"components\"} or a polynomial {\"terms\"}".into(),
        ))
    }
}

impl Input {
    fn expand(&self) -> QPoly {
        match self {
            Self::Slice(f) => f.expand(),
            Self::Poly(p) => p.clone(),
        }
    }

    /// The function with its order, decomposing a bare polynomial when needed.
    fn to_slice(&self, order: Option<u32>) -> Result<SlicePolyFn, CliError> {
        match (self, order) {
            (Self::Slice(f), None) => Ok(f.clone()),
            (Self::Slice(f), Some(n)) if n >= f.minimal().order() => Ok(f.padded(n)),
            (Self::Slice(f), Some(n)) => Err(SliceError::NotInClass {
                order: n,
                reason: format!("function has order {}", f.minimal().order()),
            }
            .into()),
            (Self::Poly(p), Some(n)) => Ok(decompose(p, n)?.padded(n)),
            (Self::Poly(_), None) => Err(CliError::Input("--order is required for a bare polynomial".into())),
        }
    }
}

fn parse_floats<const N: usize>(s: &str, what: &str) -> Result<[f64; N], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(CliError::Input(format!("{what} needs {N} comma-separated numbers, got {s:?}")));
    }
    let mut out = [0.0; N];
    for (o, p) in out.iter_mut().zip(&parts) {
        *o = p
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| CliError::Input(format!("{what}: {p:?} is not a finite number")))?;
    }
    Ok(out)
}

fn parse_exact_point(s: &str) -> Result<ExactQuat, CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(CliError::Input(format!("point needs 4 comma-separated entries, got {s:?}")));
    }
    let r = parts
        .iter()
        .map(|p| parse_rational(p).map_err(|e| CliError::Input(format!("point: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let [w, x, y, z]: [_; 4] = r.try_into().expect("four entries");
    Ok(ExactQuat::new(w, x, y, z))
}

fn contour(g: &GlobalOpts) -> Result<CirclePath, CliError> {
    if let Some(c) = &g.contour {
        return Ok(CirclePath::from_json(&read_json(c)?)?);
    }
    let [x, y, z] = parse_floats::<3>(&g.unit, "--unit")?;
    let unit = UnitImaginary::from_direction(x, y, z).map_err(|e| CliError::Input(format!("--unit: {e}")))?;
    Ok(CirclePath::new(unit, g.radius, g.nodes)?)
}

fn float_json(q: &FloatQuat) -> Value {
    json!([q.w, q.x, q.y, q.z])
}

/// Successful command output: JSON value plus its text rendering.
struct Output {
    json: Value,
    text: String,
    code: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self { json, text, code: 0 }
    }
}

fn apply(op: Op, spec: &str, order: Option<u32>, g: &GlobalOpts) -> Result<Output, CliError> {
    let input = read_input(spec, g.max_degree)?;
    let result = match op {
        Op::G => global_g(&input.expand()),
        Op::V => global_v(&input.expand())?,
        Op::D => cauchy_fueter(&input.expand()),
        Op::Dbar => conjugate_cf(&input.expand()),
        Op::Laplacian => laplacian(&input.expand()),
        Op::Tau => {
            let n = match (&input, order) {
                (_, Some(n)) => n,
                (Input::Slice(f), None) => f.order(),
                (Input::Poly(_), None) => {
                    return Err(CliError::Input("--order is required for tau on a bare polynomial".into()))
                }
            };
            tau_n(&input.expand(), n)?
        }
        Op::CN => c_n(&input.to_slice(order)?),
    };
    let text = result.to_string();
    Ok(Output::ok(result.to_json(), text))
}

fn integrate(
    kind: IntegralArg,
    spec: &str,
    point: Option<&str>,
    right: Option<&str>,
    g: &GlobalOpts,
) -> Result<Output, CliError> {
    let f = read_input(spec, g.max_degree)?.to_slice(None)?;
    let path = contour(g)?;
    if kind == IntegralArg::Residual {
        let right = right.ok_or_else(|| CliError::Input("residual needs --right SPEC".into()))?;
        let gfun = match read_input(right, g.max_degree)? {
            Input::Slice(s) => RightSlicePolyFn::mirror_of(&s),
            Input::Poly(_) => return Err(CliError::Input("--right must be a function spec with components".into())),
        };
        let v = cauchy_theorem_residual(&f, &gfun, &path)?;
        let json = json!({"kind": "residual", "value": float_json(&v), "abs": v.norm(), "contour": path.to_json()});
        return Ok(Output::ok(json, format!("residual: {v}\nabs: {:e}", v.norm())));
    }
    let point = point.ok_or_else(|| CliError::Input("--point W,X,Y,Z is required".into()))?;
    let [w, x, y, z] = parse_floats::<4>(point, "--point")?;
    let q = FloatQuat::new(w, x, y, z);
    let (name, value, reference) = match kind {
        IntegralArg::Cauchy => ("cauchy", poly_cauchy_eval(&f, &q, &path)?, f.eval(&q)),
        IntegralArg::Fueter | IntegralArg::FueterExplicit => {
            let v = if kind == IntegralArg::Fueter {
                fueter_integral(&f, &q, &path)?
            } else {
                fueter_integral_explicit(&f, &q, &path)?
            };
            let tau = tau_n(&f.expand(), f.order())?;
            let name = if kind == IntegralArg::Fueter { "fueter" } else { "fueter-explicit" };
            (name, v, tau.evaluate(&q))
        }
        IntegralArg::Residual => unreachable!("handled above"),
    };
    let deviation = value.dist(&reference);
    let json = json!({
        "kind": name,
        "point": float_json(&q),
        "value": float_json(&value),
        "reference": float_json(&reference),
        "deviation": deviation,
        "contour": path.to_json(),
    });
    let text = format!("{name} at {q}\nvalue: {value}\nreference: {reference}\ndeviation: {deviation:e}");
    Ok(Output::ok(json, text))
}

fn run_command(cli: &Cli) -> Result<Output, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Apply { op, spec, order } => apply(*op, spec, *order, g),
        Command::Verify { suite, cases } => {
            let config = VerifyConfig {
                seed: g.seed,
                cases: *cases,
                tol: g.tol,
                nodes: g.nodes,
                radius: g.radius,
            };
            let report = verify::run(*suite, &config);
            Ok(Output {
                json: report.to_json(),
                text: report.to_text().trim_end().to_string(),
                code: if report.passed() { 0 } else { 2 },
            })
        }
        Command::Integrate { kind, spec, point, right } => {
            integrate(*kind, spec, point.as_deref(), right.as_deref(), g)
        }
        Command::Evaluate { spec, point } => {
            let q = parse_exact_point(point)?;
            let v = match read_input(spec, g.max_degree)? {
                Input::Slice(f) => f.eval(&q),
                Input::Poly(p) => p.evaluate(&q),
            };
            Ok(Output::ok(v.to_json(), v.to_string()))
        }
        Command::Expand { spec } => {
            let p = read_input(spec, g.max_degree)?.expand();
            Ok(Output::ok(p.to_json(), p.to_string()))
        }
        Command::Decompose { spec, order } => {
            let p = read_input(spec, g.max_degree)?.expand();
            let n = order.unwrap_or_else(|| p.degree().unwrap_or(0) + 1);
            let f = decompose(&p, n)?;
            Ok(Output::ok(f.to_json(), format!("{}", f.to_json())))
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let format = cli.global.format;
    match run_command(&cli) {
        Ok(o) => {
            let _ = match format {
                Format::Json => writeln!(out, "{}", o.json),
                Format::Text => writeln!(out, "{}", o.text),
            };
            o.code
        }
        Err(e) => {
            let code = e.code();
            match &e {
                CliError::Input(msg) => {
                    let _ = writeln!(err, "error: {msg}");
                }
                CliError::Domain { message, detail } => {
                    let _ = writeln!(err, "error: {message}");
                    let mut detail = detail.clone();
                    detail["message"] = json!(message);
                    let _ = match format {
                        Format::Json => writeln!(out, "{detail}"),
                        Format::Text => writeln!(out, "{message}"),
                    };
                    if let (Format::Text, Some(r)) = (format, detail.get("remainder")) {
                        if let Ok(p) = QPoly::from_json(r) {
                            let _ = writeln!(out, "remainder: {p}");
                        }
                    }
                }
            }
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["polyfueter"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const QBAR: &str = r#"{"order":2,"components":[[0],[[1,0,0,0]]]}"#;

    #[test]
    fn apply_v_to_conjugate() {
        let (code, out, _) = call(&["apply", "V", QBAR]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(QPoly::from_json(&v).unwrap(), QPoly::from_i64(2));
    }

    #[test]
    fn apply_v_not_divisible_exits_two() {
        let x1 = r#"{"terms":[{"exp":[0,1,0,0],"coef":[1,0,0,0]}]}"#;
        let (code, out, err) = call(&["apply", "V", x1]);
        assert_eq!(code, 2, "{err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["error"], "not_divisible");
        assert!(!QPoly::from_json(&v["remainder"]).unwrap().is_zero());
    }

    #[test]
    fn malformed_input_exits_one() {
        assert_eq!(call(&["apply", "V", "{not json"]).0, 1);
        assert_eq!(call(&["apply", "W", QBAR]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn integrate_outside_exits_two() {
        let (code, _, _) = call(&["integrate", "cauchy", QBAR, "--point", "1.5,0,0,0"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn evaluate_exactly() {
        let (code, out, _) = call(&["evaluate", QBAR, "--point", "1/2,-1/3,0,2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"["1/2","1/3","0","-2"]"#);
    }
}
