//! Slice regular series and slice polyanalytic functions.
//!
//! A slice polyanalytic function of order `n` is stored through its
//! poly-decomposition `f(q) = sum_{k<n} qbar^k f_k(q)` with each `f_k` a finite
//! slice regular series `sum_m q^m a_m`. From there this module provides the
//! exact polynomial expansion, the inverse decomposition, restriction to a
//! complex slice together with the splitting `f_I = F + G J`, the slice
//! Cauchy-Riemann derivatives in closed form, the representation-formula
//! extension and the Appell property of `qbar^k f` under `V / 2`.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::qpoly::{
    expand_qbar_power, global_v, global_v_pow, PolyError, QPoly, DEFAULT_MAX_DEGREE,
};
use crate::quat::{ExactQuat, FloatQuat, Quaternion, UnitImaginary};
use crate::scalar::{falling_factorial, Rational, Scalar};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SliceError {
    #[error("a slice polyanalytic function needs at least one component")]
    NoComponents,
    #[error("imaginary units do not anticommute (I J != -J I)")]
    NotOrthogonal,
    #[error("polynomial is not slice polyanalytic of order {order}: {reason}")]
    NotInClass { order: u32, reason: String },
    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("malformed function spec: {0}")]
    Json(String),
}

/// Finite slice regular series `sum_m q^m a_m` (coefficients on the right).
#[derive(Clone, PartialEq, Debug, Default)]
pub struct SliceRegularSeries {
    coeffs: Vec<ExactQuat>,
}

impl SliceRegularSeries {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coeffs: Vec<ExactQuat>) -> Self {
        while coeffs.last().is_some_and(Quaternion::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(a: ExactQuat) -> Self {
        Self::new(vec![a])
    }

    /// `q^m a`.
    pub fn monomial(m: usize, a: ExactQuat) -> Self {
        let mut c = vec![ExactQuat::zero(); m];
        c.push(a);
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[ExactQuat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Exact polynomial expansion in `x0..x3`.
    pub fn expand(&self) -> QPoly {
        let q = QPoly::var_q();
        let mut power = QPoly::one();
        let mut acc = QPoly::zero();
        for (m, a) in self.coeffs.iter().enumerate() {
            if m > 0 {
                power = &power * &q;
            }
            if !a.is_zero() {
                acc = &acc + &power.right_mul_quat(a);
            }
        }
        acc
    }

    /// Horner evaluation `a0 + q (a1 + q (a2 + ...))`.
    pub fn eval<T: Scalar>(&self, q: &Quaternion<T>) -> Quaternion<T> {
        self.coeffs.iter().rev().fold(Quaternion::zero(), |acc, a| {
            let mut next = q * &acc;
            next += &Quaternion::from_rational(a);
            next
        })
    }

    /// Left-coefficient evaluation `sum_m a_m q^m` (right slice regular reading).
    pub fn eval_right<T: Scalar>(&self, q: &Quaternion<T>) -> Quaternion<T> {
        self.coeffs.iter().rev().fold(Quaternion::zero(), |acc, a| {
            let mut next = &acc * q;
            next += &Quaternion::from_rational(a);
            next
        })
    }

    /// Recovers the series from its expansion. The restriction to the real
    /// axis determines the coefficients; `None` when `p` is not of this form.
    pub fn from_qpoly(p: &QPoly) -> Option<Self> {
        let deg = p.degree().unwrap_or(0);
        let coeffs = (0..=deg).map(|m| p.coeff(&[m, 0, 0, 0])).collect();
        let s = Self::new(coeffs);
        (s.expand() == *p).then_some(s)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(ExactQuat::to_json).collect())
    }

    /// Accepts coefficients as 4-arrays or bare real scalars.
    pub fn from_json(v: &Value) -> Result<Self, SliceError> {
        let arr = v
            .as_array()
            .ok_or_else(|| SliceError::Json(format!("component must be an array, found {v}")))?;
        let coeffs = arr
            .iter()
            .map(|c| match c {
                Value::Array(_) => ExactQuat::from_json(c),
                _ => <Rational as Scalar>::from_json(c)
                    .map(ExactQuat::from_real)
                    .map_err(|e| e.to_string()),
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(SliceError::Json)?;
        Ok(Self::new(coeffs))
    }
}

/// `f(q) = sum_{k<n} qbar^k f_k(q)`; the order `n` is an upper bound, so a zero
/// top component is allowed.
#[derive(Clone, PartialEq, Debug)]
pub struct SlicePolyFn {
    components: Vec<SliceRegularSeries>,
}

impl SlicePolyFn {
    pub fn new(components: Vec<SliceRegularSeries>) -> Result<Self, SliceError> {
        if components.is_empty() {
            return Err(SliceError::NoComponents);
        }
        Ok(Self { components })
    }

    /// Order-1 function from a single slice regular series.
    pub fn regular(f: SliceRegularSeries) -> Self {
        Self { components: vec![f] }
    }

    /// The zero function of the given order.
    pub fn zero(order: u32) -> Self {
        Self {
            components: vec![SliceRegularSeries::zero(); order.max(1) as usize],
        }
    }

    pub fn order(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn components(&self) -> &[SliceRegularSeries] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &SliceRegularSeries {
        &self.components[k]
    }

    /// Same function with zero top components removed (order at least 1).
    pub fn minimal(&self) -> Self {
        let mut c = self.components.clone();
        while c.len() > 1 && c.last().is_some_and(SliceRegularSeries::is_zero) {
            c.pop();
        }
        Self { components: c }
    }

    /// Same function viewed with a larger order bound.
    pub fn padded(&self, order: u32) -> Self {
        let mut c = self.components.clone();
        while (c.len() as u32) < order {
            c.push(SliceRegularSeries::zero());
        }
        Self { components: c }
    }

    /// Largest total degree of `qbar^k f_k` over the components.
    pub fn total_degree(&self) -> Option<u32> {
        self.components
            .iter()
            .enumerate()
            .filter_map(|(k, f)| f.degree().map(|d| d + k as u32))
            .max()
    }

    /// Exact expansion `sum_k qbar^k expand(f_k)`.
    pub fn expand(&self) -> QPoly {
        let qbar = QPoly::var_qbar();
        let mut power = QPoly::one();
        let mut acc = QPoly::zero();
        for (k, f) in self.components.iter().enumerate() {
            if k > 0 {
                power = &power * &qbar;
            }
            if !f.is_zero() {
                acc = &acc + &(&power * &f.expand());
            }
        }
        acc
    }

    /// [`Self::expand`] guarded by a total degree cap.
    pub fn expand_capped(&self, cap: u32) -> Result<QPoly, PolyError> {
        if let Some(d) = self.total_degree() {
            if d > cap {
                return Err(PolyError::DegreeCapExceeded { degree: d, cap });
            }
        }
        Ok(self.expand())
    }

    /// Pointwise value `sum_k qbar^k f_k(q)`.
    pub fn eval<T: Scalar>(&self, q: &Quaternion<T>) -> Quaternion<T> {
        let qbar = q.conj();
        let mut power = Quaternion::one();
        let mut acc = Quaternion::zero();
        for (k, f) in self.components.iter().enumerate() {
            if k > 0 {
                power = &power * &qbar;
            }
            acc += &(&power * &f.eval(q));
        }
        acc
    }

    /// `dbar_I^j f(z) = sum_{k>=j} k!/(k-j)! zbar^(k-j) f_k(z)` for `z` on a
    /// complex slice (any `z`: its own slice is used). Zero for `j >= n`.
    pub fn cr_derivative_at<T: Scalar>(&self, j: u32, z: &Quaternion<T>) -> Quaternion<T> {
        let zbar = z.conj();
        let mut acc = Quaternion::zero();
        for (k, f) in self.components.iter().enumerate().skip(j as usize) {
            let k = k as u32;
            let w = T::from_rational(&falling_factorial(k, j));
            let term = zbar.pow(k - j) * f.eval(z);
            acc += &term.scale(&w);
        }
        acc
    }

    /// The slice Cauchy-Riemann derivative of order `j` as a function on `C_I`.
    pub fn slice_cr_derivative<T: Scalar>(
        &self,
        unit: UnitImaginary<T>,
        j: u32,
    ) -> SliceCrDerivative<'_, T> {
        SliceCrDerivative {
            f: self,
            unit,
            order: j,
        }
    }

    /// Component form of `V(f)`: order `n - 1` with `zeta_h = 2 (h + 1) f_{h+1}`.
    pub fn v_image(&self) -> Self {
        if self.components.len() == 1 {
            return Self::zero(1);
        }
        let comps = self.components[1..]
            .iter()
            .enumerate()
            .map(|(h, f)| f.scale(&<Rational as Scalar>::from_i64(2 * (h as i64 + 1))))
            .collect();
        Self { components: comps }
    }

    /// Restriction to `C_I` split as `F(z) + G(z) J` for a unit `J` orthogonal to `I`.
    pub fn restrict<T: Scalar>(
        &self,
        unit: &UnitImaginary<T>,
        companion: &UnitImaginary<T>,
    ) -> Result<SliceRestriction<T>, SliceError> {
        if !unit.anticommutes(companion, 1e-12) {
            return Err(SliceError::NotOrthogonal);
        }
        let iq = unit.as_quat();
        let jq = companion.as_quat();
        let kq = iq * jq;
        let dot = |a: &Quaternion<T>, u: &Quaternion<T>| -(a * u).w;
        let mut f_part = ComplexPolyanalytic::default();
        let mut g_part = ComplexPolyanalytic::default();
        for (k, comp) in self.components.iter().enumerate() {
            for (m, a) in comp.coeffs().iter().enumerate() {
                let a = Quaternion::<T>::from_rational(a);
                let vec = a.vector();
                let alpha = Complex::new(a.w.clone(), dot(&vec, iq));
                let beta = Complex::new(dot(&vec, jq), dot(&vec, &kq));
                f_part.add_term(k as u32, m as u32, alpha);
                g_part.add_term(k as u32, m as u32, beta);
            }
        }
        Ok(SliceRestriction {
            function: self.clone(),
            unit: unit.clone(),
            companion: companion.clone(),
            f_part,
            g_part,
        })
    }

    /// `{"order": n, "components": [[coef, ...], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "components": self.components.iter().map(SliceRegularSeries::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, SliceError> {
        let comps = v
            .get("components")
            .and_then(Value::as_array)
            .ok_or_else(|| SliceError::Json("missing \"components\" array".into()))?;
        let mut components = comps
            .iter()
            .map(SliceRegularSeries::from_json)
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(order) = v.get("order") {
            let order = order
                .as_u64()
                .filter(|&o| o >= 1)
                .ok_or_else(|| SliceError::Json(format!("order must be a positive integer, found {order}")))?
                as usize;
            if components.len() > order {
                return Err(SliceError::Json(format!(
                    "{} components given for order {order}",
                    components.len()
                )));
            }
            components.resize(order, SliceRegularSeries::zero());
        }
        Self::new(components)
    }
}

/// Right slice polyanalytic `g(q) = sum_k g_k(q) qbar^k` with right slice
/// regular components `g_k(q) = sum_m a_m q^m` (coefficients on the left).
#[derive(Clone, PartialEq, Debug)]
pub struct RightSlicePolyFn {
    components: Vec<SliceRegularSeries>,
}

impl RightSlicePolyFn {
    pub fn new(components: Vec<SliceRegularSeries>) -> Result<Self, SliceError> {
        if components.is_empty() {
            return Err(SliceError::NoComponents);
        }
        Ok(Self { components })
    }

    /// Mirrors a left function: the same coefficient lists, read with the
    /// coefficients on the left.
    pub fn mirror_of(f: &SlicePolyFn) -> Self {
        Self {
            components: f.components().to_vec(),
        }
    }

    pub fn order(&self) -> u32 {
        self.components.len() as u32
    }

    pub fn padded(&self, order: u32) -> Self {
        let mut c = self.components.clone();
        while (c.len() as u32) < order {
            c.push(SliceRegularSeries::zero());
        }
        Self { components: c }
    }

    pub fn eval<T: Scalar>(&self, q: &Quaternion<T>) -> Quaternion<T> {
        let qbar = q.conj();
        let mut power = Quaternion::one();
        let mut acc = Quaternion::zero();
        for (k, g) in self.components.iter().enumerate() {
            if k > 0 {
                power = &power * &qbar;
            }
            acc += &(g.eval_right(q) * &power);
        }
        acc
    }

    /// Right-sided slice derivative `(g) dbar_I^j = sum_{k>=j} k!/(k-j)! g_k(z) zbar^(k-j)`.
    pub fn right_cr_derivative_at<T: Scalar>(&self, j: u32, z: &Quaternion<T>) -> Quaternion<T> {
        let zbar = z.conj();
        let mut acc = Quaternion::zero();
        for (k, g) in self.components.iter().enumerate().skip(j as usize) {
            let k = k as u32;
            let w = T::from_rational(&falling_factorial(k, j));
            let term = g.eval_right(z) * zbar.pow(k - j);
            acc += &term.scale(&w);
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "components": self.components.iter().map(SliceRegularSeries::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, SliceError> {
        SlicePolyFn::from_json(v).map(|f| Self::mirror_of(&f))
    }
}

/// View of `dbar_I^j f` on the slice `C_I`.
#[derive(Clone)]
pub struct SliceCrDerivative<'a, T> {
    f: &'a SlicePolyFn,
    unit: UnitImaginary<T>,
    order: u32,
}

impl<T: Scalar> SliceCrDerivative<'_, T> {
    /// Value at `z = x + I y`.
    pub fn at(&self, x: &T, y: &T) -> Quaternion<T> {
        self.f.cr_derivative_at(self.order, &self.unit.point(x, y))
    }
}

/// Complex polyanalytic polynomial `sum c_{k,m} zbar^k z^m` on `C_I`, with
/// `x + y I` identified with `x + i y`.
#[derive(Clone, PartialEq, Debug)]
pub struct ComplexPolyanalytic<T: Clone> {
    terms: BTreeMap<(u32, u32), Complex<T>>,
}

impl<T: Clone> Default for ComplexPolyanalytic<T> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<T: Scalar> ComplexPolyanalytic<T> {
    fn add_term(&mut self, zbar_pow: u32, z_pow: u32, c: Complex<T>) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry((zbar_pow, z_pow))
            .or_insert_with(Complex::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&(zbar_pow, z_pow));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `zbar^k z^m`.
    pub fn coeff(&self, zbar_pow: u32, z_pow: u32) -> Complex<T> {
        self.terms
            .get(&(zbar_pow, z_pow))
            .cloned()
            .unwrap_or_else(Complex::zero)
    }

    /// Polyanalytic order: one more than the highest power of `zbar`.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|(k, _)| k + 1).max().unwrap_or(1)
    }

    pub fn eval(&self, z: &Complex<T>) -> Complex<T> {
        let zbar = z.conj();
        self.terms.iter().fold(Complex::zero(), |acc, ((k, m), c)| {
            acc + zbar.powu(*k) * z.powu(*m) * c.clone()
        })
    }
}

/// Restriction of a slice polyanalytic function to `C_I` with its splitting
/// `f_I(z) = F(z) + G(z) J`.
#[derive(Clone, Debug)]
pub struct SliceRestriction<T: Scalar> {
    function: SlicePolyFn,
    pub unit: UnitImaginary<T>,
    pub companion: UnitImaginary<T>,
    pub f_part: ComplexPolyanalytic<T>,
    pub g_part: ComplexPolyanalytic<T>,
}

impl<T: Scalar> SliceRestriction<T> {
    /// `x + y I` as a quaternion.
    pub fn embed(&self, c: &Complex<T>) -> Quaternion<T> {
        self.unit.point(&c.re, &c.im)
    }

    /// `f_I(x + I y)`.
    pub fn eval(&self, x: &T, y: &T) -> Quaternion<T> {
        self.function.eval(&self.unit.point(x, y))
    }

    /// `F(z) + G(z) J` at `z = x + I y`.
    pub fn reconstruct(&self, x: &T, y: &T) -> Quaternion<T> {
        let z = Complex::new(x.clone(), y.clone());
        let f = self.embed(&self.f_part.eval(&z));
        let g = self.embed(&self.g_part.eval(&z));
        f + g * self.companion.as_quat()
    }
}

/// Representation-formula extension of a function known on `C_J`:
/// `ext(q) = (phi(z) + phi(zbar)) / 2 + I_q J (phi(zbar) - phi(z)) / 2` with
/// `q = x + I_q y` and `z = x + J y`.
pub fn slice_extend<F>(phi: F, slice_unit: &UnitImaginary<f64>, q: &FloatQuat) -> FloatQuat
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    let sc = q.slice_decompose();
    let z = slice_unit.point(&sc.x, &sc.y);
    let zbar = z.conj();
    let pz = phi(&z);
    let pzbar = phi(&zbar);
    let even = (&pz + &pzbar).scale(&0.5);
    let odd = (&pzbar - &pz).scale(&0.5);
    even + sc.unit.as_quat() * slice_unit.as_quat() * odd
}

/// Unique poly-decomposition of an expansion `p` of order at most `n`.
///
/// The top component is `V^{n-1}(p) / (2^{n-1} (n-1)!)`; it is peeled off and
/// the procedure repeats on the remainder. The result has minimal order.
pub fn decompose(p: &QPoly, n: u32) -> Result<SlicePolyFn, SliceError> {
    if n == 0 {
        return Err(PolyError::InvalidOrder.into());
    }
    let not_in_class = |reason: String| SliceError::NotInClass { order: n, reason };
    p.check_degree(DEFAULT_MAX_DEGREE)?;
    let mut rest = p.clone();
    let mut comps = vec![SliceRegularSeries::zero(); n as usize];
    for k in (1..n).rev() {
        let top = global_v_pow(&rest, k)
            .map_err(|e| not_in_class(format!("V^{k} does not extend: {e}")))?;
        let factor = crate::qpoly::top_component_factor(k + 1);
        let fk_poly = top.scale(&(Rational::one() / factor));
        let fk = SliceRegularSeries::from_qpoly(&fk_poly)
            .ok_or_else(|| not_in_class(format!("V^{k} image is not slice regular")))?;
        rest = &rest - &(&expand_qbar_power(k) * &fk_poly);
        comps[k as usize] = fk;
    }
    comps[0] = SliceRegularSeries::from_qpoly(&rest)
        .ok_or_else(|| not_in_class("residual component is not slice regular".into()))?;
    Ok(SlicePolyFn { components: comps }.minimal())
}

/// `Psi_f^k = qbar^k f` as an order `k + 1` function.
pub fn appell_apply(f: &SliceRegularSeries, k: u32) -> SlicePolyFn {
    let mut comps = vec![SliceRegularSeries::zero(); k as usize + 1];
    comps[k as usize] = f.clone();
    SlicePolyFn { components: comps }
}

/// Checks `V(Psi_f^k) / 2 = k Psi_f^{k-1}` (and `= 0` for `k = 0`) exactly.
pub fn appell_check(f: &SliceRegularSeries, k: u32) -> Result<bool, PolyError> {
    let lhs = global_v(&appell_apply(f, k).expand())?.scale(&Rational::new(1.into(), 2.into()));
    let rhs = if k == 0 {
        QPoly::zero()
    } else {
        appell_apply(f, k - 1)
            .expand()
            .scale(&<Rational as Scalar>::from_i64(i64::from(k)))
    };
    Ok(lhs == rhs)
}
