//! Exact sparse polynomials in `x0, x1, x2, x3` with quaternion coefficients.
//!
//! A term is a real monomial `x0^a0 x1^a1 x2^a2 x3^a3` with its quaternion
//! coefficient placed on the right. Because the monomials are real they commute
//! with every quaternion, so placement only matters for serialization and for
//! the explicit left factors (`q`, `qbar`, `vec(q)`, `e_l`) the operators apply.

mod ops;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{json, Value};
use thiserror::Error;

use crate::quat::{ExactQuat, Quaternion};
use crate::scalar::{Rational, Scalar};

pub use ops::{
    build_poly_fueter, c_n, cauchy_fueter, cauchy_fueter_pow, conjugate_cf, divide_by_vecnorm_sq,
    global_g, global_v, global_v_pow, is_poly_fueter, laplacian, partial, tau_n,
    top_component_factor, vector_euler,
};

/// Exponent vector `(a0, a1, a2, a3)`.
pub type Exponent = [u32; 4];

/// Maximum total degree accepted by the capped entry points.
pub const DEFAULT_MAX_DEGREE: u32 = 64;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PolyError {
    #[error("polynomial is not divisible by x1^2 + x2^2 + x3^2 (remainder {remainder})")]
    NotDivisible { remainder: QPoly },
    #[error("component {index} is not Fueter regular")]
    NotFueterRegular { index: usize },
    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },
    #[error("order must be at least 1")]
    InvalidOrder,
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}

/// Canonical sparse polynomial: no stored zero coefficients, terms ordered
/// lexicographically by exponent.
#[derive(Clone, PartialEq, Default)]
pub struct QPoly {
    terms: BTreeMap<Exponent, ExactQuat>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ExactQuat::one())
    }

    pub fn constant(c: ExactQuat) -> Self {
        Self::monomial([0; 4], c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(ExactQuat::from_i64s(c, 0, 0, 0))
    }

    pub fn monomial(exp: Exponent, coef: ExactQuat) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &coef);
        p
    }

    /// The coordinate function `x_l`.
    pub fn var(l: usize) -> Self {
        let mut e = [0; 4];
        e[l] = 1;
        Self::monomial(e, ExactQuat::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, ExactQuat)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// `vec(q) = x1 i + x2 j + x3 k`.
    pub fn vec_q() -> Self {
        Self::from_terms((1..4).map(|l| {
            let mut e = [0; 4];
            e[l] = 1;
            (e, ExactQuat::basis(l))
        }))
    }

    /// `|vec(q)|^2 = x1^2 + x2^2 + x3^2`.
    pub fn vec_norm_sq() -> Self {
        Self::from_terms((1..4).map(|l| {
            let mut e = [0; 4];
            e[l] = 2;
            (e, ExactQuat::one())
        }))
    }

    pub fn add_term(&mut self, exp: Exponent, coef: &ExactQuat) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(c) => {
                *c += coef;
                if c.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coef.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &ExactQuat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> ExactQuat {
        self.terms.get(exp).cloned().unwrap_or_else(ExactQuat::zero)
    }

    /// Maximum total degree; `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<F: FnMut(&Exponent, &ExactQuat) -> ExactQuat>(&self, mut f: F) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, &f(e, c));
        }
        out
    }

    /// `a * p` with the quaternion multiplying every coefficient from the left.
    pub fn left_mul_quat(&self, a: &ExactQuat) -> Self {
        self.map_coeffs(|_, c| a * c)
    }

    /// `p * a` with the quaternion multiplying every coefficient from the right.
    pub fn right_mul_quat(&self, a: &ExactQuat) -> Self {
        self.map_coeffs(|_, c| c * a)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map_coeffs(|_, c| c.scale(s))
    }

    /// `x0^k * p`.
    pub fn mul_x0_pow(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + k, e[1], e[2], e[3]], c.clone()))
                .collect(),
        }
    }

    /// Product that refuses to build anything above `cap` in total degree.
    pub fn checked_mul(&self, rhs: &Self, cap: u32) -> Result<Self, PolyError> {
        if let (Some(a), Some(b)) = (self.degree(), rhs.degree()) {
            if a + b > cap {
                return Err(PolyError::DegreeCapExceeded { degree: a + b, cap });
            }
        }
        Ok(self * rhs)
    }

    /// Checks the total degree against `cap`.
    pub fn check_degree(&self, cap: u32) -> Result<(), PolyError> {
        match self.degree() {
            Some(d) if d > cap => Err(PolyError::DegreeCapExceeded { degree: d, cap }),
            _ => Ok(()),
        }
    }

    /// Substitutes the real coordinates of `q`; each monomial value multiplies
    /// its coefficient from the left (equivalently the right, being real).
    pub fn evaluate<T: Scalar>(&self, q: &Quaternion<T>) -> Quaternion<T> {
        let Some(deg) = self.degree() else {
            return Quaternion::zero();
        };
        let coords = q.components();
        let powers: Vec<Vec<T>> = coords
            .iter()
            .map(|&c| {
                let mut v = Vec::with_capacity(deg as usize + 1);
                v.push(T::one());
                for i in 0..deg as usize {
                    let next = v[i].mul_ref(c);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Quaternion::zero();
        for (e, c) in &self.terms {
            let m = (0..4).fold(T::one(), |m, l| m.mul_ref(&powers[l][e[l] as usize]));
            acc += &Quaternion::from_rational(c).scale(&m);
        }
        acc
    }

    /// Canonical JSON: `{"terms":[{"exp":[a0,a1,a2,a3],"coef":[w,x,y,z]}]}`,
    /// lexicographic in the exponent, exact scalars as `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({"exp": e, "coef": c.to_json()}))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self, PolyError> {
        let err = |m: String| PolyError::Json(m);
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| err("missing \"terms\" array".into()))?;
        let mut p = Self::zero();
        for t in terms {
            let exp = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| err(format!("term without \"exp\": {t}")))?;
            if exp.len() != 4 {
                return Err(err(format!("exponent must have 4 entries: {t}")));
            }
            let mut e = [0u32; 4];
            for (slot, a) in e.iter_mut().zip(exp) {
                *slot = a
                    .as_u64()
                    .and_then(|a| u32::try_from(a).ok())
                    .ok_or_else(|| err(format!("bad exponent entry {a}")))?;
            }
            let coef = t
                .get("coef")
                .ok_or_else(|| err(format!("term without \"coef\": {t}")))?;
            let coef = ExactQuat::from_json(coef).map_err(err)?;
            p.add_term(e, &coef);
        }
        Ok(p)
    }
}

/// The polynomial equal to `q^n` as a function on the quaternions.
pub fn expand_q_power(n: u32) -> QPoly {
    power_of(&QPoly::var_q(), n)
}

/// The polynomial equal to `qbar^k`.
pub fn expand_qbar_power(k: u32) -> QPoly {
    power_of(&QPoly::var_qbar(), k)
}

fn power_of(base: &QPoly, n: u32) -> QPoly {
    (0..n).fold(QPoly::one(), |acc, _| &acc * base)
}

impl QPoly {
    /// `q = x0 + x1 i + x2 j + x3 k`.
    pub fn var_q() -> Self {
        &Self::var(0) + &Self::vec_q()
    }

    /// `qbar = x0 - x1 i - x2 j - x3 k`.
    pub fn var_qbar() -> Self {
        &Self::var(0) - &Self::vec_q()
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.map_coeffs(|_, c| -c)
    }
}

/// Coefficients multiply in operand order: `(m1 a)(m2 b) = m1 m2 (a b)`.
impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut acc: BTreeMap<Exponent, ExactQuat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                let prod = c1 * c2;
                acc.entry(e)
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        QPoly { terms: acc }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: &QPoly) -> QPoly {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})")?;
            for (l, a) in e.iter().enumerate() {
                match a {
                    0 => {}
                    1 => write!(f, "*x{l}")?,
                    _ => write!(f, "*x{l}^{a}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

pub(crate) fn rat(n: i64) -> Rational {
    <Rational as Scalar>::from_i64(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::FloatQuat;

    fn xq(w: i64, x: i64, y: i64, z: i64) -> ExactQuat {
        ExactQuat::from_i64s(w, x, y, z)
    }

    #[test]
    fn q_powers() {
        assert_eq!(expand_q_power(0), QPoly::one());
        // q^2 = x0^2 - x1^2 - x2^2 - x3^2 + 2x0x1 i + 2x0x2 j + 2x0x3 k
        let expected = QPoly::from_terms([
            ([2, 0, 0, 0], xq(1, 0, 0, 0)),
            ([0, 2, 0, 0], xq(-1, 0, 0, 0)),
            ([0, 0, 2, 0], xq(-1, 0, 0, 0)),
            ([0, 0, 0, 2], xq(-1, 0, 0, 0)),
            ([1, 1, 0, 0], xq(0, 2, 0, 0)),
            ([1, 0, 1, 0], xq(0, 0, 2, 0)),
            ([1, 0, 0, 1], xq(0, 0, 0, 2)),
        ]);
        assert_eq!(expand_q_power(2), expected);
        let qbar = QPoly::from_terms([
            ([1, 0, 0, 0], xq(1, 0, 0, 0)),
            ([0, 1, 0, 0], xq(0, -1, 0, 0)),
            ([0, 0, 1, 0], xq(0, 0, -1, 0)),
            ([0, 0, 0, 1], xq(0, 0, 0, -1)),
        ]);
        assert_eq!(expand_qbar_power(1), qbar);
    }

    #[test]
    fn evaluation() {
        assert_eq!(expand_q_power(2).evaluate(&ExactQuat::i()), -ExactQuat::one());
        assert_eq!(
            expand_qbar_power(1).evaluate(&xq(1, 0, 1, 0)),
            xq(1, 0, -1, 0)
        );
        let p = FloatQuat::new(0.3, -0.2, 0.7, 0.1);
        let direct = p.pow(5);
        assert!(expand_q_power(5).evaluate(&p).is_close(&direct, 1e-14));
    }

    #[test]
    fn product_evaluates_pointwise() {
        let a = QPoly::from_terms([([1, 0, 2, 0], xq(1, 2, 0, -1)), ([0, 0, 0, 1], xq(0, 0, 3, 1))]);
        let b = QPoly::from_terms([([0, 1, 0, 0], xq(2, 0, 1, 1)), ([0, 0, 0, 0], xq(0, 1, 0, 0))]);
        let q = xq(2, -1, 3, 1);
        assert_eq!((&a * &b).evaluate(&q), a.evaluate(&q) * b.evaluate(&q));
        assert_ne!((&a * &b), (&b * &a));
    }

    #[test]
    fn canonical_form_and_degree() {
        let p = QPoly::var(1) - QPoly::var(1);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(expand_q_power(3).degree(), Some(3));
        assert!(QPoly::monomial([1, 0, 0, 0], ExactQuat::zero()).is_zero());
    }

    #[test]
    fn degree_cap() {
        let q = expand_q_power(3);
        assert!(q.checked_mul(&q, 6).is_ok());
        assert_eq!(
            q.checked_mul(&q, 5),
            Err(PolyError::DegreeCapExceeded { degree: 6, cap: 5 })
        );
        assert!(expand_q_power(65).check_degree(DEFAULT_MAX_DEGREE).is_err());
    }

    #[test]
    fn json_canonical() {
        let p = &QPoly::var(0).scale(&Rational::new(1.into(), 2.into())) + &QPoly::from_i64(-3);
        let v = p.to_json();
        assert_eq!(
            v,
            json!({"terms":[
                {"exp":[0,0,0,0],"coef":["-3","0","0","0"]},
                {"exp":[1,0,0,0],"coef":["1/2","0","0","0"]}
            ]})
        );
        assert_eq!(QPoly::from_json(&v).unwrap(), p);
        assert!(QPoly::from_json(&json!({"terms":[{"exp":[1,0,0],"coef":[1,0,0,0]}]})).is_err());
        assert!(QPoly::from_json(&json!({"order": 2})).is_err());
    }
}
