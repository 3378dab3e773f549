//! Scalar backends for quaternion arithmetic.
//!
//! Two backends are supported: exact arbitrary-precision rationals ([`Rational`])
//! for polynomial identity work and binary64 (`f64`) for kernel evaluation and
//! quadrature. Conversion from exact to float is explicit and one-way
//! ([`Scalar::to_f64`]); the reverse direction only exists for parsing user
//! input, where a float literal is read as the exact binary value it denotes.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use serde_json::Value;
use thiserror::Error;

/// Arbitrary precision rational number, the exact backend.
pub type Rational = num_rational::BigRational;

/// Default absolute tolerance for float comparisons of O(1) quantities.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ScalarParseError {
    #[error("cannot parse scalar from {0:?}")]
    Malformed(String),
    #[error("non-finite value {0} cannot be represented exactly")]
    NonFinite(f64),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Field operations shared by both backends.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    /// `true` for the exact backend; float comparisons ignore tolerances otherwise.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;

    /// Square root when representable in this backend (always for non-negative
    /// floats, only for perfect squares of rationals).
    fn sqrt(&self) -> Option<Self>;

    /// Exact equality for the exact backend, `|a - b| <= tol` for floats.
    fn is_close(&self, other: &Self, tol: f64) -> bool;

    /// Exact equality for the exact backend, within `ulps` units of relative
    /// precision for floats.
    fn near_ulps(&self, other: &Self, ulps: u32) -> bool;

    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, ScalarParseError>;

    fn abs_f64(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sqrt(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(f64::sqrt(*self))
        } else {
            None
        }
    }

    fn is_close(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }

    fn near_ulps(&self, other: &Self, ulps: u32) -> bool {
        let scale = self.abs().max(other.abs()).max(1.0);
        (self - other).abs() <= f64::from(ulps) * f64::EPSILON * scale
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    }

    fn from_json(v: &Value) -> Result<Self, ScalarParseError> {
        match v {
            Value::Number(n) => n
                .as_f64()
                .ok_or_else(|| ScalarParseError::Malformed(n.to_string())),
            Value::String(s) => parse_rational(s).map(|r| Self::from_rational(&r)),
            other => Err(ScalarParseError::Malformed(other.to_string())),
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(Rational::new(rn, rd))
        } else {
            None
        }
    }

    fn is_close(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn near_ulps(&self, other: &Self, _ulps: u32) -> bool {
        self == other
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self, ScalarParseError> {
        match v {
            Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(<Rational as Scalar>::from_i64(i))
                } else {
                    let f = n
                        .as_f64()
                        .ok_or_else(|| ScalarParseError::Malformed(n.to_string()))?;
                    Rational::from_f64(f).ok_or(ScalarParseError::NonFinite(f))
                }
            }
            Value::String(s) => parse_rational(s),
            other => Err(ScalarParseError::Malformed(other.to_string())),
        }
    }
}

/// Parses `"p/q"`, `"p"` or a plain decimal like `"-0.125"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let t = s.trim();
    let bad = || ScalarParseError::Malformed(s.to_string());
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(ScalarParseError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        let digits = format!("{int_digits}{frac}");
        let mut numer = BigInt::from_str(if digits.is_empty() { "0" } else { &digits })
            .map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(numer, denom));
    }
    BigInt::from_str(t)
        .map(Rational::from_integer)
        .map_err(|_| bad())
}

/// `n!` as an exact rational.
pub fn factorial(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}

/// `n! / (n-j)!` as an exact rational; zero when `j > n`.
pub fn falling_factorial(n: u32, j: u32) -> Rational {
    if j > n {
        return Rational::zero();
    }
    ((n - j + 1)..=n).fold(Rational::one(), |acc, k| acc * Rational::from_integer(k.into()))
}
