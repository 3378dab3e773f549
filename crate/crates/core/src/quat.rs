//! Quaternion arithmetic over the exact and float scalar backends, imaginary
//! units, slice coordinates `q = x + I y` and the spheres `[s]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use thiserror::Error;

use crate::scalar::{Rational, Scalar, DEFAULT_TOL};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum QuatError {
    #[error("division by the zero quaternion")]
    ZeroDivision,
    #[error("{0} is not an imaginary unit (u^2 != -1)")]
    NotUnitImaginary(String),
    #[error("|vec(q)| of {0} is irrational; slice decomposition needs the float backend")]
    IrrationalModulus(String),
}

/// A quaternion `w + x i + y j + z k`.
#[derive(Clone, PartialEq, Default)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

pub type ExactQuat = Quaternion<Rational>;
pub type FloatQuat = Quaternion<f64>;

impl<T: Scalar> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_real(w: T) -> Self {
        Self::new(w, T::zero(), T::zero(), T::zero())
    }

    pub fn from_i64s(w: i64, x: i64, y: i64, z: i64) -> Self {
        Self::new(T::from_i64(w), T::from_i64(x), T::from_i64(y), T::from_i64(z))
    }

    pub fn zero() -> Self {
        Self::from_real(T::zero())
    }

    pub fn one() -> Self {
        Self::from_real(T::one())
    }

    pub fn i() -> Self {
        Self::from_i64s(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_i64s(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_i64s(0, 0, 0, 1)
    }

    /// `e_0 = 1, e_1 = i, e_2 = j, e_3 = k`.
    pub fn basis(l: usize) -> Self {
        match l {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::j(),
            3 => Self::k(),
            _ => panic!("basis index {l} out of range 0..4"),
        }
    }

    pub fn components(&self) -> [&T; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    pub fn component(&self, l: usize) -> &T {
        self.components()[l]
    }

    pub fn re(&self) -> &T {
        &self.w
    }

    /// The vector part `x i + y j + z k` as a pure quaternion.
    pub fn vector(&self) -> Self {
        Self::new(T::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    pub fn norm_sq(&self) -> T {
        self.w.mul_ref(&self.w).add_ref(&self.vec_norm_sq())
    }

    /// `|vec(q)|^2 = x^2 + y^2 + z^2`.
    pub fn vec_norm_sq(&self) -> T {
        self.x
            .mul_ref(&self.x)
            .add_ref(&self.y.mul_ref(&self.y))
            .add_ref(&self.z.mul_ref(&self.z))
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(
            self.w.mul_ref(s),
            self.x.mul_ref(s),
            self.y.mul_ref(s),
            self.z.mul_ref(s),
        )
    }

    pub fn inverse(&self) -> Result<Self, QuatError> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(QuatError::ZeroDivision);
        }
        let c = self.conj();
        Ok(Self::new(
            c.w.div_ref(&n),
            c.x.div_ref(&n),
            c.y.div_ref(&n),
            c.z.div_ref(&n),
        ))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn to_f64(&self) -> FloatQuat {
        Quaternion::new(self.w.to_f64(), self.x.to_f64(), self.y.to_f64(), self.z.to_f64())
    }

    pub fn from_rational(q: &ExactQuat) -> Self {
        Self::new(
            T::from_rational(&q.w),
            T::from_rational(&q.x),
            T::from_rational(&q.y),
            T::from_rational(&q.z),
        )
    }

    /// Component-wise comparison: exact for rationals, absolute `tol` for floats.
    pub fn is_close(&self, other: &Self, tol: f64) -> bool {
        self.components()
            .iter()
            .zip(other.components())
            .all(|(a, b)| a.is_close(b, tol))
    }

    /// Euclidean distance computed in binary64.
    pub fn dist(&self, other: &Self) -> f64 {
        (self - other).to_f64().norm()
    }

    /// `q = x + I y` with `y >= 0`. Real quaternions get `I = i`. Fails on the
    /// exact backend when `|vec(q)|` is irrational.
    pub fn try_slice_decompose(&self) -> Result<SliceCoords<T>, QuatError> {
        let vn2 = self.vec_norm_sq();
        if vn2.is_zero() {
            return Ok(SliceCoords {
                x: self.w.clone(),
                y: T::zero(),
                unit: UnitImaginary::i(),
            });
        }
        let y = vn2
            .sqrt()
            .ok_or_else(|| QuatError::IrrationalModulus(self.to_string()))?;
        let u = Quaternion::new(
            T::zero(),
            self.x.div_ref(&y),
            self.y.div_ref(&y),
            self.z.div_ref(&y),
        );
        Ok(SliceCoords {
            x: self.w.clone(),
            y,
            unit: UnitImaginary(u),
        })
    }
}

impl FloatQuat {
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn vec_norm(&self) -> f64 {
        self.vec_norm_sq().sqrt()
    }

    pub fn slice_decompose(&self) -> SliceCoords<f64> {
        self.try_slice_decompose()
            .expect("float square roots always exist")
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|c| c.is_finite())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<T: Scalar> $tr<&Quaternion<T>> for &Quaternion<T> {
            type Output = Quaternion<T>;
            fn $method(self, rhs: &Quaternion<T>) -> Quaternion<T> {
                let f: fn(&Quaternion<T>, &Quaternion<T>) -> Quaternion<T> = $body;
                f(self, rhs)
            }
        }
        impl<T: Scalar> $tr<Quaternion<T>> for Quaternion<T> {
            type Output = Quaternion<T>;
            fn $method(self, rhs: Quaternion<T>) -> Quaternion<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Quaternion<T>> for Quaternion<T> {
            type Output = Quaternion<T>;
            fn $method(self, rhs: &Quaternion<T>) -> Quaternion<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: Scalar> $tr<Quaternion<T>> for &Quaternion<T> {
            type Output = Quaternion<T>;
            fn $method(self, rhs: Quaternion<T>) -> Quaternion<T> {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Quaternion::new(
    a.w.add_ref(&b.w),
    a.x.add_ref(&b.x),
    a.y.add_ref(&b.y),
    a.z.add_ref(&b.z)
));

forward_binop!(Sub, sub, |a, b| Quaternion::new(
    a.w.sub_ref(&b.w),
    a.x.sub_ref(&b.x),
    a.y.sub_ref(&b.y),
    a.z.sub_ref(&b.z)
));

// Hamilton product: ij = k, jk = i, ki = j.
forward_binop!(Mul, mul, |a, b| {
    let m = |p: &T, q: &T| p.mul_ref(q);
    Quaternion::new(
        m(&a.w, &b.w).sub_ref(&m(&a.x, &b.x)).sub_ref(&m(&a.y, &b.y)).sub_ref(&m(&a.z, &b.z)),
        m(&a.w, &b.x).add_ref(&m(&a.x, &b.w)).add_ref(&m(&a.y, &b.z)).sub_ref(&m(&a.z, &b.y)),
        m(&a.w, &b.y).sub_ref(&m(&a.x, &b.z)).add_ref(&m(&a.y, &b.w)).add_ref(&m(&a.z, &b.x)),
        m(&a.w, &b.z).add_ref(&m(&a.x, &b.y)).sub_ref(&m(&a.y, &b.x)).add_ref(&m(&a.z, &b.w)),
    )
});

impl<T: Scalar> Neg for Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Self {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl<T: Scalar> Neg for &Quaternion<T> {
    type Output = Quaternion<T>;
    fn neg(self) -> Quaternion<T> {
        -self.clone()
    }
}

impl<T: Scalar> AddAssign<&Quaternion<T>> for Quaternion<T> {
    fn add_assign(&mut self, rhs: &Quaternion<T>) {
        self.w = self.w.add_ref(&rhs.w);
        self.x = self.x.add_ref(&rhs.x);
        self.y = self.y.add_ref(&rhs.y);
        self.z = self.z.add_ref(&rhs.z);
    }
}

impl<T: Scalar> SubAssign<&Quaternion<T>> for Quaternion<T> {
    fn sub_assign(&mut self, rhs: &Quaternion<T>) {
        self.w = self.w.sub_ref(&rhs.w);
        self.x = self.x.sub_ref(&rhs.x);
        self.y = self.y.sub_ref(&rhs.y);
        self.z = self.z.sub_ref(&rhs.z);
    }
}

impl<T: Scalar> std::iter::Sum for Quaternion<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, q| {
            acc += &q;
            acc
        })
    }
}

impl<T: fmt::Display> fmt::Display for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.w, self.x, self.y, self.z)
    }
}

impl<T: fmt::Display> fmt::Debug for Quaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}, {}]", self.w, self.x, self.y, self.z)
    }
}

impl<T: Scalar> Quaternion<T> {
    /// JSON 4-array `[w, x, y, z]`; exact scalars become `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        Value::Array(self.components().iter().map(|c| c.to_json()).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let arr = v
            .as_array()
            .ok_or_else(|| format!("expected quaternion 4-array, found {v}"))?;
        if arr.len() != 4 {
            return Err(format!("expected 4 components, found {}", arr.len()));
        }
        let c = arr
            .iter()
            .map(T::from_json)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let mut it = c.into_iter();
        let mut next = || it.next().expect("length checked");
        Ok(Self::new(next(), next(), next(), next()))
    }
}

impl<T: Scalar> Serialize for Quaternion<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Quaternion<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}

/// An element of the sphere of imaginary units `S = { u : u^2 = -1 }`.
#[derive(Clone, PartialEq)]
pub struct UnitImaginary<T>(Quaternion<T>);

impl<T: fmt::Display> fmt::Debug for UnitImaginary<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnitImaginary({:?})", self.0)
    }
}

/// Tolerance, in ulps, for accepting float imaginary units.
pub const UNIT_ULPS: u32 = 8;

impl<T: Scalar> UnitImaginary<T> {
    /// Validates `u^2 = -1`, i.e. zero real part and unit vector part.
    pub fn new(u: Quaternion<T>) -> Result<Self, QuatError> {
        let ok = u.w.near_ulps(&T::zero(), UNIT_ULPS)
            && u.vec_norm_sq().near_ulps(&T::one(), UNIT_ULPS);
        if ok {
            Ok(Self(u))
        } else {
            Err(QuatError::NotUnitImaginary(u.to_string()))
        }
    }

    pub fn i() -> Self {
        Self(Quaternion::i())
    }

    pub fn j() -> Self {
        Self(Quaternion::j())
    }

    pub fn k() -> Self {
        Self(Quaternion::k())
    }

    pub fn as_quat(&self) -> &Quaternion<T> {
        &self.0
    }

    pub fn into_quat(self) -> Quaternion<T> {
        self.0
    }

    /// `x + I y`.
    pub fn point(&self, x: &T, y: &T) -> Quaternion<T> {
        let mut q = self.0.scale(y);
        q.w = q.w.add_ref(x);
        q
    }

    /// `I J = -J I`, which for imaginary units is orthogonality.
    pub fn anticommutes(&self, other: &Self, tol: f64) -> bool {
        let ij = &self.0 * &other.0;
        let ji = &other.0 * &self.0;
        (ij + ji).is_close(&Quaternion::zero(), tol)
    }

    pub fn to_f64(&self) -> UnitImaginary<f64> {
        UnitImaginary(self.0.to_f64())
    }
}

impl UnitImaginary<f64> {
    /// Normalizes a nonzero direction `(x, y, z)` into a unit.
    pub fn from_direction(x: f64, y: f64, z: f64) -> Result<Self, QuatError> {
        let n = (x * x + y * y + z * z).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(QuatError::NotUnitImaginary(format!("[{x}, {y}, {z}]")));
        }
        Self::new(Quaternion::new(0.0, x / n, y / n, z / n))
    }

    /// A canonical unit orthogonal to `self`: `I x e1`, falling back to `I x e2`.
    pub fn orthogonal_companion(&self) -> Self {
        let u = &self.0;
        let cross = |a: [f64; 3], b: [f64; 3]| {
            [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ]
        };
        let v = [u.x, u.y, u.z];
        let mut c = cross(v, [1.0, 0.0, 0.0]);
        if c.iter().map(|t| t * t).sum::<f64>() < 1e-6 {
            c = cross(v, [0.0, 1.0, 0.0]);
        }
        Self::from_direction(c[0], c[1], c[2]).expect("cross product with a basis vector is nonzero")
    }
}

/// `q = x + I y` with `y >= 0`.
#[derive(Clone, PartialEq)]
pub struct SliceCoords<T> {
    pub x: T,
    pub y: T,
    pub unit: UnitImaginary<T>,
}

impl<T: fmt::Display> fmt::Debug for SliceCoords<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SliceCoords {{ x: {}, y: {}, unit: {:?} }}", self.x, self.y, self.unit)
    }
}

impl<T: Scalar> SliceCoords<T> {
    pub fn recompose(&self) -> Quaternion<T> {
        self.unit.point(&self.x, &self.y)
    }
}

/// The sphere `[s] = { Re(s) + I |vec(s)| : I in S }`.
///
/// Stores `|vec(s)|^2` so that membership is decidable on the exact backend.
#[derive(Clone, PartialEq, Debug)]
pub struct QSphere<T> {
    pub re: T,
    pub rad_sq: T,
}

impl<T: Scalar> QSphere<T> {
    pub fn of(s: &Quaternion<T>) -> Self {
        Self {
            re: s.w.clone(),
            rad_sq: s.vec_norm_sq(),
        }
    }

    pub fn radius(&self) -> Option<T> {
        self.rad_sq.sqrt()
    }

    /// Exact membership on rationals; within [`DEFAULT_TOL`] on floats.
    pub fn contains(&self, q: &Quaternion<T>) -> bool {
        self.contains_with_tol(q, DEFAULT_TOL)
    }

    pub fn contains_with_tol(&self, q: &Quaternion<T>, tol: f64) -> bool {
        if T::EXACT {
            return q.w == self.re && q.vec_norm_sq() == self.rad_sq;
        }
        let rad = self.rad_sq.to_f64().max(0.0).sqrt();
        let qrad = q.vec_norm_sq().to_f64().sqrt();
        (q.w.to_f64() - self.re.to_f64()).abs() <= tol && (qrad - rad).abs() <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    type Q = ExactQuat;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn hamilton_table() {
        assert_eq!(Q::i() * Q::j(), Q::k());
        assert_eq!(Q::j() * Q::i(), -Q::k());
        assert_eq!(Q::j() * Q::k(), Q::i());
        assert_eq!(Q::k() * Q::i(), Q::j());
        assert_eq!(Q::i() * Q::i(), -Q::one());
        let q = Q::from_i64s(1, -2, 3, 5);
        assert_eq!(&q * &Q::one(), q);
        // (1+i)(1+j) = 1 + i + j + k
        assert_eq!(Q::from_i64s(1, 1, 0, 0) * Q::from_i64s(1, 0, 1, 0), Q::from_i64s(1, 1, 1, 1));
    }

    #[test]
    fn inverses() {
        assert_eq!(Q::i().inverse().unwrap(), -Q::i());
        assert_eq!(
            Q::from_i64s(2, 0, 0, 0).inverse().unwrap(),
            Q::from_real(r(1, 2))
        );
        let p = Q::from_i64s(1, 1, 0, 0);
        let inv = p.inverse().unwrap();
        assert_eq!(inv, Q::new(r(1, 2), r(-1, 2), r(0, 1), r(0, 1)));
        assert_eq!(&p * &inv, Q::one());
        assert_eq!(Q::zero().inverse(), Err(QuatError::ZeroDivision));
    }

    #[test]
    fn slice_decomposition() {
        let q = FloatQuat::new(1.0, 2.0, 0.0, 0.0);
        let sc = q.slice_decompose();
        assert_eq!((sc.x, sc.y), (1.0, 2.0));
        assert_eq!(sc.unit.as_quat(), &FloatQuat::i());

        let real = FloatQuat::from_real(3.0);
        let sc = real.slice_decompose();
        assert_eq!((sc.x, sc.y), (3.0, 0.0));
        assert_eq!(sc.unit, UnitImaginary::i());

        let q = FloatQuat::new(0.0, 0.0, 1.0, -1.0);
        let sc = q.slice_decompose();
        let s2 = std::f64::consts::SQRT_2;
        assert!((sc.y - s2).abs() < 1e-15);
        assert!(sc
            .unit
            .as_quat()
            .is_close(&FloatQuat::new(0.0, 0.0, 1.0 / s2, -1.0 / s2), 1e-15));
        assert!(sc.recompose().is_close(&q, 1e-15));
    }

    #[test]
    fn exact_slice_decomposition_needs_rational_modulus() {
        let q = Q::from_i64s(5, 1, 2, 2);
        let sc = q.try_slice_decompose().unwrap();
        assert_eq!(sc.y, Rational::from_integer(3.into()));
        assert_eq!(sc.recompose(), q);
        assert!(matches!(
            Q::from_i64s(0, 0, 1, -1).try_slice_decompose(),
            Err(QuatError::IrrationalModulus(_))
        ));
    }

    #[test]
    fn sphere_membership() {
        let s = Q::from_i64s(1, 1, 0, 0);
        assert!(QSphere::of(&s).contains(&Q::from_i64s(1, 0, 1, 0)));
        let two = QSphere::of(&Q::from_i64s(2, 0, 0, 0));
        assert!(two.contains(&Q::from_i64s(2, 0, 0, 0)));
        assert!(!two.contains(&Q::from_i64s(2, 1, 0, 0)));

        let h = std::f64::consts::FRAC_1_SQRT_2;
        let sph = QSphere::of(&FloatQuat::i());
        assert!(sph.contains(&FloatQuat::new(0.0, h, h, 0.0)));
        assert!(!sph.contains(&FloatQuat::new(0.0, h, 0.5, 0.0)));
        assert!(!sph.contains(&FloatQuat::new(0.1, h, h, 0.0)));
    }

    #[test]
    fn unit_validation() {
        assert!(UnitImaginary::new(Q::j()).is_ok());
        assert!(UnitImaginary::new(Q::from_i64s(0, 1, 1, 0)).is_err());
        assert!(UnitImaginary::new(Q::from_i64s(1, 0, 0, 0)).is_err());
        let exact = Q::new(r(0, 1), r(1, 3), r(2, 3), r(2, 3));
        assert!(UnitImaginary::new(exact).is_ok());
        let u = UnitImaginary::from_direction(0.0, 1.0, 1.0).unwrap();
        assert!((u.as_quat() * u.as_quat()).is_close(&-FloatQuat::one(), 1e-15));
        assert!(UnitImaginary::<f64>::i().anticommutes(&UnitImaginary::j(), 0.0));
        assert!(!UnitImaginary::<f64>::i().anticommutes(&UnitImaginary::i(), 0.0));
        let c = u.orthogonal_companion();
        assert!(u.anticommutes(&c, 1e-15));
        let c = UnitImaginary::<f64>::i().orthogonal_companion();
        assert!(UnitImaginary::<f64>::i().anticommutes(&c, 1e-15));
    }

    #[test]
    fn json_forms() {
        let q = Q::new(r(1, 2), r(-3, 1), r(0, 1), r(7, 5));
        let v = serde_json::to_value(&q).unwrap();
        assert_eq!(v, serde_json::json!(["1/2", "-3", "0", "7/5"]));
        let back: Q = serde_json::from_value(v).unwrap();
        assert_eq!(back, q);
        let f: FloatQuat = serde_json::from_str("[0.25, -1, 0, 2]").unwrap();
        assert_eq!(f, FloatQuat::new(0.25, -1.0, 0.0, 2.0));
        assert!(serde_json::from_str::<FloatQuat>("[1, 2, 3]").is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(p, q)| r(p, q))
    }

    fn exact_quat() -> impl Strategy<Value = Q> {
        (small_rational(), small_rational(), small_rational(), small_rational())
            .prop_map(|(w, x, y, z)| Q::new(w, x, y, z))
    }

    fn float_quat() -> impl Strategy<Value = FloatQuat> {
        (-5.0f64..5.0, -5.0f64..5.0, -5.0f64..5.0, -5.0f64..5.0)
            .prop_map(|(w, x, y, z)| FloatQuat::new(w, x, y, z))
    }

    proptest! {
        #[test]
        fn exact_conj_reverses_products(p in exact_quat(), q in exact_quat()) {
            prop_assert_eq!((&p * &q).conj(), q.conj() * p.conj());
            prop_assert_eq!((&p * &q).norm_sq(), p.norm_sq() * q.norm_sq());
            prop_assert_eq!((&q * &q.conj()).w, q.norm_sq());
            if !q.is_zero() {
                prop_assert_eq!(&q * &q.inverse().unwrap(), Q::one());
            }
        }

        #[test]
        fn float_norm_multiplicative(p in float_quat(), q in float_quat()) {
            let pq = &p * &q;
            prop_assert!(pq.conj().is_close(&(q.conj() * p.conj()), 1e-12));
            let lhs = pq.norm();
            let rhs = p.norm() * q.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-300));
        }

        #[test]
        fn float_slice_recompose(q in float_quat()) {
            let sc = q.slice_decompose();
            prop_assert!(sc.y >= 0.0);
            prop_assert!(sc.recompose().is_close(&q, 1e-12));
        }

        #[test]
        fn exact_slice_recompose(w in small_rational(), t in small_rational(), idx in 0usize..4) {
            // Pythagorean quadruples give rational vector moduli.
            let dirs = [(1, 2, 2), (2, 3, 6), (1, 4, 8), (0, 3, 4)];
            let (a, b, c) = dirs[idx];
            let q = Q::new(w, &t * r(a, 1), &t * r(b, 1), &t * r(c, 1));
            let sc = q.try_slice_decompose().unwrap();
            prop_assert_eq!(sc.recompose(), q);
        }

        #[test]
        fn non_units_rejected(q in exact_quat()) {
            let is_unit = q.w == Rational::from_integer(0.into()) && q.vec_norm_sq().is_one();
            prop_assert_eq!(UnitImaginary::new(q.clone()).is_ok(), is_unit);
            prop_assert_eq!(is_unit, &q * &q == -Q::one());
        }
    }
}
