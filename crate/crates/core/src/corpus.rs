//! Seeded random instances for the identity suites.
//!
//! Coefficients are small rationals so exact arithmetic stays cheap; points are
//! binary64 and drawn from balls or shells away from the real axis where an
//! operator needs it.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::qpoly::{Exponent, QPoly};
use crate::quat::{ExactQuat, FloatQuat, UnitImaginary};
use crate::scalar::Rational;
use crate::slicefn::{RightSlicePolyFn, SlicePolyFn, SliceRegularSeries};

/// Deterministic generator; the same seed yields the same stream on every platform.
pub struct Corpus {
    rng: ChaCha8Rng,
}

impl Corpus {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `p / d` with `|p| <= 3` and `d` in `{1, 2, 3}`.
    pub fn rational(&mut self) -> Rational {
        let p: i64 = self.rng.gen_range(-3..=3);
        let d: i64 = self.rng.gen_range(1..=3);
        Rational::new(BigInt::from(p), BigInt::from(d))
    }

    /// Each component is zero with probability 1/4.
    pub fn quat(&mut self) -> ExactQuat {
        let mut c = || {
            if self.rng.gen_bool(0.25) {
                Rational::from_integer(BigInt::from(0))
            } else {
                self.rational()
            }
        };
        ExactQuat::new(c(), c(), c(), c())
    }

    pub fn nonzero_quat(&mut self) -> ExactQuat {
        loop {
            let q = self.quat();
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// Random slice regular polynomial of degree exactly `deg`.
    pub fn series(&mut self, deg: u32) -> SliceRegularSeries {
        let mut coeffs: Vec<ExactQuat> = (0..deg).map(|_| self.quat()).collect();
        coeffs.push(self.nonzero_quat());
        SliceRegularSeries::new(coeffs)
    }

    /// Degree drawn uniformly from `0..=max_deg`.
    pub fn series_upto(&mut self, max_deg: u32) -> SliceRegularSeries {
        let d = self.rng.gen_range(0..=max_deg);
        self.series(d)
    }

    /// Order `n` with a nonzero top component.
    pub fn slice_poly(&mut self, n: u32, max_deg: u32) -> SlicePolyFn {
        assert!(n >= 1);
        let comps = (0..n).map(|_| self.series_upto(max_deg)).collect();
        SlicePolyFn::new(comps).expect("n >= 1")
    }

    pub fn slice_poly_orders(&mut self, orders: std::ops::RangeInclusive<u32>, max_deg: u32) -> SlicePolyFn {
        let n = self.rng.gen_range(orders);
        self.slice_poly(n, max_deg)
    }

    pub fn right_slice_poly(&mut self, n: u32, max_deg: u32) -> RightSlicePolyFn {
        RightSlicePolyFn::mirror_of(&self.slice_poly(n, max_deg))
    }

    /// Sum of up to `terms` monomials of total degree `<= max_deg`.
    pub fn qpoly(&mut self, max_deg: u32, terms: usize) -> QPoly {
        let mut p = QPoly::zero();
        for _ in 0..terms {
            let total = self.rng.gen_range(0..=max_deg);
            let mut exp: Exponent = [0; 4];
            for _ in 0..total {
                exp[self.rng.gen_range(0..4)] += 1;
            }
            p.add_term(exp, &self.nonzero_quat());
        }
        p
    }

    /// Uniform in the ball `|q| <= radius` (rejection sampling).
    pub fn point_in_ball(&mut self, radius: f64) -> FloatQuat {
        loop {
            let mut c = || self.rng.gen_range(-1.0..=1.0);
            let q = FloatQuat::new(c(), c(), c(), c());
            let n = q.norm();
            if n <= 1.0 && n > 0.0 {
                return q.scale(&radius);
            }
        }
    }

    /// In the ball of `radius` with `|vec q| >= min_vec`.
    pub fn point_off_axis(&mut self, radius: f64, min_vec: f64) -> FloatQuat {
        assert!(min_vec < radius);
        loop {
            let q = self.point_in_ball(radius);
            if q.vec_norm() >= min_vec {
                return q;
            }
        }
    }

    pub fn unit(&mut self) -> UnitImaginary<f64> {
        loop {
            let mut c = || self.rng.gen_range(-1.0..=1.0);
            let (x, y, z) = (c(), c(), c());
            let n2: f64 = x * x + y * y + z * z;
            if n2 > 1e-2 && n2 <= 1.0 {
                return UnitImaginary::from_direction(x, y, z).expect("nonzero direction");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible_streams() {
        let mut a = Corpus::new(7);
        let mut b = Corpus::new(7);
        for _ in 0..5 {
            assert_eq!(a.slice_poly(3, 4), b.slice_poly(3, 4));
            assert_eq!(a.qpoly(5, 6), b.qpoly(5, 6));
            assert_eq!(a.point_in_ball(0.6), b.point_in_ball(0.6));
        }
        assert_ne!(Corpus::new(1).qpoly(5, 6), Corpus::new(2).qpoly(5, 6));
    }

    #[test]
    fn shapes_respect_bounds() {
        let mut c = Corpus::new(3);
        for _ in 0..50 {
            let f = c.slice_poly_orders(1..=4, 6);
            assert!((1..=4).contains(&f.order()));
            assert!(!f.components().last().unwrap().is_zero());
            assert!(f.components().iter().all(|s| s.degree().unwrap_or(0) <= 6));
            assert!(c.qpoly(6, 5).degree().unwrap_or(0) <= 6);
            let q = c.point_off_axis(0.6, 0.2);
            assert!(q.norm() <= 0.6 + 1e-15 && q.vec_norm() >= 0.2);
            let u = c.unit();
            assert!((u.as_quat().norm() - 1.0).abs() < 1e-15);
        }
    }
}
