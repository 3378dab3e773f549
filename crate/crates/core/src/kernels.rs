//! Pointwise (binary64) evaluation of the slice Cauchy kernel, its Fueter
//! regular image and the poly-Cauchy kernels.
//!
//! All kernels share the factor `(s^2 - 2 Re(q) s + |q|^2)^{-1}`, which is
//! singular exactly on the sphere `[s]`.

use thiserror::Error;

use crate::quat::FloatQuat;

/// `|Re(q) - Re(s)| + ||vec q| - |vec s||` below this counts as `q in [s]`.
pub const SINGULAR_GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum KernelError {
    #[error("q = {q} lies on the singular sphere [{s}]")]
    OnSingularSphere { s: String, q: String },
}

/// A pair `(s, q)` with `q` off the sphere `[s]`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelPoint {
    pub s: FloatQuat,
    pub q: FloatQuat,
}

impl KernelPoint {
    pub fn new(s: FloatQuat, q: FloatQuat) -> Result<Self, KernelError> {
        let gap = (q.w - s.w).abs() + (q.vec_norm() - s.vec_norm()).abs();
        if gap < SINGULAR_GUARD {
            return Err(KernelError::OnSingularSphere {
                s: s.to_string(),
                q: q.to_string(),
            });
        }
        Ok(Self { s, q })
    }

    /// `(s^2 - 2 Re(q) s + |q|^2)^{-1}`.
    fn quadratic_inverse(&self) -> FloatQuat {
        let s = &self.s;
        let mut quad = s * s - s.scale(&(2.0 * self.q.w));
        quad.w += self.q.norm_sq();
        quad.inverse()
            .expect("quadratic factor vanishes only on the guarded sphere")
    }
}

/// Slice Cauchy kernel `S^{-1}(s, q) = (s - qbar)(s^2 - 2 Re(q) s + |q|^2)^{-1}`.
pub fn s_inv(s: &FloatQuat, q: &FloatQuat) -> Result<FloatQuat, KernelError> {
    let p = KernelPoint::new(s.clone(), q.clone())?;
    Ok((s - &q.conj()) * p.quadratic_inverse())
}

/// `Laplacian_q S^{-1}(s, q) = -4 (s - qbar)(s^2 - 2 Re(q) s + |q|^2)^{-2}`.
pub fn delta_s_inv(s: &FloatQuat, q: &FloatQuat) -> Result<FloatQuat, KernelError> {
    let p = KernelPoint::new(s.clone(), q.clone())?;
    let inv = p.quadratic_inverse();
    Ok((s - &q.conj()).scale(&-4.0) * &inv * &inv)
}

/// `(qbar - w)(w^2 - 2 Re(q) w + |q|^2)^{-2}`, the integrand factor of the
/// explicit integral form of the poly-Fueter mapping.
pub fn explicit_fueter_kernel(w: &FloatQuat, q: &FloatQuat) -> Result<FloatQuat, KernelError> {
    let p = KernelPoint::new(w.clone(), q.clone())?;
    let inv = p.quadratic_inverse();
    Ok((q.conj() - w) * &inv * &inv)
}

/// Poly-Cauchy kernel `F_j(w, q) = S^{-1}(w, q) Re(w - q)^j / j!`.
pub fn f_j(w: &FloatQuat, q: &FloatQuat, j: u32) -> Result<FloatQuat, KernelError> {
    let base = s_inv(w, q)?;
    if j == 0 {
        return Ok(base);
    }
    let re = w.w - q.w;
    let fact: f64 = (1..=j).map(f64::from).product();
    Ok(base.scale(&(re.powi(j as i32) / fact)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fq(w: f64, x: f64, y: f64, z: f64) -> FloatQuat {
        FloatQuat::new(w, x, y, z)
    }

    #[test]
    fn s_inv_examples() {
        let s = fq(0.3, -1.0, 0.5, 2.0);
        let v = s_inv(&s, &FloatQuat::zero()).unwrap();
        assert!(v.is_close(&s.inverse().unwrap(), 1e-14));
        assert!(s_inv(&fq(2.0, 0.0, 0.0, 0.0), &FloatQuat::one())
            .unwrap()
            .is_close(&FloatQuat::one(), 1e-15));
        let v = s_inv(&fq(0.0, 2.0, 0.0, 0.0), &FloatQuat::i()).unwrap();
        assert!(v.is_close(&-FloatQuat::i(), 1e-15));
    }

    #[test]
    fn common_slice_reduces_to_resolvent() {
        let u = crate::quat::UnitImaginary::from_direction(1.0, -2.0, 0.5).unwrap();
        let s = u.point(&0.9, &0.4);
        let q = u.point(&-0.2, &0.3);
        let expected = (&s - &q).inverse().unwrap();
        assert!(s_inv(&s, &q).unwrap().is_close(&expected, 1e-14));
    }

    #[test]
    fn singular_sphere_rejected() {
        let s = fq(0.5, 0.6, 0.0, 0.0);
        let q = fq(0.5, 0.0, 0.0, 0.6);
        assert!(matches!(s_inv(&s, &q), Err(KernelError::OnSingularSphere { .. })));
        assert!(delta_s_inv(&s, &q).is_err());
        assert!(f_j(&s, &q, 2).is_err());
        assert!(s_inv(&s, &fq(0.5, 0.0, 0.0, 0.61)).is_ok());
    }

    #[test]
    fn delta_examples() {
        let s = fq(0.3, -1.0, 0.5, 2.0);
        let v = delta_s_inv(&s, &FloatQuat::zero()).unwrap();
        let expected = s.inverse().unwrap().pow(3).scale(&-4.0);
        assert!(v.is_close(&expected, 1e-14));
        let v = delta_s_inv(&fq(2.0, 0.0, 0.0, 0.0), &FloatQuat::zero()).unwrap();
        assert!(v.is_close(&fq(-0.5, 0.0, 0.0, 0.0), 1e-15));
    }

    #[test]
    fn explicit_kernel_is_quarter_delta() {
        let w = fq(0.6, 0.0, 0.8, 0.0);
        let q = fq(0.1, 0.2, -0.3, 0.05);
        let a = explicit_fueter_kernel(&w, &q).unwrap().scale(&4.0);
        assert!(a.is_close(&delta_s_inv(&w, &q).unwrap(), 1e-14));
    }

    #[test]
    fn f_j_examples() {
        let w = fq(0.6, 0.0, 0.8, 0.0);
        let q = fq(0.1, 0.2, -0.3, 0.05);
        assert_eq!(f_j(&w, &q, 0).unwrap(), s_inv(&w, &q).unwrap());
        let v = f_j(&fq(2.0, 0.0, 0.0, 0.0), &FloatQuat::zero(), 1).unwrap();
        assert!(v.is_close(&FloatQuat::one(), 1e-15));
        let same_re = fq(0.6, 0.1, 0.1, 0.1);
        assert!(f_j(&w, &same_re, 2).unwrap().is_zero());
    }
}
