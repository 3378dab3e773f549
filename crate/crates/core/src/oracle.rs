//! Finite-difference differential operators on black-box functions `H -> H`.
//!
//! These are independent of the exact polynomial machinery and serve as the
//! numerical oracle for it and for the kernel identities. All stencils are
//! central and second-order accurate.

use thiserror::Error;

use crate::quat::{FloatQuat, UnitImaginary};

/// Default step for single stencils.
pub const DEFAULT_H: f64 = 1e-3;

/// Step for nested stencils such as `Laplacian o V`; their error is dominated
/// by third-derivative noise, so the matching tolerance is `1e-3`.
pub const COMPOSED_H: f64 = 1e-2;
pub const COMPOSED_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum OracleError {
    #[error("V is undefined on the real axis (q = {0})")]
    OnRealAxis(String),
}

fn shifted(q: &FloatQuat, l: usize, h: f64) -> FloatQuat {
    let mut p = q.clone();
    match l {
        0 => p.w += h,
        1 => p.x += h,
        2 => p.y += h,
        3 => p.z += h,
        _ => panic!("axis {l} out of range 0..4"),
    }
    p
}

/// `(f(q + h e_l) - f(q - h e_l)) / 2h`.
pub fn fd_partial<F>(f: F, q: &FloatQuat, l: usize, h: f64) -> FloatQuat
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    assert!(h > 0.0, "step must be positive");
    (f(&shifted(q, l, h)) - f(&shifted(q, l, -h))).scale(&(0.5 / h))
}

/// Five-point-per-axis Laplacian.
pub fn fd_laplacian<F>(f: F, q: &FloatQuat, h: f64) -> FloatQuat
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    assert!(h > 0.0, "step must be positive");
    let centre = f(q).scale(&2.0);
    (0..4)
        .map(|l| f(&shifted(q, l, h)) + f(&shifted(q, l, -h)) - &centre)
        .sum::<FloatQuat>()
        .scale(&(1.0 / (h * h)))
}

/// `d0 f + i d1 f + j d2 f + k d3 f`.
pub fn fd_cauchy_fueter<F>(f: F, q: &FloatQuat, h: f64) -> FloatQuat
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    (0..4)
        .map(|l| FloatQuat::basis(l) * fd_partial(&f, q, l, h))
        .sum()
}

/// `V f = d0 f + vec(q) / |vec q|^2 sum_l x_l d_l f`, defined off the real axis.
pub fn fd_global_v<F>(f: F, q: &FloatQuat, h: f64) -> Result<FloatQuat, OracleError>
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    let vn2 = q.vec_norm_sq();
    if vn2 == 0.0 {
        return Err(OracleError::OnRealAxis(q.to_string()));
    }
    let radial: FloatQuat = (1..4)
        .map(|l| fd_partial(&f, q, l, h).scale(q.component(l)))
        .sum();
    let factor = q.vector().scale(&(1.0 / vn2));
    Ok(fd_partial(&f, q, 0, h) + factor * radial)
}

/// Nested `Laplacian(V f)`; the outer stencil must stay off the real axis.
pub fn fd_laplacian_of_v<F>(f: F, q: &FloatQuat, h: f64) -> Result<FloatQuat, OracleError>
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    if q.vec_norm() <= h {
        return Err(OracleError::OnRealAxis(q.to_string()));
    }
    let v = |p: &FloatQuat| fd_global_v(&f, p, h).expect("stencil stays off the real axis");
    Ok(fd_laplacian(v, q, h))
}

/// Left slice Cauchy-Riemann operator `(d_x + I d_y) f / 2` at `z = x + I y`.
pub fn fd_slice_cr_left<F>(f: F, unit: &UnitImaginary<f64>, x: f64, y: f64, h: f64) -> FloatQuat
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    let (dx, dy) = slice_partials(&f, unit, x, y, h);
    (dx + unit.as_quat() * dy).scale(&0.5)
}

/// Right slice Cauchy-Riemann operator `(d_x f + d_y f I) / 2` at `z = x + I y`.
pub fn fd_slice_cr_right<F>(f: F, unit: &UnitImaginary<f64>, x: f64, y: f64, h: f64) -> FloatQuat
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    let (dx, dy) = slice_partials(&f, unit, x, y, h);
    (dx + dy * unit.as_quat()).scale(&0.5)
}

fn slice_partials<F>(f: &F, unit: &UnitImaginary<f64>, x: f64, y: f64, h: f64) -> (FloatQuat, FloatQuat)
where
    F: Fn(&FloatQuat) -> FloatQuat,
{
    let at = |x: f64, y: f64| f(&unit.point(&x, &y));
    let dx = (at(x + h, y) - at(x - h, y)).scale(&(0.5 / h));
    let dy = (at(x, y + h) - at(x, y - h)).scale(&(0.5 / h));
    (dx, dy)
}

/// Richardson extrapolation of a second-order stencil: `(4 D(h/2) - D(h)) / 3`.
pub fn richardson<D>(stencil: D, h: f64) -> FloatQuat
where
    D: Fn(f64) -> FloatQuat,
{
    (stencil(0.5 * h).scale(&4.0) - stencil(h)).scale(&(1.0 / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fq(w: f64, x: f64, y: f64, z: f64) -> FloatQuat {
        FloatQuat::new(w, x, y, z)
    }

    #[test]
    fn partial_examples() {
        let sq = |q: &FloatQuat| q * q;
        let d = fd_partial(sq, &FloatQuat::one(), 0, 1e-4);
        assert!(d.dist(&fq(2.0, 0.0, 0.0, 0.0)) <= 1e-7);
        let c = fd_partial(|_| fq(1.0, 2.0, 3.0, 4.0), &fq(0.3, 0.1, 0.0, 0.0), 2, 1e-3);
        assert!(c.is_zero());
        let conj = fd_partial(|q: &FloatQuat| q.conj(), &fq(0.3, 0.1, 0.0, 0.0), 1, 1e-3);
        assert!(conj.dist(&-FloatQuat::i()) <= 1e-12);
    }

    #[test]
    fn laplacian_of_square() {
        let v = fd_laplacian(|q: &FloatQuat| q * q, &fq(1.0, 1.0, 0.0, 0.0), 1e-3);
        assert!(v.dist(&fq(-4.0, 0.0, 0.0, 0.0)) <= 1e-5);
    }

    #[test]
    fn cauchy_fueter_kills_fueter_image_of_cube() {
        // Laplacian(q^3) = -4 (2q + qbar)
        let phi = |q: &FloatQuat| (q.scale(&2.0) + q.conj()).scale(&-4.0);
        for q in [fq(0.3, -0.2, 0.5, 0.1), fq(-1.0, 0.4, 0.0, 0.9)] {
            assert!(fd_cauchy_fueter(phi, &q, 1e-3).norm() <= 1e-9);
        }
        // but not q^3 itself: D(q^3) = -2 (q^2 + q qbar + qbar^2)
        let cube = |q: &FloatQuat| q.pow(3);
        let d = fd_cauchy_fueter(cube, &fq(1.0, 0.2, 0.0, 0.0), 1e-3);
        assert!(d.dist(&fq(-5.92, 0.0, 0.0, 0.0)) <= 1e-5);
    }

    #[test]
    fn global_v_of_conjugate() {
        let v = fd_global_v(|q: &FloatQuat| q.conj(), &fq(1.0, 0.0, 2.0, 0.0), 1e-3).unwrap();
        assert!(v.dist(&fq(2.0, 0.0, 0.0, 0.0)) <= 1e-6);
        assert!(matches!(
            fd_global_v(|q: &FloatQuat| q.conj(), &FloatQuat::one(), 1e-3),
            Err(OracleError::OnRealAxis(_))
        ));
    }

    #[test]
    fn slice_cr_of_regular_and_conjugate() {
        let u = UnitImaginary::from_direction(0.2, -0.5, 1.0).unwrap();
        let v = fd_slice_cr_left(|q: &FloatQuat| q.pow(3), &u, 0.4, 0.3, 1e-3);
        assert!(v.norm() <= 1e-5);
        let v = fd_slice_cr_left(|q: &FloatQuat| q.conj(), &u, 0.4, 0.3, 1e-3);
        assert!(v.dist(&FloatQuat::one()) <= 1e-9);
        let a = fq(0.0, 1.0, 2.0, -1.0);
        let right = fd_slice_cr_right(|q: &FloatQuat| &a * &(q * q), &u, 0.4, 0.3, 1e-3);
        assert!(right.norm() <= 1e-5);
    }

    #[test]
    fn richardson_improves_order() {
        let f = |q: &FloatQuat| q.pow(4);
        let q = fq(0.5, 0.3, -0.2, 0.4);
        // Laplacian(q^4) = -4 (3 q^2 + 2 q qbar + qbar^2)
        let exact = {
            let q2 = &q * &q;
            let qqb = &q * &q.conj();
            let qb2 = q.conj() * q.conj();
            (q2.scale(&3.0) + qqb.scale(&2.0) + qb2).scale(&-4.0)
        };
        let plain = fd_laplacian(f, &q, 1e-2).dist(&exact);
        let extrap = richardson(|h| fd_laplacian(f, &q, h), 1e-2).dist(&exact);
        assert!(extrap < plain * 1e-2, "plain {plain}, extrapolated {extrap}");
    }
}
