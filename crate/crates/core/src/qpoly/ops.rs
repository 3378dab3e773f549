//! Differential operators acting on [`QPoly`]: partial derivatives, the
//! Laplacian, the Cauchy-Fueter operator and its conjugate, the global
//! operators `G` and `V`, and the poly-Fueter constructions.

use std::collections::BTreeMap;

use crate::quat::ExactQuat;
use crate::scalar::{factorial, Rational};
use crate::slicefn::SlicePolyFn;

use super::{rat, Exponent, PolyError, QPoly};

/// Formal partial derivative with respect to `x_l`.
pub fn partial(p: &QPoly, l: usize) -> QPoly {
    assert!(l < 4, "axis {l} out of range 0..4");
    let mut out = QPoly::zero();
    for (e, c) in p.terms() {
        if e[l] == 0 {
            continue;
        }
        let mut ne = *e;
        ne[l] -= 1;
        out.add_term(ne, &c.scale(&rat(i64::from(e[l]))));
    }
    out
}

/// `sum_l d^2 p / dx_l^2`.
pub fn laplacian(p: &QPoly) -> QPoly {
    let mut out = QPoly::zero();
    for (e, c) in p.terms() {
        for l in 0..4 {
            if e[l] < 2 {
                continue;
            }
            let mut ne = *e;
            ne[l] -= 2;
            out.add_term(ne, &c.scale(&rat(i64::from(e[l] * (e[l] - 1)))));
        }
    }
    out
}

fn dirac(p: &QPoly, sign: i64) -> QPoly {
    let mut out = partial(p, 0);
    for l in 1..4 {
        let unit = ExactQuat::basis(l).scale(&rat(sign));
        out = &out + &partial(p, l).left_mul_quat(&unit);
    }
    out
}

/// Cauchy-Fueter operator `D p = d0 p + i d1 p + j d2 p + k d3 p`, units on the left.
pub fn cauchy_fueter(p: &QPoly) -> QPoly {
    dirac(p, 1)
}

/// Conjugate operator `d0 p - i d1 p - j d2 p - k d3 p`.
pub fn conjugate_cf(p: &QPoly) -> QPoly {
    dirac(p, -1)
}

/// `D^n p`.
pub fn cauchy_fueter_pow(p: &QPoly, n: u32) -> QPoly {
    (0..n).fold(p.clone(), |acc, _| cauchy_fueter(&acc))
}

/// Radial Euler operator `sum_{l=1..3} x_l d_l p`.
pub fn vector_euler(p: &QPoly) -> QPoly {
    p.map_coeffs(|e, c| c.scale(&rat(i64::from(e[1] + e[2] + e[3]))))
}

/// Global operator `G(p) = |vec q|^2 d0 p + vec(q) sum_l x_l d_l p`.
pub fn global_g(p: &QPoly) -> QPoly {
    let radial = &QPoly::vec_norm_sq() * &partial(p, 0);
    let angular = &QPoly::vec_q() * &vector_euler(p);
    &radial + &angular
}

/// Exact quotient by `x1^2 + x2^2 + x3^2`.
///
/// Division by a single polynomial with leading term `x1^2` (lex order, `x1`
/// first): every term with `a1 >= 2` is reduced, highest `a1` first, and the
/// terms left with `a1 <= 1` form the unique remainder.
pub fn divide_by_vecnorm_sq(p: &QPoly) -> Result<QPoly, PolyError> {
    let mut rest: BTreeMap<Exponent, ExactQuat> =
        p.terms().map(|(e, c)| (*e, c.clone())).collect();
    let mut quotient = QPoly::zero();
    let top = rest.keys().map(|e| e[1]).max().unwrap_or(0);
    for level in (2..=top).rev() {
        let at_level: Vec<Exponent> = rest.keys().filter(|e| e[1] == level).copied().collect();
        for e in at_level {
            let Some(c) = rest.remove(&e) else { continue };
            let qe = [e[0], e[1] - 2, e[2], e[3]];
            quotient.add_term(qe, &c);
            // subtract c * x^qe * (x2^2 + x3^2); the x1^2 part cancelled the removed term
            for l in [2, 3] {
                let mut ne = qe;
                ne[l] += 2;
                let entry = rest.entry(ne).or_insert_with(ExactQuat::zero);
                *entry -= &c;
                if entry.is_zero() {
                    rest.remove(&ne);
                }
            }
        }
    }
    if rest.is_empty() {
        Ok(quotient)
    } else {
        Err(PolyError::NotDivisible {
            remainder: QPoly::from_terms(rest),
        })
    }
}

/// `V(p) = G(p) / |vec q|^2`, realized as exact division. This is the continuous
/// extension of `V(p)` across the real axis whenever one exists.
pub fn global_v(p: &QPoly) -> Result<QPoly, PolyError> {
    divide_by_vecnorm_sq(&global_g(p))
}

/// `V^n(p)`.
pub fn global_v_pow(p: &QPoly, n: u32) -> Result<QPoly, PolyError> {
    (0..n).try_fold(p.clone(), |acc, _| global_v(&acc))
}

/// First poly-Fueter mapping `tau_n(p) = Laplacian(V^{n-1}(p))`.
pub fn tau_n(p: &QPoly, n: u32) -> Result<QPoly, PolyError> {
    if n == 0 {
        return Err(PolyError::InvalidOrder);
    }
    Ok(laplacian(&global_v_pow(p, n - 1)?))
}

/// Second poly-Fueter mapping `C_n(f) = sum_k x0^k Laplacian(f_k)`.
pub fn c_n(f: &SlicePolyFn) -> QPoly {
    f.components()
        .iter()
        .enumerate()
        .fold(QPoly::zero(), |acc, (k, fk)| {
            &acc + &laplacian(&fk.expand()).mul_x0_pow(k as u32)
        })
}

/// `sum_k x0^k phi_k`; each `phi_k` must be Fueter regular.
pub fn build_poly_fueter(phis: &[QPoly]) -> Result<QPoly, PolyError> {
    let mut out = QPoly::zero();
    for (k, phi) in phis.iter().enumerate() {
        if !cauchy_fueter(phi).is_zero() {
            return Err(PolyError::NotFueterRegular { index: k });
        }
        out = &out + &phi.mul_x0_pow(k as u32);
    }
    Ok(out)
}

/// Whether `D^n p` vanishes identically.
pub fn is_poly_fueter(p: &QPoly, n: u32) -> bool {
    cauchy_fueter_pow(p, n).is_zero()
}

/// `2^(n-1) (n-1)!`, the factor relating `V^{n-1}` of an order-`n` function to its top component.
pub fn top_component_factor(n: u32) -> Rational {
    let two_pow = num_traits::pow(rat(2), (n - 1) as usize);
    two_pow * factorial(n - 1)
}
