//! The global operator `G`, its normalized form `V` and exact division by `|vec q|^2`.

use polyfueter::qpoly::{divide_by_vecnorm_sq, expand_q_power, global_g, global_v, PolyError, QPoly};
use polyfueter::quat::ExactQuat;

fn main() {
    let q = QPoly::var_q();
    let qbar = QPoly::var_qbar();

    // G kills q^k and V(qbar) = 2
    println!("G(q^3) = {}", global_g(&expand_q_power(3)));
    println!("G(qbar) = {}", global_g(&qbar));
    println!("V(qbar) = {}", global_v(&qbar).unwrap());

    // left powers of q pass through G untouched
    let f = QPoly::from_terms([([0, 1, 0, 2], ExactQuat::from_i64s(1, 0, -1, 0)), ([2, 0, 0, 0], ExactQuat::j())]);
    let lhs = global_g(&(&(&q * &q) * &f));
    let rhs = &(&q * &q) * &global_g(&f);
    println!("G(q^2 f) == q^2 G(f): {}", lhs == rhs);

    // V of a function outside the slice polyanalytic class has no polynomial value
    match global_v(&QPoly::var(1)) {
        Err(PolyError::NotDivisible { remainder }) => println!("V(x1): not divisible, remainder {remainder}"),
        other => println!("unexpected: {other:?}"),
    }
    let r2 = QPoly::vec_norm_sq();
    let p = &r2 * &(&qbar * &q);
    println!("(x1^2 + x2^2 + x3^2) |q|^2 / |vec q|^2 = {}", divide_by_vecnorm_sq(&p).unwrap());
}
