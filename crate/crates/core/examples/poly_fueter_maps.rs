//! Both poly-Fueter mappings on a slice polyanalytic function of order 3.

use polyfueter::qpoly::{c_n, cauchy_fueter, cauchy_fueter_pow, global_v_pow, tau_n};
use polyfueter::slicefn::SlicePolyFn;

fn main() {
    // f = q + qbar q^2 i + qbar^2 q^3
    let f = SlicePolyFn::from_json(&serde_json::json!({
        "order": 3,
        "components": [[0, 1], [0, 0, [0, 1, 0, 0]], [0, 0, 0, 1]]
    }))
    .unwrap();
    let n = f.order();
    let p = f.expand();
    println!("f has {} terms after expansion, total degree {:?}", p.len(), p.degree());

    println!("V^{n}(f) = 0: {}", global_v_pow(&p, n).unwrap().is_zero());
    let tau = tau_n(&p, n).unwrap();
    println!("tau_{n}(f) = {tau}");
    println!("D tau_{n}(f) = 0: {}", cauchy_fueter(&tau).is_zero());

    let c = c_n(&f);
    println!("C_{n}(f) = {c}");
    println!("D^{n} C_{n}(f) = 0: {}", cauchy_fueter_pow(&c, n).is_zero());
    let lhs = cauchy_fueter_pow(&c, n - 1);
    let rhs = tau.scale(&polyfueter::scalar::Rational::new(1.into(), 4.into()));
    println!("D^{} C_{n}(f) = tau_{n}(f) / 4: {}", n - 1, lhs == rhs);
}
