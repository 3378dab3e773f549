//! The first poly-Fueter mapping as a contour integral, compared with the exact polynomial.

use polyfueter::qpoly::tau_n;
use polyfueter::quad::{fueter_integral, fueter_integral_explicit, CirclePath};
use polyfueter::quat::{FloatQuat, UnitImaginary};
use polyfueter::slicefn::SlicePolyFn;

fn main() {
    let f = SlicePolyFn::from_json(&serde_json::json!({
        "order": 2,
        "components": [[0, 0, 0, 1], [[0, 1, 0, 0], 0, 1]]
    }))
    .unwrap();
    let tau = tau_n(&f.expand(), f.order()).unwrap();
    println!("tau_2(f) = {tau}");
    let path = CirclePath::with_unit(UnitImaginary::from_direction(0.0, 1.0, -1.0).unwrap());
    for q in [FloatQuat::new(0.2, 0.1, 0.0, 0.0), FloatQuat::new(-0.3, 0.2, 0.4, -0.1)] {
        let a = fueter_integral(&f, &q, &path).unwrap();
        let b = fueter_integral_explicit(&f, &q, &path).unwrap();
        let exact = tau.evaluate(&q);
        println!("q = {q}\n  integral {a}\n  explicit {b}\n  exact    {exact}\n  error {:.2e}", a.dist(&exact));
    }
}
