//! Reconstructing a slice polyanalytic function from its boundary data on one slice.

use polyfueter::quad::{poly_cauchy_eval, unit_independence_check, CirclePath, IntegralKind};
use polyfueter::quat::{FloatQuat, UnitImaginary};
use polyfueter::slicefn::SlicePolyFn;

fn main() {
    let f = SlicePolyFn::from_json(&serde_json::json!({
        "order": 3,
        "components": [[[1, 2, 0, 0], 0, [0, 0, 1, 0]], [0, [0, 1, 0, 1]], [[2, 0, 0, -1]]]
    }))
    .unwrap();
    let q = FloatQuat::new(0.3, -0.2, 0.4, 0.1);
    let want = f.eval(&q);
    let unit = UnitImaginary::from_direction(1.0, 1.0, 0.0).unwrap();
    println!("f(q) = {want}");
    // the error decays like (|q| / rho)^N
    for n in [8, 16, 32, 64, 128, 512] {
        let path = CirclePath::new(unit.clone(), 1.0, n).unwrap();
        let v = poly_cauchy_eval(&f, &q, &path).unwrap();
        println!("N = {n:>3}: error {:.2e}", v.dist(&want));
    }
    let path = CirclePath::default();
    let d = unit_independence_check(IntegralKind::Cauchy, &f, &q, &UnitImaginary::i(), &unit, &path).unwrap();
    println!("slice C_i vs C_(i+j)/sqrt2: {d:.2e}");
    let far = FloatQuat::new(1.2, 0.0, 0.0, 0.0);
    println!("outside the contour: {}", poly_cauchy_eval(&f, &far, &path).unwrap_err());
}
