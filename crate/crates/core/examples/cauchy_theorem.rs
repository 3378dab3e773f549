//! The Cauchy integral theorem pairing of a left and a right slice polyanalytic function.

use polyfueter::quad::{cauchy_theorem_residual, CirclePath};
use polyfueter::quat::UnitImaginary;
use polyfueter::slicefn::{RightSlicePolyFn, SlicePolyFn};

fn main() {
    let f = SlicePolyFn::from_json(&serde_json::json!({
        "order": 3,
        "components": [[1, [0, 1, 0, 0]], [0, 0, [0, 0, 1, 1]], [[3, 0, 0, 0]]]
    }))
    .unwrap();
    let g = RightSlicePolyFn::from_json(&serde_json::json!({
        "order": 3,
        "components": [[[0, 0, 2, 0], 1], [[1, 1, 0, 0]], [0, [0, 0, 0, 1]]]
    }))
    .unwrap();
    for unit in [UnitImaginary::i(), UnitImaginary::from_direction(1.0, -2.0, 0.5).unwrap()] {
        for n in [16, 64, 512] {
            let path = CirclePath::new(unit.clone(), 1.0, n).unwrap();
            let r = cauchy_theorem_residual(&f, &g, &path).unwrap();
            println!("unit {:?}, N = {n:>3}: |residual| = {:.2e}", unit.as_quat(), r.norm());
        }
    }
}
