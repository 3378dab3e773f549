//! Restriction to a slice, the splitting `F + G J`, and extension back to `H`.

use polyfueter::quat::{FloatQuat, UnitImaginary};
use polyfueter::slicefn::{slice_extend, SlicePolyFn};

fn main() {
    // f(q) = q j + qbar (1 + k)
    let f = SlicePolyFn::from_json(&serde_json::json!({
        "order": 2,
        "components": [[0, [0, 0, 1, 0]], [[1, 0, 0, 1]]]
    }))
    .unwrap();
    let (i, j) = (UnitImaginary::<f64>::i(), UnitImaginary::<f64>::j());
    let r = f.restrict(&i, &j).unwrap();
    println!("F terms: {:?}", r.f_part);
    println!("G terms: {:?}", r.g_part);
    for (x, y) in [(0.3, 0.4), (-1.0, 2.0)] {
        println!("z = {x} + {y}i: f = {}, F + G j = {}", r.eval(&x, &y), r.reconstruct(&x, &y));
    }

    let q = FloatQuat::new(0.2, -0.5, 0.7, 0.1);
    let ext = slice_extend(|p: &FloatQuat| f.eval(p), &i, &q);
    println!("extension from C_i at {q}: {ext}");
    println!("direct value:            {}", f.eval(&q));
}
