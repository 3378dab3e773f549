//! Exact and floating quaternions, slices and the spheres `[s]`.

use polyfueter::quat::{ExactQuat, FloatQuat, QSphere, UnitImaginary};
use polyfueter::scalar::parse_rational;

fn main() {
    let (i, j, k) = (ExactQuat::i(), ExactQuat::j(), ExactQuat::k());
    println!("ij = {}, jk = {}, ki = {}", &i * &j, &j * &k, &k * &i);
    println!("ji = {}", &j * &i);

    // exact inverse with rational entries
    let half = parse_rational("1/2").unwrap();
    let q = ExactQuat::new(half.clone(), parse_rational("-3").unwrap(), half, parse_rational("2/3").unwrap());
    let inv = q.inverse().unwrap();
    println!("q = {q}\nq^-1 = {inv}\nq q^-1 = {}", &q * &inv);

    // 1 + 2i + 2j + 1k has |vec q| = 3, so its slice coordinates are rational
    let p = ExactQuat::from_i64s(1, 2, 2, 1);
    let sc = p.try_slice_decompose().unwrap();
    println!("{p} = {} + I {} with I = {}", sc.x, sc.y, sc.unit.as_quat());
    println!("1 + i + j + k: {:?}", ExactQuat::from_i64s(1, 1, 1, 1).try_slice_decompose().err());

    // every point of [s] is reached by rotating the unit
    let s = FloatQuat::new(0.5, 0.3, -0.4, 0.0);
    let sphere = QSphere::of(&s);
    for dir in [(1.0, 0.0, 0.0), (0.0, 1.0, 1.0), (-2.0, 1.0, 0.5)] {
        let u = UnitImaginary::from_direction(dir.0, dir.1, dir.2).unwrap();
        let t = u.point(&0.5, &0.5);
        println!("{t} in [s]: {}", sphere.contains(&t));
    }
    println!("{} in [s]: {}", FloatQuat::new(0.5, 0.6, 0.0, 0.0), sphere.contains(&FloatQuat::new(0.5, 0.6, 0.0, 0.0)));
}
