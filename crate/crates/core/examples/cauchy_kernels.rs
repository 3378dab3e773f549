//! Slice Cauchy kernel, its Laplacian and the poly-Cauchy kernels, checked by finite differences.

use polyfueter::kernels::{delta_s_inv, f_j, s_inv};
use polyfueter::oracle::{fd_cauchy_fueter, fd_global_v, fd_laplacian, richardson};
use polyfueter::quat::FloatQuat;

fn main() {
    let w = FloatQuat::new(0.6, 0.0, 0.8, 0.0);
    let q = FloatQuat::new(0.1, 0.2, -0.3, 0.05);
    println!("S^-1(w, q) = {}", s_inv(&w, &q).unwrap());

    let kernel = |p: &FloatQuat| s_inv(&w, p).unwrap();
    let closed = delta_s_inv(&w, &q).unwrap();
    for h in [1e-2, 1e-3] {
        let plain = fd_laplacian(kernel, &q, h).dist(&closed);
        let extrap = richardson(|h| fd_laplacian(kernel, &q, h), h).dist(&closed);
        println!("h = {h:e}: Laplacian error {plain:.2e}, extrapolated {extrap:.2e}");
    }

    let delta = |p: &FloatQuat| delta_s_inv(&w, p).unwrap();
    println!("|D Laplacian S^-1| = {:.2e}", richardson(|h| fd_cauchy_fueter(delta, &q, h), 1e-3).norm());

    for j in 1..=3 {
        let v = fd_global_v(|p: &FloatQuat| f_j(&w, p, j).unwrap(), &q, 1e-3).unwrap();
        println!("|V F_{j} + F_{}| = {:.2e}", j - 1, (v + f_j(&w, &q, j - 1).unwrap()).norm());
    }

    let on_sphere = FloatQuat::new(0.6, 0.0, 0.0, 0.8);
    println!("q on [w]: {}", s_inv(&w, &on_sphere).unwrap_err());
}
