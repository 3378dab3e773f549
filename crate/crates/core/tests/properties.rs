use polyfueter::kernels::{delta_s_inv, s_inv};
use polyfueter::oracle::{fd_cauchy_fueter, fd_slice_cr_left};
use polyfueter::qpoly::{
    cauchy_fueter, conjugate_cf, expand_q_power, expand_qbar_power, global_g, global_v, is_poly_fueter, laplacian,
    partial, tau_n, Exponent, QPoly,
};
use polyfueter::quad::{fueter_integral, poly_cauchy_eval, CirclePath};
use polyfueter::quat::{ExactQuat, FloatQuat, UnitImaginary};
use polyfueter::scalar::Rational;
use polyfueter::slicefn::{decompose, slice_extend, SlicePolyFn, SliceRegularSeries};
use proptest::prelude::*;

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn coef() -> impl Strategy<Value = ExactQuat> {
    prop::array::uniform4(-3i64..=3).prop_map(|[w, x, y, z]| ExactQuat::from_i64s(w, x, y, z))
}

fn qpoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = QPoly> {
    let exp = prop::array::uniform4(0..=max_deg).prop_filter_map("degree bound", move |e: Exponent| {
        (e.iter().sum::<u32>() <= max_deg).then_some(e)
    });
    prop::collection::vec((exp, coef()), 0..=max_terms).prop_map(QPoly::from_terms)
}

fn series(max_deg: usize) -> impl Strategy<Value = SliceRegularSeries> {
    prop::collection::vec(coef(), 0..=max_deg + 1).prop_map(SliceRegularSeries::new)
}

fn slice_poly(max_order: usize, max_deg: usize) -> impl Strategy<Value = SlicePolyFn> {
    prop::collection::vec(series(max_deg), 1..=max_order).prop_map(|c| SlicePolyFn::new(c).unwrap())
}

fn point(radius: f64) -> impl Strategy<Value = FloatQuat> {
    prop::array::uniform4(-1.0f64..1.0).prop_map(move |[w, x, y, z]| {
        let q = FloatQuat::new(w, x, y, z);
        q.scale(&(radius * 0.5))
    })
}

fn unit() -> impl Strategy<Value = UnitImaginary<f64>> {
    prop::array::uniform3(-1.0f64..1.0)
        .prop_filter("nonzero direction", |[x, y, z]| x * x + y * y + z * z > 1e-2)
        .prop_map(|[x, y, z]| UnitImaginary::from_direction(x, y, z).unwrap())
}

fn euler(g: &QPoly) -> QPoly {
    (1..4).fold(QPoly::zero(), |acc, l| &acc + &(&QPoly::var(l) * &partial(g, l)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn g_leibniz_rules(f in qpoly(3, 4), g in qpoly(3, 4), lam in coef()) {
        let r2 = QPoly::vec_norm_sq();
        let v = QPoly::vec_q();
        prop_assert_eq!(
            global_g(&(&f.right_mul_quat(&lam) + &g)),
            &global_g(&f).right_mul_quat(&lam) + &global_g(&g)
        );
        prop_assert_eq!(
            global_g(&(&QPoly::var(0) * &f)),
            &(&r2 * &f) + &(&QPoly::var(0) * &global_g(&f))
        );
        prop_assert_eq!(global_g(&(&v * &f)), &(&v * &global_g(&f)) - &(&r2 * &f));
        let commutator = &(&v * &f) - &(&f * &v);
        let rhs = &(&(&global_g(&f) * &g) + &(&f * &global_g(&g))) + &(&commutator * &euler(&g));
        prop_assert_eq!(global_g(&(&f * &g)), rhs);
    }

    #[test]
    fn g_commutes_with_left_q_powers(f in qpoly(3, 4), k in 1u32..=5) {
        let qk = expand_q_power(k);
        prop_assert_eq!(global_g(&(&qk * &f)), &qk * &global_g(&f));
    }

    #[test]
    fn laplacian_factors_through_cauchy_fueter(p in qpoly(5, 5)) {
        let lap = laplacian(&p);
        prop_assert_eq!(cauchy_fueter(&conjugate_cf(&p)), lap.clone());
        prop_assert_eq!(conjugate_cf(&cauchy_fueter(&p)), lap);
    }

    #[test]
    fn laplacian_of_slice_regular_is_fueter_regular(s in series(6)) {
        prop_assert!(cauchy_fueter(&laplacian(&s.expand())).is_zero());
    }

    #[test]
    fn tau_lands_in_kernel_of_d(f in slice_poly(3, 4)) {
        let tau = tau_n(&f.expand(), f.order()).unwrap();
        prop_assert!(is_poly_fueter(&tau, 1));
    }

    #[test]
    fn v_matches_component_lowering(f in slice_poly(4, 4)) {
        prop_assert_eq!(global_v(&f.expand()).unwrap(), f.v_image().expand());
    }

    #[test]
    fn decompose_inverts_expand(f in slice_poly(4, 4)) {
        prop_assert_eq!(decompose(&f.expand(), f.order()).unwrap(), f.minimal());
    }

    #[test]
    fn pointwise_products_are_exact(p in qpoly(3, 4), r in qpoly(3, 4), q in coef()) {
        prop_assert_eq!((&p * &r).evaluate(&q), p.evaluate(&q) * r.evaluate(&q));
    }

    #[test]
    fn json_round_trips(p in qpoly(4, 5), f in slice_poly(3, 3)) {
        prop_assert_eq!(QPoly::from_json(&p.to_json()).unwrap(), p);
        prop_assert_eq!(SlicePolyFn::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn cr_derivative_of_order_n_vanishes(f in slice_poly(4, 4), q in point(1.0)) {
        let n = f.order();
        prop_assert!(f.cr_derivative_at(n, &q).is_zero());
        prop_assert!(f.cr_derivative_at(n + 2, &q).is_zero());
    }

    #[test]
    fn first_cr_derivative_matches_finite_differences(f in slice_poly(3, 3), u in unit(), x in -0.5f64..0.5, y in 0.05f64..0.5) {
        let z = u.point(&x, &y);
        let exact = f.cr_derivative_at(1, &z);
        let fd = fd_slice_cr_left(|p: &FloatQuat| f.eval(p), &u, x, y, 1e-4);
        prop_assert!(fd.dist(&exact) <= 1e-5 * exact.norm().max(1.0), "{} vs {}", fd, exact);
    }

    #[test]
    fn restriction_reconstructs_and_extension_recovers(f in slice_poly(3, 3), u in unit(), q in point(1.0)) {
        let companion = u.orthogonal_companion();
        let r = f.restrict(&u, &companion).unwrap();
        for (x, y) in [(0.3, 0.2), (-0.4, 0.7)] {
            let direct = f.eval(&u.point(&x, &y));
            prop_assert!(r.reconstruct(&x, &y).dist(&direct) <= 1e-12 * direct.norm().max(1.0));
        }
        let ext = slice_extend(|p: &FloatQuat| f.eval(p), &u, &q);
        let direct = f.eval(&q);
        prop_assert!(ext.dist(&direct) <= 1e-12 * direct.norm().max(1.0));
    }

    #[test]
    fn kernel_on_common_slice_is_resolvent(u in unit(), sx in 0.5f64..1.5, sy in -1.5f64..1.5, qx in -0.4f64..0.4, qy in -0.4f64..0.4) {
        let s = u.point(&sx, &sy);
        let q = u.point(&qx, &qy);
        let expected = (&s - &q).inverse().unwrap();
        prop_assert!(s_inv(&s, &q).unwrap().is_close(&expected, 1e-12 * expected.norm().max(1.0)));
    }

    #[test]
    fn laplacian_kernel_is_fueter_regular(u in unit(), theta in 0.0f64..6.28, q in point(0.8)) {
        let w = u.point(&theta.cos(), &theta.sin());
        let kernel = |p: &FloatQuat| delta_s_inv(&w, p).unwrap();
        let d = polyfueter::oracle::richardson(|h| fd_cauchy_fueter(kernel, &q, h), 1e-3);
        prop_assert!(d.norm() <= 1e-5, "{}", d);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn poly_cauchy_reproduces_on_any_slice(f in slice_poly(4, 5), u in unit(), q in point(0.9)) {
        let path = CirclePath::new(u, 1.0, 512).unwrap();
        let v = poly_cauchy_eval(&f, &q, &path).unwrap();
        let want = f.eval(&q);
        prop_assert!(v.dist(&want) <= 1e-10 * want.norm().max(1.0));
    }

    #[test]
    fn spectral_doubling(f in slice_poly(3, 5), u in unit(), q in point(0.9)) {
        let path = CirclePath::new(u, 1.0, 512).unwrap();
        let a = poly_cauchy_eval(&f, &q, &path).unwrap();
        let b = poly_cauchy_eval(&f, &q, &path.with_nodes(1024).unwrap()).unwrap();
        prop_assert!(a.dist(&b) <= 1e-13 * b.norm().max(1.0));
    }

    #[test]
    fn fueter_integral_is_fueter_regular_in_q(f in slice_poly(3, 4), u in unit(), q in point(0.8)) {
        let path = CirclePath::new(u, 1.0, 256).unwrap();
        let d = fd_cauchy_fueter(|p: &FloatQuat| fueter_integral(&f, p, &path).unwrap(), &q, 1e-3);
        let scale = fueter_integral(&f, &q, &path).unwrap().norm().max(1.0);
        prop_assert!(d.norm() <= 1e-6 * scale, "{}", d);
    }
}

#[test]
fn q_power_closed_forms_up_to_eight() {
    for n in 2..=8u32 {
        let d = (1..=n).fold(QPoly::zero(), |acc, k| &acc + &(&expand_q_power(n - k) * &expand_qbar_power(k - 1)));
        assert_eq!(cauchy_fueter(&expand_q_power(n)), d.scale(&rat(-2)), "n = {n}");
        let l = (1..n).fold(QPoly::zero(), |acc, k| {
            &acc + &(&expand_q_power(n - k - 1) * &expand_qbar_power(k - 1)).scale(&rat(i64::from(n - k)))
        });
        assert_eq!(laplacian(&expand_q_power(n)), l.scale(&rat(-4)), "n = {n}");
    }
}

/// Commuting the kernel with `dw_I` breaks the reconstruction as soon as the
/// data do not commute with the slice.
#[test]
fn kernel_and_measure_order_matters() {
    let f = SlicePolyFn::new(vec![
        SliceRegularSeries::new(vec![ExactQuat::from_i64s(0, 0, 1, 0), ExactQuat::from_i64s(1, 0, 0, 2)]),
        SliceRegularSeries::new(vec![ExactQuat::from_i64s(0, 1, 0, 1)]),
    ])
    .unwrap();
    let path = CirclePath::default();
    let q = FloatQuat::new(0.2, 0.1, 0.3, -0.2);
    let want = f.eval(&q);

    let sum = |swap: bool| {
        let mut acc = FloatQuat::zero();
        for node in path.nodes() {
            for j in 0..f.order() {
                let k = polyfueter::kernels::f_j(&node.w, &q, j).unwrap().scale(&(-2f64).powi(j as i32));
                let d = f.cr_derivative_at(j, &node.w);
                acc += &if swap { &node.dw * &k * d } else { k * &node.dw * d };
            }
        }
        acc.scale(&(0.5 / std::f64::consts::PI))
    };
    assert!(sum(false).dist(&want) <= 1e-12);
    assert_eq!(poly_cauchy_eval(&f, &q, &path).unwrap(), sum(false));
    assert!(sum(true).dist(&want) > 1e-2, "swapped order should not reproduce f");
}
