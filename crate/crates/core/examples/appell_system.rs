//! `V / 2` lowers `qbar^k f` to `k qbar^(k-1) f`.

use polyfueter::quat::ExactQuat;
use polyfueter::slicefn::{appell_apply, appell_check, SliceRegularSeries};

fn main() {
    let f = SliceRegularSeries::new(vec![ExactQuat::from_i64s(1, 0, 2, 0), ExactQuat::zero(), ExactQuat::k()]);
    for k in 0..=6 {
        let psi = appell_apply(&f, k);
        println!(
            "k = {k}: order {}, {} terms, identity holds: {}",
            psi.order(),
            psi.expand().len(),
            appell_check(&f, k).unwrap()
        );
    }
}
