use std::sync::Arc;

use coxeter_sle::numfield::{golden_field, real_cyclotomic_field};
use coxeter_sle::scalar::ratio;
use coxeter_sle::{NfElem, NumberField};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn field(which: u8) -> Arc<NumberField> {
    match which {
        0 => golden_field(),
        1 => real_cyclotomic_field(14),
        _ => real_cyclotomic_field(20),
    }
}

fn elem(f: &Arc<NumberField>, raw: &[(i64, i64)]) -> NfElem {
    NfElem::from_coeffs(f, raw.iter().take(f.degree()).map(|&(n, d)| ratio(n, d)).collect())
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-50i64..=50, 1i64..=9), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(which in 0u8..3, x in coeffs(), y in coeffs(), z in coeffs()) {
        let f = field(which);
        let (a, b, c) = (elem(&f, &x), elem(&f, &y), elem(&f, &z));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn inverse_and_sign(which in 0u8..3, x in coeffs(), y in coeffs()) {
        let f = field(which);
        let (a, b) = (elem(&f, &x), elem(&f, &y));
        prop_assert_eq!((&a * &b).signum(), a.signum() * b.signum());
        prop_assert_eq!((-a.clone()).signum(), -a.signum());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.try_inv().unwrap(), NfElem::one());
            prop_assert!((&a * &a).is_positive());
        }
        let fa = a.to_f64();
        if fa.abs() > 1e-9 {
            prop_assert_eq!(fa > 0.0, a.is_positive());
        }
    }
}

#[test]
fn generators_are_the_expected_reals() {
    let tau = NfElem::generator(&golden_field());
    assert!((tau.to_f64() - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
    let c = NfElem::generator(&real_cyclotomic_field(14));
    assert!((c.to_f64() - 2.0 * (std::f64::consts::PI / 7.0).cos()).abs() < 1e-12);
}
