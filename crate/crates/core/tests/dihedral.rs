use coxeter_sle::dihedral::{bruhat_diagram, mult_determinant, pieri_matrices, pieri_matrices_in};
use coxeter_sle::numfield::two_cos;
use coxeter_sle::scalar::rat;
use coxeter_sle::{CoinvariantRing, CoxeterType, Family, NfElem, RootSystem};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn ratios(m: u32, k: usize, second_weight: &[NfElem], rs: &RootSystem, ring: &CoinvariantRing, c: &NfElem) -> Vec<NfElem> {
    let w1 = &rs.fundamental_weights()[0];
    let pm = pieri_matrices_in(c, m, k).unwrap();
    let mut out = Vec::new();
    for (a, b) in [(1, 0), (0, 1), (1, 1), (2, -1), (3, 5), (-1, 4)] {
        let (a, b) = (NfElem::from_int(a), NfElem::from_int(b));
        let l: Vec<NfElem> = w1.iter().zip(second_weight).map(|(x, y)| &a * x + &b * y).collect();
        let pieri = pm.combined(&a, &b).det();
        if !pieri.is_zero() {
            out.push(ring.linear_map(&l, k).unwrap().det() / pieri);
        }
    }
    out
}

fn constant(v: &[NfElem]) -> bool {
    v.windows(2).all(|w| w[0] == w[1])
}

#[test]
fn misprinted_weight_breaks_the_ratio() {
    for m in [5u32, 6, 7] {
        let rs = RootSystem::build(&CoxeterType::irreducible(Family::I2(m)).unwrap()).unwrap();
        let ring = CoinvariantRing::build(&rs).unwrap();
        let field = rs.field().unwrap();
        let n = num_integer::lcm(2 * m as u64, 4);
        let c = two_cos(field, n, (n / (2 * m as u64)) as i64);
        // 2 sin(π/m) = 2 cos(π/2 − π/m)
        let two_sin = two_cos(field, n, (n * (m as u64 - 2) / (4 * m as u64)) as i64);
        let misprint = vec![NfElem::one() / &two_sin, NfElem::zero()];
        let good = rs.fundamental_weights()[1].clone();
        let mut broken = false;
        for k in 1..=m as usize - 2 {
            assert!(constant(&ratios(m, k, &good, &rs, &ring, &c)), "m={m} k={k}");
            broken |= !constant(&ratios(m, k, &misprint, &rs, &ring, &c));
        }
        assert!(broken, "m={m}");
    }
}

#[test]
fn bruhat_diagrams_verify() {
    for m in 3..=12 {
        let d = bruhat_diagram(m).unwrap();
        assert!(d.verify(), "m={m}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_matches_matrix(m in 3u32..=12, k_frac in 0.0f64..1.0, a in -9i64..=9, b in -9i64..=9) {
        let k = 1 + ((m - 2) as f64 * k_frac) as usize;
        let k = k.min(m as usize - 2);
        let (a, b) = (NfElem::from_rational(rat(a)), NfElem::from_rational(rat(b)));
        let pm = pieri_matrices(m, k).unwrap();
        prop_assert_eq!(pm.combined(&a, &b).det(), mult_determinant(m, k, &a, &b).unwrap());
    }
}
