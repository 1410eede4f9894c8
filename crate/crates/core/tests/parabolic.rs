use coxeter_sle::parabolic::{self, parabolic_data};
use coxeter_sle::sampling::{self, random_combination};
use coxeter_sle::{Budget, CoinvariantRing, CoxeterType, Family, NfElem, RootSystem};

fn setup(f: Family) -> (RootSystem, CoinvariantRing) {
    let rs = RootSystem::build(&CoxeterType::irreducible(f).unwrap()).unwrap();
    let ring = CoinvariantRing::build(&rs).unwrap();
    (rs, ring)
}

fn subsets(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..(1usize << rank) - 1).map(move |mask| (0..rank).filter(|i| mask >> i & 1 == 1).collect())
}

#[test]
fn invariant_hilbert_is_palindromic_and_sums_to_index() {
    for f in [Family::A(2), Family::A(3), Family::B(3), Family::I2(5), Family::H3] {
        let (rs, ring) = setup(f);
        for s in subsets(rs.rank()) {
            let pd = parabolic_data(&rs, &s, &Budget::unlimited()).unwrap();
            let h = parabolic::invariant_basis(&ring, &pd).unwrap().hilbert();
            let rev: Vec<usize> = h.iter().rev().copied().collect();
            assert_eq!(h, rev, "{f} {s:?}");
            assert_eq!(h.iter().sum::<usize>() * pd.group().len(), rs.order() as usize, "{f} {s:?}");
            assert_eq!(h.len() - 1, rs.reflection_count() - pd.m_s(), "{f} {s:?}");
        }
    }
}

/// The diagram flip of A3 swaps the first and last simple roots; on coordinates it is
/// `x ↦ −reverse(x)`. Verdicts must be carried along.
#[test]
fn a3_diagram_flip_transports_verdicts() {
    let (rs, ring) = setup(Family::A(3));
    let flip = |v: &[NfElem]| -> Vec<NfElem> { v.iter().rev().map(|x| -x.clone()).collect() };
    for a in rs.simple_roots().iter() {
        assert!(rs.simple_roots().contains(&flip(a)));
    }
    let mut rng = sampling::rng(9);
    for (s, t) in [(vec![0], vec![2]), (vec![0, 1], vec![1, 2]), (vec![1], vec![1])] {
        let (ps, pt) = (parabolic_data(&rs, &s, &Budget::unlimited()).unwrap(), parabolic_data(&rs, &t, &Budget::unlimited()).unwrap());
        let (is, it) = (parabolic::invariant_basis(&ring, &ps).unwrap(), parabolic::invariant_basis(&ring, &pt).unwrap());
        let fixed = parabolic::invariant_linear_forms(&rs, &ps);
        let mut seen = [false; 2];
        for n in 0..40 {
            let mut l = random_combination(&fixed, rs.dim(), &mut rng);
            if n % 4 == 0 {
                // land on a mirror outside S half the time we can
                let beta = rs.positive_roots().iter().enumerate().find(|(i, _)| !ps.contains_root(*i)).unwrap().1;
                l = coxeter_sle::coxeter::project_to_mirror(&l, beta);
                if parabolic::sle_criterion_parabolic(&rs, &ps, &l).is_err() {
                    continue;
                }
            }
            let v = parabolic::is_sle_parabolic(&ring, &ps, &is, &l).unwrap().result;
            let w = parabolic::is_sle_parabolic(&ring, &pt, &it, &flip(&l)).unwrap().result;
            assert_eq!(v, w, "{s:?} {l:?}");
            seen[v as usize] = true;
        }
        assert!(seen[1]);
    }
}
