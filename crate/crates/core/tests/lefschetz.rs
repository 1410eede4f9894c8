use coxeter_sle::lefschetz::{self, DetMethod};
use coxeter_sle::sampling::{self, random_rational};
use coxeter_sle::{Budget, CoinvariantRing, CoxeterType, Family, GroupElementSet, NfElem, RootSystem};

fn setup(f: Family) -> (RootSystem, CoinvariantRing) {
    let rs = RootSystem::build(&CoxeterType::irreducible(f).unwrap()).unwrap();
    let ring = CoinvariantRing::build(&rs).unwrap();
    (rs, ring)
}

#[test]
fn verdict_is_w_invariant() {
    let mut rng = sampling::rng(5);
    for f in [Family::A(2), Family::B(3), Family::I2(5)] {
        let (rs, ring) = setup(f);
        let group = GroupElementSet::enumerate(&rs, &Budget::unlimited()).unwrap();
        for trial in 0..4 {
            let mut l: Vec<NfElem> = (0..rs.dim()).map(|_| random_rational(&mut rng)).collect();
            if trial == 0 {
                // a mirror element, so both verdicts occur
                l = coxeter_sle::coxeter::project_to_mirror(&l, &rs.positive_roots()[0]);
            }
            let v = lefschetz::is_sle(&ring, &l).unwrap().result;
            for w in group.elements().iter().step_by(3) {
                let wl = w.matrix.mul_vec(&l).unwrap();
                assert_eq!(lefschetz::is_sle(&ring, &wl).unwrap().result, v, "{f}");
            }
        }
    }
}

#[test]
fn specialization_commutes_with_determinant() {
    let mut rng = sampling::rng(11);
    for f in [Family::B(2), Family::A(3), Family::I2(5)] {
        let (rs, ring) = setup(f);
        let w = rs.fundamental_weights().to_vec();
        for i in 0..=ring.socle_degree() / 2 {
            for method in [DetMethod::Elimination, DetMethod::Interpolation] {
                let f_i = lefschetz::symbolic_determinant(&ring, &w, i, method, &Budget::unlimited()).unwrap();
                for _ in 0..3 {
                    let a: Vec<NfElem> = (0..w.len()).map(|_| random_rational(&mut rng)).collect();
                    let l = lefschetz::combine(&w, &a);
                    let direct = lefschetz::level_matrix(&ring, &l, i).unwrap().det();
                    assert_eq!(f_i.eval(&a), direct, "{f} level {i} {method:?}");
                }
            }
        }
    }
}

#[test]
fn table_and_direct_multiplication_agree() {
    let mut rng = sampling::rng(12);
    for f in [Family::A(3), Family::I2(7), Family::H3] {
        let (rs, ring) = setup(f);
        let l: Vec<NfElem> = (0..rs.dim()).map(|_| random_rational(&mut rng)).collect();
        for (i, k) in [(0, ring.socle_degree()), (1, 2), (2, 1)] {
            if i + k > ring.socle_degree() {
                continue;
            }
            assert_eq!(ring.multiplication_matrix(&l, i, k).unwrap(), ring.multiplication_matrix_direct(&l, i, k).unwrap());
        }
    }
}

/// Full H3 table; hours on a single core, so run on demand:
/// `cargo test --release -p coxeter-sle --test lefschetz -- --ignored`.
#[test]
#[ignore]
fn h3_all_levels() {
    let rows: [[usize; 6]; 8] = [
        [82, 1, 1, 0, 0, 0],
        [0, 0, 0, 650, 1, 1],
        [1362, 1, 1, 0, 0, 0],
        [0, 0, 0, 1843, 1, 1],
        [1877, 1, 1, 0, 0, 0],
        [0, 0, 0, 1422, 1, 1],
        [680, 1, 1, 0, 0, 0],
        [86, 1, 1, 0, 0, 0],
    ];
    let (rs, ring) = setup(Family::H3);
    let w = lefschetz::h3_weights(&rs).unwrap();
    for (i, row) in rows.iter().enumerate() {
        let f = lefschetz::symbolic_determinant(&ring, &w, i, DetMethod::Interpolation, &Budget::unlimited()).unwrap();
        let (f, _) = lefschetz::normalize_sign(f, lefschetz::h3_level_sign(i));
        let t = lefschetz::sign_table(&f).unwrap();
        println!("f{i} {:?} total {}", t.counts, t.total);
        assert_eq!(t.uniform_sign(), Some(lefschetz::h3_level_sign(i)));
        assert_eq!(t.total, row.iter().sum::<usize>(), "f{i}");
        assert_eq!(&t.counts[..6], row, "f{i}");
    }
}
