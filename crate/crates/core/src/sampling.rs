//! Seeded random linear forms.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::coxeter::{dot, Vector};
use crate::linalg::DenseMatrix;
use crate::numfield::NfElem;
use crate::scalar::ratio;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p| ≤ 20`, `1 ≤ q ≤ 6`.
pub fn random_rational(rng: &mut impl Rng) -> NfElem {
    NfElem::from_rational(ratio(rng.gen_range(-20..=20), rng.gen_range(1..=6)))
}

/// Random rational combination of `basis`.
pub fn random_combination(basis: &[Vector], dim: usize, rng: &mut impl Rng) -> Vector {
    let mut v = vec![NfElem::from_int(0); dim];
    for b in basis {
        let c = random_rational(rng);
        for (x, y) in v.iter_mut().zip(b) {
            *x += &(&c * y);
        }
    }
    v
}

/// Basis of the vectors orthogonal to every row of `constraints`.
pub fn orthogonal_complement(constraints: &[Vector], dim: usize) -> Vec<Vector> {
    if constraints.is_empty() {
        return (0..dim).map(|i| (0..dim).map(|j| NfElem::from_int((i == j) as i64)).collect()).collect();
    }
    DenseMatrix::from_rows(constraints.to_vec()).kernel()
}

/// A random vector orthogonal to all `constraints`; `None` when only zero qualifies
/// or the draw landed on zero repeatedly.
pub fn random_orthogonal(constraints: &[Vector], dim: usize, rng: &mut impl Rng) -> Option<Vector> {
    let basis = orthogonal_complement(constraints, dim);
    if basis.is_empty() {
        return None;
    }
    (0..8).map(|_| random_combination(&basis, dim, rng)).find(|v| v.iter().any(|x| !num_traits::Zero::is_zero(x)))
}

/// Whether `v` is orthogonal to every constraint.
pub fn is_orthogonal(v: &[NfElem], constraints: &[Vector]) -> bool {
    constraints.iter().all(|c| num_traits::Zero::is_zero(&dot(v, c)))
}
