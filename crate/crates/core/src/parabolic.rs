//! Parabolic subgroups `W_S` and the invariant subrings `R^{W_S}`.

use num_traits::Zero;

use crate::budget::Budget;
use crate::coinvariant::CoinvariantRing;
use crate::coxeter::{dot, GroupElementSet, Matrix, RootSystem, Vector};
use crate::error::{Error, Result};
use crate::lefschetz::{LevelReport, SleVerdict};
use crate::linalg::DenseMatrix;
use crate::numfield::NfElem;

#[derive(Clone, Debug)]
pub struct ParabolicData {
    subset: Vec<usize>,
    group: GroupElementSet,
    /// Indices into `rs.positive_roots()` of the roots in the span of `S`.
    roots: Vec<usize>,
}

impl ParabolicData {
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn group(&self) -> &GroupElementSet {
        &self.group
    }

    pub fn root_indices(&self) -> &[usize] {
        &self.roots
    }

    /// Length of the longest element of `W_S`, equal to its number of reflections.
    pub fn m_s(&self) -> usize {
        self.roots.len()
    }

    pub fn contains_root(&self, i: usize) -> bool {
        self.roots.binary_search(&i).is_ok()
    }
}

pub fn parabolic_data(rs: &RootSystem, subset: &[usize], budget: &Budget) -> Result<ParabolicData> {
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    if let Some(&bad) = subset.iter().find(|&&i| i >= rs.rank()) {
        return Err(Error::Parse(format!("simple reflection index {} out of range 1..={}", bad + 1, rs.rank())));
    }
    let gens: Vec<Matrix> = subset.iter().map(|&i| rs.simple_reflections()[i].clone()).collect();
    let group = GroupElementSet::generate(rs, &gens, crate::coxeter::MAX_GROUP_ORDER, budget)?;
    let roots: Vec<usize> = rs
        .positive_roots()
        .iter()
        .enumerate()
        .filter(|(_, b)| {
            let c = rs.simple_root_coords(b).expect("roots lie in the span of the simple roots");
            c.iter().enumerate().all(|(j, x)| x.is_zero() || subset.contains(&j))
        })
        .map(|(i, _)| i)
        .collect();
    if group.max_length() != roots.len() {
        return Err(Error::Inconsistent(format!("longest element of W_S has length {} but {} roots lie in its span", group.max_length(), roots.len())));
    }
    Ok(ParabolicData { subset, group, roots })
}

/// Coefficientwise quotient of the Poincaré polynomial of `W` by that of `W_S`.
pub fn coset_hilbert(rs: &RootSystem, pd: &ParabolicData) -> Vec<usize> {
    let num: Vec<i64> = rs.poincare_polynomial().iter().map(|&x| x as i64).collect();
    let den: Vec<i64> = pd.group.length_profile().iter().map(|&x| x as i64).collect();
    let mut rem = num.clone();
    let qlen = num.len() - den.len() + 1;
    let mut q = vec![0i64; qlen];
    for i in 0..qlen {
        // den[0] = 1 (only the identity has length 0).
        let c = rem[i];
        q[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q.into_iter().map(|x| x as usize).collect()
}

/// Bases of `R^{W_S}_d` as coordinate vectors over the standard monomial bases.
#[derive(Clone, Debug)]
pub struct ParabolicInvariantRing {
    bases: Vec<Vec<Vector>>,
}

impl ParabolicInvariantRing {
    pub fn basis(&self, d: usize) -> &[Vector] {
        self.bases.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn hilbert(&self) -> Vec<usize> {
        let mut h: Vec<usize> = self.bases.iter().map(Vec::len).collect();
        while h.len() > 1 && h.last() == Some(&0) {
            h.pop();
        }
        h
    }

    pub fn top_degree(&self) -> usize {
        self.hilbert().len() - 1
    }
}

pub fn invariant_basis(ring: &CoinvariantRing, pd: &ParabolicData) -> Result<ParabolicInvariantRing> {
    let rs = ring.root_system();
    let expected = coset_hilbert(rs, pd);
    let mut bases = Vec::with_capacity(ring.socle_degree() + 1);
    for d in 0..=ring.socle_degree() {
        let n = ring.dim(d);
        let basis = if pd.subset.is_empty() {
            (0..n).map(|i| (0..n).map(|j| NfElem::from_int((i == j) as i64)).collect()).collect()
        } else {
            let blocks: Vec<Matrix> = pd
                .subset
                .iter()
                .map(|&s| ring.action_matrix(&rs.simple_reflections()[s], d)?.sub(&DenseMatrix::identity(n)))
                .collect::<Result<_>>()?;
            DenseMatrix::vstack(&blocks).kernel()
        };
        let want = expected.get(d).copied().unwrap_or(0);
        if basis.len() != want {
            return Err(Error::DimensionMismatch { expected: want, got: basis.len() });
        }
        bases.push(basis);
    }
    Ok(ParabolicInvariantRing { bases })
}

fn check_invariant(rs: &RootSystem, pd: &ParabolicData, l: &[NfElem]) -> Result<()> {
    if l.len() != rs.dim() {
        return Err(Error::DimensionMismatch { expected: rs.dim(), got: l.len() });
    }
    for &s in &pd.subset {
        if !dot(l, &rs.simple_roots()[s]).is_zero() {
            return Err(Error::NotInvariant(format!("moved by simple reflection s{}", s + 1)));
        }
    }
    Ok(())
}

/// Basis of the linear forms fixed by `W_S`, as ambient vectors.
pub fn invariant_linear_forms(rs: &RootSystem, pd: &ParabolicData) -> Vec<Vector> {
    let constraints: Vec<Vector> = pd.subset.iter().map(|&s| rs.simple_roots()[s].clone()).collect();
    crate::sampling::orthogonal_complement(&constraints, rs.dim())
}

/// Strong Lefschetz test on `R^{W_S}` with socle degree `m - m_S`.
pub fn is_sle_parabolic(ring: &CoinvariantRing, pd: &ParabolicData, inv: &ParabolicInvariantRing, l: &[NfElem]) -> Result<SleVerdict> {
    check_invariant(ring.root_system(), pd, l)?;
    let top = ring.socle_degree() - pd.m_s();
    let mut levels = Vec::new();
    for i in 0..=top / 2 {
        let src = inv.basis(i);
        let dst = inv.basis(top - i);
        let p = ring.multiplication_matrix(l, i, top - 2 * i)?;
        let dst_mat = DenseMatrix::from_fn(ring.dim(top - i), dst.len(), |r, c| dst[c][r].clone());
        let cols: Vec<Vector> = src
            .iter()
            .map(|v| {
                let image = p.mul_vec(v)?;
                dst_mat.solve(&image).ok_or_else(|| Error::Inconsistent(format!("image of degree {i} leaves the invariant subring")))
            })
            .collect::<Result<_>>()?;
        let x = DenseMatrix::from_fn(dst.len(), src.len(), |r, c| cols[c][r].clone());
        levels.push(LevelReport { level: i, size: src.len(), det_sign: x.det().signum() });
    }
    Ok(SleVerdict { result: levels.iter().all(|r| r.det_sign != 0), levels })
}

/// `ℓ` pairs nonzero with every positive root outside the span of `S`.
pub fn sle_criterion_parabolic(rs: &RootSystem, pd: &ParabolicData, l: &[NfElem]) -> Result<bool> {
    check_invariant(rs, pd, l)?;
    Ok(rs.positive_roots().iter().enumerate().all(|(i, b)| pd.contains_root(i) || !dot(l, b).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterType, Family};

    fn setup(f: Family) -> (RootSystem, CoinvariantRing) {
        let rs = RootSystem::build(&CoxeterType::irreducible(f).unwrap()).unwrap();
        let ring = CoinvariantRing::build(&rs).unwrap();
        (rs, ring)
    }

    #[test]
    fn subgroup_sizes() {
        let (rs, _) = setup(Family::A(3));
        let b = Budget::unlimited();
        assert_eq!(parabolic_data(&rs, &[], &b).unwrap().m_s(), 0);
        let pd = parabolic_data(&rs, &[0, 1], &b).unwrap();
        assert_eq!((pd.group().len(), pd.m_s()), (6, 3));
        assert_eq!(parabolic_data(&rs, &[0, 1, 2], &b).unwrap().m_s(), 6);
        assert!(parabolic_data(&rs, &[3], &b).is_err());
    }

    #[test]
    fn invariant_dimensions() {
        let (rs, ring) = setup(Family::A(2));
        let pd = parabolic_data(&rs, &[0], &Budget::unlimited()).unwrap();
        assert_eq!(coset_hilbert(&rs, &pd), vec![1, 1, 1]);
        assert_eq!(invariant_basis(&ring, &pd).unwrap().hilbert(), vec![1, 1, 1]);

        let (rs, ring) = setup(Family::B(2));
        let pd = parabolic_data(&rs, &[0], &Budget::unlimited()).unwrap();
        let inv = invariant_basis(&ring, &pd).unwrap();
        assert_eq!(inv.hilbert(), vec![1, 1, 1, 1]);
        assert_eq!(inv.top_degree(), 3);
        let none = parabolic_data(&rs, &[], &Budget::unlimited()).unwrap();
        assert_eq!(invariant_basis(&ring, &none).unwrap().hilbert(), ring.hilbert());
    }

    #[test]
    fn a2_weight_examples() {
        let (rs, ring) = setup(Family::A(2));
        let pd = parabolic_data(&rs, &[0], &Budget::unlimited()).unwrap();
        let inv = invariant_basis(&ring, &pd).unwrap();
        let w2 = rs.fundamental_weights()[1].clone();
        assert!(is_sle_parabolic(&ring, &pd, &inv, &w2).unwrap().result);
        assert!(sle_criterion_parabolic(&rs, &pd, &w2).unwrap());
        let w1 = rs.fundamental_weights()[0].clone();
        assert!(matches!(is_sle_parabolic(&ring, &pd, &inv, &w1), Err(Error::NotInvariant(_))));
        assert!(matches!(sle_criterion_parabolic(&rs, &pd, &w1), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn empty_subset_matches_full_test() {
        let (rs, ring) = setup(Family::B(2));
        let pd = parabolic_data(&rs, &[], &Budget::unlimited()).unwrap();
        let inv = invariant_basis(&ring, &pd).unwrap();
        let l: Vector = [3, 1].iter().map(|&x| NfElem::from_int(x)).collect();
        assert_eq!(is_sle_parabolic(&ring, &pd, &inv, &l).unwrap(), crate::lefschetz::is_sle(&ring, &l).unwrap());
        assert_eq!(sle_criterion_parabolic(&rs, &pd, &l).unwrap(), rs.sle_criterion(&l).unwrap());
    }
}
