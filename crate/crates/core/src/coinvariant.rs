//! The coinvariant ring `R = K[V] / J` with per-degree standard-monomial bases.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::coxeter::{Matrix, RootSystem};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, reduce};
use crate::linalg::DenseMatrix;
use crate::numfield::NfElem;
use crate::poly::{act, fundamental_invariants, InvariantSystem, Monomial, Polynomial};
use crate::scalar::Ring;

type Poly = Polynomial<NfElem>;

/// Largest number of ambient variables accepted for ring construction.
pub const MAX_RING_VARS: usize = 4;

#[derive(Clone, Debug)]
pub struct CoinvariantRing {
    rs: RootSystem,
    invariants: InvariantSystem,
    gb: Vec<Poly>,
    /// Standard monomials of each degree, ascending in degrevlex.
    basis: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    /// `var_maps[d][v]`: matrix of `×x_v : R_d → R_{d+1}`.
    var_maps: Vec<Vec<Matrix>>,
}

impl CoinvariantRing {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        Self::build_within(rs, &Budget::unlimited())
    }

    pub fn build_within(rs: &RootSystem, budget: &Budget) -> Result<Self> {
        if rs.order() > crate::coxeter::MAX_GROUP_ORDER {
            return Err(Error::BudgetExceeded(format!("quotient dimension {} is too large", rs.order())));
        }
        if rs.dim() > MAX_RING_VARS {
            return Err(Error::BudgetExceeded(format!("{} variables exceed the limit of {MAX_RING_VARS}", rs.dim())));
        }
        let n = rs.dim();
        let invariants = fundamental_invariants(rs)?;
        let gb = groebner_basis(invariants.polys(), budget)?;
        let lms: Vec<Monomial> = gb.iter().map(|g| g.leading_monomial().unwrap()).collect();

        let mut basis: Vec<Vec<Monomial>> = Vec::new();
        for d in 0.. {
            budget.check("standard monomials")?;
            let mut std: Vec<Monomial> = Monomial::all_of_degree(n, d).into_iter().filter(|m| !lms.iter().any(|l| l.divides(m))).collect();
            if std.is_empty() {
                break;
            }
            if d as usize > rs.reflection_count() {
                // Cannot happen for an ideal generated by a full invariant system.
                return Err(Error::HilbertMismatch { expected: rs.poincare_polynomial(), got: basis.iter().map(Vec::len).collect() });
            }
            std.sort();
            basis.push(std);
        }
        let hilbert: Vec<usize> = basis.iter().map(Vec::len).collect();
        let expected = rs.poincare_polynomial();
        if hilbert != expected {
            return Err(Error::HilbertMismatch { expected, got: hilbert });
        }
        let index = basis.iter().map(|b| b.iter().enumerate().map(|(i, m)| (*m, i)).collect()).collect();

        let mut ring = CoinvariantRing { rs: rs.clone(), invariants, gb, basis, index, var_maps: Vec::new() };
        let socle = ring.socle_degree();
        let mut var_maps = Vec::with_capacity(socle);
        for d in 0..socle {
            budget.check("multiplication tables")?;
            let maps = (0..n)
                .map(|v| {
                    let xv = Monomial::var(v);
                    let cols: Vec<Vec<NfElem>> = ring.basis[d]
                        .iter()
                        .map(|b| ring.coords(d + 1, &ring.normal_form(&Poly::term(b.mul(&xv), NfElem::one()))))
                        .collect();
                    DenseMatrix::from_fn(ring.basis[d + 1].len(), ring.basis[d].len(), |i, j| cols[j][i].clone())
                })
                .collect();
            var_maps.push(maps);
        }
        ring.var_maps = var_maps;
        Ok(ring)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn nvars(&self) -> usize {
        self.rs.dim()
    }

    pub fn invariants(&self) -> &InvariantSystem {
        &self.invariants
    }

    pub fn groebner_basis(&self) -> &[Poly] {
        &self.gb
    }

    /// Top nonzero degree.
    pub fn socle_degree(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, Vec::len)
    }

    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    pub fn basis(&self, d: usize) -> &[Monomial] {
        &self.basis[d]
    }

    /// The standard monomial spanning the top degree.
    pub fn top_monomial(&self) -> Monomial {
        self.basis[self.socle_degree()][0]
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        reduce(p, &self.gb)
    }

    /// Coordinates in `B_d` of a polynomial already in normal form; other degrees are ignored.
    pub fn coords(&self, d: usize, nf: &Poly) -> Vec<NfElem> {
        let mut v = vec![NfElem::zero(); self.dim(d)];
        for (m, c) in nf.terms() {
            if m.degree() as usize == d {
                v[self.index[d][m]] = c.clone();
            }
        }
        v
    }

    /// The element `sum coords[i] * B_d[i]`.
    pub fn element(&self, d: usize, coords: &[NfElem]) -> Poly {
        Poly::from_terms(self.basis[d].iter().zip(coords).map(|(m, c)| (*m, c.clone())))
    }

    fn check_linear(&self, l: &[NfElem]) -> Result<()> {
        if l.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: l.len() });
        }
        Ok(())
    }

    fn check_range(&self, i: usize, k: usize) -> Result<()> {
        let m = self.socle_degree();
        if i + k > m {
            return Err(Error::DegreeOutOfRange { degree: i + k, max: m });
        }
        Ok(())
    }

    /// Matrix of `×ℓ : R_d → R_{d+1}` for a linear form with coefficients in any ring `S`.
    pub fn linear_map_in<S: Ring>(&self, l: &[S], d: usize, embed: &impl Fn(&NfElem) -> S) -> DenseMatrix<S> {
        let (rows, cols) = (self.dim(d + 1), self.dim(d));
        let mut out = DenseMatrix::<S>::zeros(rows, cols);
        for (v, lv) in l.iter().enumerate() {
            if lv.is_zero() {
                continue;
            }
            let m = &self.var_maps[d][v];
            for i in 0..rows {
                for j in 0..cols {
                    if !m[(i, j)].is_zero() {
                        let t = embed(&m[(i, j)]).mul_ref(lv);
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `×ℓ^k : R_i → R_{i+k}` over any coefficient ring `S`.
    pub fn power_map_in<S: Ring>(&self, l: &[S], i: usize, k: usize, embed: &impl Fn(&NfElem) -> S, budget: &Budget) -> Result<DenseMatrix<S>> {
        self.check_range(i, k)?;
        let mut m = DenseMatrix::<S>::identity(self.dim(i));
        for d in i..i + k {
            budget.check("multiplication map")?;
            m = self.linear_map_in(l, d, embed).mul(&m)?;
        }
        Ok(m)
    }

    /// Matrix of `×ℓ : R_d → R_{d+1}`.
    pub fn linear_map(&self, l: &[NfElem], d: usize) -> Result<Matrix> {
        self.check_linear(l)?;
        self.check_range(d, 1)?;
        Ok(self.linear_map_in(l, d, &|x: &NfElem| x.clone()))
    }

    /// Matrix of `f ↦ NF(ℓ^k f)` from `B_i` to `B_{i+k}`, built from the per-variable tables.
    pub fn multiplication_matrix(&self, l: &[NfElem], i: usize, k: usize) -> Result<Matrix> {
        self.check_linear(l)?;
        self.power_map_in(l, i, k, &|x: &NfElem| x.clone(), &Budget::unlimited())
    }

    /// Same map computed column by column as normal forms of `ℓ^k b`.
    pub fn multiplication_matrix_direct(&self, l: &[NfElem], i: usize, k: usize) -> Result<Matrix> {
        self.check_linear(l)?;
        self.check_range(i, k)?;
        let lk = Poly::linear_form(l).pow(k as u32);
        let cols: Vec<Vec<NfElem>> =
            self.basis[i].iter().map(|b| self.coords(i + k, &self.normal_form(&lk.mul_term(b, &NfElem::one())))).collect();
        Ok(DenseMatrix::from_fn(self.dim(i + k), self.dim(i), |r, c| cols[c][r].clone()))
    }

    /// Gram matrix of `(f, g) ↦` top coefficient of `NF(f g)` on `B_d × B_{m-d}`.
    pub fn poincare_pairing(&self, d: usize) -> Result<Matrix> {
        let m = self.socle_degree();
        if d > m {
            return Err(Error::DegreeOutOfRange { degree: d, max: m });
        }
        let top = self.top_monomial();
        let (a, b) = (&self.basis[d], &self.basis[m - d]);
        Ok(DenseMatrix::from_fn(a.len(), b.len(), |i, j| self.normal_form(&Poly::term(a[i].mul(&b[j]), NfElem::one())).coeff(&top)))
    }

    /// Matrix of the action of `g` on `R_d`.
    pub fn action_matrix(&self, g: &Matrix, d: usize) -> Result<Matrix> {
        let cols: Vec<Vec<NfElem>> = self.basis[d]
            .iter()
            .map(|b| Ok(self.coords(d, &self.normal_form(&act(g, &Poly::term(*b, NfElem::one()))?))))
            .collect::<Result<_>>()?;
        Ok(DenseMatrix::from_fn(self.dim(d), self.dim(d), |i, j| cols[j][i].clone()))
    }

    /// Whether every simple reflection acts on the top degree by `-1`.
    pub fn is_antiinvariant_top(&self) -> Result<bool> {
        let m = self.socle_degree();
        for s in self.rs.simple_reflections() {
            let a = self.action_matrix(s, m)?;
            if a[(0, 0)] != -NfElem::one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterType, Family};

    fn ring(f: Family) -> CoinvariantRing {
        let rs = RootSystem::build(&CoxeterType::irreducible(f).unwrap()).unwrap();
        CoinvariantRing::build(&rs).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<NfElem> {
        v.iter().map(|&x| NfElem::from_int(x)).collect()
    }

    #[test]
    fn small_hilbert_functions() {
        assert_eq!(ring(Family::A(2)).hilbert(), vec![1, 2, 2, 1]);
        assert_eq!(ring(Family::I2(5)).hilbert(), vec![1, 2, 2, 2, 2, 1]);
        assert_eq!(ring(Family::B(2)).hilbert(), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn generators_reduce_to_zero() {
        let r = ring(Family::A(3));
        for p in r.invariants().polys() {
            assert!(r.normal_form(p).is_zero());
        }
    }

    #[test]
    fn table_route_matches_direct_normal_forms() {
        let r = ring(Family::B(3));
        let l = ints(&[3, -1, 2]);
        for i in 0..r.socle_degree() {
            for k in 0..=(r.socle_degree() - i).min(3) {
                assert_eq!(r.multiplication_matrix(&l, i, k).unwrap(), r.multiplication_matrix_direct(&l, i, k).unwrap());
            }
        }
        assert_eq!(r.multiplication_matrix(&l, 2, 0).unwrap(), DenseMatrix::identity(r.dim(2)));
        assert!(matches!(r.multiplication_matrix(&l, 5, 5), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn mirror_element_has_vanishing_top_power() {
        let r = ring(Family::A(2));
        let top = r.multiplication_matrix(&ints(&[1, 1, -2]), 0, 3).unwrap();
        assert!(top.is_zero());
        let good = r.multiplication_matrix(&ints(&[1, 0, -1]), 0, 3).unwrap();
        assert_eq!((good.rows(), good.cols()), (1, 1));
        assert!(!good.is_zero());
    }

    #[test]
    fn pairing_is_perfect_and_top_is_sign_representation() {
        for f in [Family::A(2), Family::I2(5), Family::B(3)] {
            let r = ring(f);
            for d in 0..=r.socle_degree() {
                assert!(!r.poincare_pairing(d).unwrap().det().is_zero(), "{f} degree {d}");
            }
            assert!(r.is_antiinvariant_top().unwrap());
        }
    }

    #[test]
    fn oversized_rings_are_refused() {
        let rs = RootSystem::build(&CoxeterType::irreducible(Family::A(4)).unwrap()).unwrap();
        assert!(matches!(CoinvariantRing::build(&rs), Err(Error::BudgetExceeded(_))));
    }
}
