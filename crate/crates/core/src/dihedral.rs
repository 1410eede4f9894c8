//! Closed-form machinery for the dihedral groups `I2(m)`: the Bruhat diagram,
//! Pieri matrices on the Schubert-type basis, and the determinant of `×ℓ`
//! between consecutive middle degrees.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::budget::Budget;
use crate::coxeter::{coxeter_length, dihedral_root, reflection_matrix, CoxeterType, Family, Matrix, RootSystem};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::numfield::{real_cyclotomic_field, two_cos, NfElem, NumberField};

fn check_m(m: u32) -> Result<()> {
    Family::I2(m).validate().map(|_| ())
}

fn check_level(m: u32, k: usize) -> Result<()> {
    check_m(m)?;
    if k < 1 || k + 2 > m as usize {
        return Err(Error::LevelOutOfRange { level: k, min: 1, max: m as usize - 2 });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chain {
    A,
    B,
}

/// `a_k` or `b_k`; `a_0 = b_0 = e` and `a_m = b_m = w0` are stored under chain `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub chain: Chain,
    pub k: usize,
}

/// `from → to` with `s_β from = to`, where `β = β(root_index · π/m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruhatEdge {
    pub from: Node,
    pub to: Node,
    pub root_index: u32,
}

#[derive(Clone, Debug)]
pub struct BruhatDiagram {
    m: u32,
    rs: RootSystem,
    elements: HashMap<Node, Matrix>,
    edges: Vec<BruhatEdge>,
}

fn node(chain: Chain, k: usize, m: u32) -> Node {
    if k == 0 || k == m as usize {
        Node { chain: Chain::A, k }
    } else {
        Node { chain, k }
    }
}

pub fn bruhat_diagram(m: u32) -> Result<BruhatDiagram> {
    check_m(m)?;
    let rs = RootSystem::build(&CoxeterType::irreducible(Family::I2(m))?)?;
    let s = rs.simple_reflections();
    let mut elements = HashMap::new();
    for (chain, first) in [(Chain::A, 0), (Chain::B, 1)] {
        let mut w = Matrix::identity(2);
        elements.insert(node(chain, 0, m), w.clone());
        for k in 1..=m as usize {
            // a_k = s1 s2 s1 ... (k factors), b_k likewise starting with s2.
            w = w.mul(&s[(first + k - 1) % 2])?;
            elements.insert(node(chain, k, m), w.clone());
        }
    }
    let last = m - 1;
    let mut edges = Vec::new();
    for k in 0..m as usize {
        let a = node(Chain::A, k, m);
        let b = node(Chain::B, k, m);
        edges.push(BruhatEdge { from: a, to: node(Chain::A, k + 1, m), root_index: k as u32 });
        if k == 0 {
            edges.push(BruhatEdge { from: a, to: node(Chain::B, 1, m), root_index: last });
            continue;
        }
        edges.push(BruhatEdge { from: b, to: node(Chain::B, k + 1, m), root_index: last - k as u32 });
        if k + 1 < m as usize {
            edges.push(BruhatEdge { from: a, to: node(Chain::B, k + 1, m), root_index: last });
            edges.push(BruhatEdge { from: b, to: node(Chain::A, k + 1, m), root_index: 0 });
        }
    }
    Ok(BruhatDiagram { m, rs, elements, edges })
}

impl BruhatDiagram {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn element(&self, n: Node) -> &Matrix {
        &self.elements[&node(n.chain, n.k, self.m)]
    }

    pub fn edges(&self) -> &[BruhatEdge] {
        &self.edges
    }

    pub fn out_edges(&self, n: Node) -> impl Iterator<Item = &BruhatEdge> {
        let n = node(n.chain, n.k, self.m);
        self.edges.iter().filter(move |e| e.from == n)
    }

    /// The root `β(jπ/m)` labelling an edge.
    pub fn label(&self, e: &BruhatEdge) -> Vec<NfElem> {
        let field = self.rs.field().expect("dihedral field");
        let n = num_integer::lcm(2 * self.m as u64, 4);
        dihedral_root(field, n, self.m, e.root_index as i64)
    }

    /// Checks lengths of all nodes and `s_β w = w'` with `l(w') = l(w) + 1` on every edge.
    pub fn verify(&self) -> bool {
        for (n, w) in &self.elements {
            if coxeter_length(&self.rs, w) != n.k {
                return false;
            }
        }
        self.edges.iter().all(|e| {
            let s = reflection_matrix(&self.label(e));
            let from = self.element(e.from);
            s.mul(from).is_ok_and(|w| &w == self.element(e.to)) && e.to.k == e.from.k + 1
        })
    }
}

/// `(field, c)` with `c = 2cos(π/m)` generating `Q(c)`.
pub fn pieri_field(m: u32) -> (Arc<NumberField>, NfElem) {
    let field = real_cyclotomic_field(2 * m as u64);
    let c = two_cos(&field, 2 * m as u64, 1);
    (field, c)
}

/// `p_j = sin(jπ/m) / sin(π/m)` for `j = 0..=m` from `p_{j+1} = c p_j - p_{j-1}`.
pub fn p_values(c: &NfElem, m: u32) -> Vec<NfElem> {
    let mut p = vec![NfElem::zero(), NfElem::one()];
    while p.len() <= m as usize {
        let n = p.len();
        let next = c * &p[n - 1] - &p[n - 2];
        p.push(next);
    }
    p.truncate(m as usize + 1);
    p
}

#[derive(Clone, Debug)]
pub struct PieriMatrices {
    pub k: usize,
    pub p_k: NfElem,
    pub p_k1: NfElem,
    /// `×X_{s1} : R_k → R_{k+1}` in the bases `{X_{a_k^{-1}}, X_{b_k^{-1}}}`.
    pub xs1: Matrix,
    pub xs2: Matrix,
}

impl PieriMatrices {
    /// Matrix of `×(a X_{s1} + b X_{s2})`.
    pub fn combined(&self, a: &NfElem, b: &NfElem) -> Matrix {
        self.xs1.scale(a).add(&self.xs2.scale(b)).expect("2x2")
    }
}

pub fn pieri_matrices(m: u32, k: usize) -> Result<PieriMatrices> {
    pieri_matrices_in(&pieri_field(m).1, m, k)
}

/// Pieri matrices with `c = 2cos(π/m)` taken from any field containing it.
pub fn pieri_matrices_in(c: &NfElem, m: u32, k: usize) -> Result<PieriMatrices> {
    check_level(m, k)?;
    let p = p_values(c, m);
    let (pk, pk1) = (p[k].clone(), p[k + 1].clone());
    let (z, o) = (NfElem::zero(), NfElem::one());
    let xs1 = DenseMatrix::from_rows(vec![vec![pk.clone(), o.clone()], vec![z.clone(), pk1.clone()]]);
    let xs2 = DenseMatrix::from_rows(vec![vec![pk1.clone(), z], vec![o, pk.clone()]]);
    Ok(PieriMatrices { k, p_k: pk, p_k1: pk1, xs1, xs2 })
}

/// `(a² + b²) p_k p_{k+1} + ab (p_k² + p_{k+1}² - 1)`.
pub fn mult_determinant(m: u32, k: usize, a: &NfElem, b: &NfElem) -> Result<NfElem> {
    mult_determinant_in(&pieri_field(m).1, m, k, a, b)
}

pub fn mult_determinant_in(c: &NfElem, m: u32, k: usize, a: &NfElem, b: &NfElem) -> Result<NfElem> {
    check_level(m, k)?;
    let p = p_values(c, m);
    let (pk, pk1) = (&p[k], &p[k + 1]);
    let prod = pk * pk1;
    let mid = pk * pk + pk1 * pk1 - NfElem::one();
    Ok((a * a + b * b) * prod + a * b * mid)
}

/// `(p_k² + p_{k+1}² - 1)² - 4 (p_k p_{k+1})²`.
pub fn discriminant(m: u32, k: usize) -> Result<NfElem> {
    check_level(m, k)?;
    let p = p_values(&pieri_field(m).1, m);
    let (pk, pk1) = (&p[k], &p[k + 1]);
    let mid = pk * pk + pk1 * pk1 - NfElem::one();
    let prod = pk * pk1;
    Ok(&mid * &mid - NfElem::from_int(4) * &prod * &prod)
}

/// The factors `(p_k ± p_{k+1} ± 1)` of the discriminant, in the order
/// `(+,+)`, `(+,-)`, `(-,+)`, `(-,-)`.
pub fn discriminant_factors(m: u32, k: usize) -> Result<[NfElem; 4]> {
    check_level(m, k)?;
    let p = p_values(&pieri_field(m).1, m);
    let (pk, pk1) = (&p[k], &p[k + 1]);
    let o = NfElem::one();
    Ok([pk + pk1 + &o, pk + pk1 - &o, pk - pk1 + &o, pk - pk1 - &o])
}

/// Expands `Σ_I (-1)^{#I} (Σ_{i∈I} u_i)^m` and checks that it equals `(-1)^m m! u_1 ⋯ u_m`.
pub fn power_identity_check(m: u32, budget: &Budget) -> Result<bool> {
    if m == 0 || m > 12 {
        return Err(Error::BudgetExceeded(format!("identity check limited to 1 ≤ m ≤ 12, got {m}")));
    }
    let m = m as usize;
    let fact: Vec<i128> = (0..=m).scan(1i128, |f, i| {
        if i > 0 {
            *f *= i as i128;
        }
        Some(*f)
    }).collect();
    // Monomials packed as 4-bit exponents.
    let mut sum: HashMap<u64, i128> = HashMap::new();
    for mask in 1u32..(1 << m) {
        budget.check("power identity")?;
        let vars: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let sign = if vars.len().is_multiple_of(2) { 1 } else { -1 };
        let mut exps = vec![0usize; vars.len()];
        expand(&vars, &mut exps, 0, m, &fact, sign, &mut sum);
    }
    sum.retain(|_, c| *c != 0);
    let all_ones: u64 = (0..m).map(|i| 1u64 << (4 * i)).sum();
    let expected = if m.is_multiple_of(2) { fact[m] } else { -fact[m] };
    Ok(sum.len() == 1 && sum.get(&all_ones) == Some(&expected))
}

fn expand(vars: &[usize], exps: &mut [usize], pos: usize, left: usize, fact: &[i128], sign: i128, out: &mut HashMap<u64, i128>) {
    if pos + 1 == vars.len() {
        exps[pos] = left;
        let coeff = exps.iter().fold(fact[fact.len() - 1], |c, &e| c / fact[e]);
        let key = vars.iter().zip(exps.iter()).map(|(&v, &e)| (e as u64) << (4 * v)).sum();
        *out.entry(key).or_insert(0) += sign * coeff;
        return;
    }
    for e in 0..=left {
        exps[pos] = e;
        expand(vars, exps, pos + 1, left - e, fact, sign, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::GroupElementSet;

    #[test]
    fn diagram_matches_covering_relations() {
        for m in [3, 4, 5, 8] {
            let d = bruhat_diagram(m).unwrap();
            assert!(d.verify(), "m = {m}");
            // Oracle: all left multiplications by positive-root reflections raising length by one.
            let rs = d.root_system();
            let group = GroupElementSet::enumerate(rs, &Budget::unlimited()).unwrap();
            let mut count = 0;
            for w in group.elements() {
                for beta in rs.positive_roots() {
                    let v = reflection_matrix(beta).mul(&w.matrix).unwrap();
                    if coxeter_length(rs, &v) == w.length + 1 {
                        count += 1;
                    }
                }
            }
            assert_eq!(count, d.edges().len(), "m = {m}");
            assert_eq!(d.out_edges(Node { chain: Chain::A, k: 0 }).count(), 2);
            assert_eq!(coxeter_length(rs, d.element(Node { chain: Chain::B, k: m as usize })), m as usize);
        }
    }

    #[test]
    fn first_chain_edge_for_m3() {
        let d = bruhat_diagram(3).unwrap();
        let e = d.out_edges(Node { chain: Chain::A, k: 1 }).find(|e| e.to.chain == Chain::A).unwrap();
        assert_eq!((e.to.k, e.root_index), (2, 1));
    }

    #[test]
    fn p_values_and_matrices() {
        let (_, c) = pieri_field(4);
        let p = p_values(&c, 4);
        assert_eq!(&p[2] * &p[2], NfElem::from_int(2));
        assert!(p[2].is_positive());
        for m in [5, 7, 12] {
            let p = p_values(&pieri_field(m).1, m);
            assert!(p[1..m as usize].iter().all(NfElem::is_positive));
            assert!(p[m as usize].is_zero());
            let pm = pieri_matrices(m, 2).unwrap();
            assert_eq!(pm.xs1.det(), &pm.p_k * &pm.p_k1);
            assert_eq!(pm.xs2.det(), &pm.p_k * &pm.p_k1);
        }
        assert!(matches!(pieri_matrices(5, 4), Err(Error::LevelOutOfRange { .. })));
        assert!(matches!(pieri_matrices(5, 0), Err(Error::LevelOutOfRange { .. })));
    }

    #[test]
    fn closed_form_matches_assembled_matrix() {
        for m in [5, 6, 9] {
            for k in 1..=m as usize - 2 {
                let pm = pieri_matrices(m, k).unwrap();
                for (a, b) in [(1, 0), (1, 1), (0, 0), (-3, 2), (5, -7)] {
                    let (a, b) = (NfElem::from_int(a), NfElem::from_int(b));
                    assert_eq!(pm.combined(&a, &b).det(), mult_determinant(m, k, &a, &b).unwrap());
                }
            }
        }
    }

    #[test]
    fn discriminant_factorization_and_signs() {
        for (m, k) in [(5, 1), (7, 2), (12, 5)] {
            let d = discriminant(m, k).unwrap();
            assert!(d.is_negative());
            let f = discriminant_factors(m, k).unwrap();
            assert_eq!(&f[0] * &f[1] * &f[2] * &f[3], d);
            assert!(f[0].is_positive() && f[1].is_positive() && f[2].is_positive() && f[3].is_negative());
        }
    }

    #[test]
    fn power_identity_small() {
        for m in 1..=6 {
            assert!(power_identity_check(m, &Budget::unlimited()).unwrap());
        }
        assert!(power_identity_check(13, &Budget::unlimited()).is_err());
    }
}
