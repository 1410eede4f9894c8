//! Strong Lefschetz tests on coinvariant rings.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::budget::Budget;
use crate::coinvariant::CoinvariantRing;
use crate::coxeter::{Family, Matrix, RootSystem, Vector};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::numfield::NfElem;
use crate::poly::{Monomial, Polynomial};
use crate::Rational;

type Poly = Polynomial<NfElem>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub level: usize,
    pub size: usize,
    /// Sign of the determinant, 0 when it vanishes.
    pub det_sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SleVerdict {
    pub result: bool,
    pub levels: Vec<LevelReport>,
}

/// Matrix of `×ℓ^{m-2i} : R_i → R_{m-i}`.
pub fn level_matrix(ring: &CoinvariantRing, l: &[NfElem], i: usize) -> Result<Matrix> {
    let m = ring.socle_degree();
    if 2 * i > m {
        return Err(Error::LevelOutOfRange { level: i, min: 0, max: m / 2 });
    }
    ring.multiplication_matrix(l, i, m - 2 * i)
}

pub fn is_sle(ring: &CoinvariantRing, l: &[NfElem]) -> Result<SleVerdict> {
    let m = ring.socle_degree();
    let mut levels = Vec::with_capacity(m / 2 + 1);
    for i in 0..=m / 2 {
        let det = level_matrix(ring, l, i)?.det();
        levels.push(LevelReport { level: i, size: ring.dim(i), det_sign: det.signum() });
    }
    Ok(SleVerdict { result: levels.iter().all(|r| r.det_sign != 0), levels })
}

/// True iff `NF(ℓ^m) ≠ 0`, computed by reducing the power directly.
pub fn top_power_nonzero(ring: &CoinvariantRing, l: &[NfElem]) -> Result<bool> {
    if l.len() != ring.nvars() {
        return Err(Error::DimensionMismatch { expected: ring.nvars(), got: l.len() });
    }
    let p = Poly::linear_form(l).pow(ring.socle_degree() as u32);
    Ok(!ring.normal_form(&p).is_zero())
}

/// Hilbert functions `1, h, h, ..., h, 1`, where bijectivity of each `×ℓ : R_k → R_{k+1}`
/// for `1 ≤ k ≤ m-2` plus `ℓ^m ≠ 0` is equivalent to SLE.
pub fn has_narrow_shape(ring: &CoinvariantRing) -> bool {
    let h = ring.hilbert();
    let m = h.len() - 1;
    h[0] == 1 && h[m] == 1 && (m < 2 || h[1..m].iter().all(|&x| x == h[1]))
}

pub fn narrow_sle(ring: &CoinvariantRing, l: &[NfElem]) -> Result<bool> {
    if !has_narrow_shape(ring) {
        return Err(Error::ShapeUnsupported(ring.hilbert()));
    }
    if !top_power_nonzero(ring, l)? {
        return Ok(false);
    }
    let m = ring.socle_degree();
    for k in 1..m.saturating_sub(1) {
        if ring.linear_map(l, k)?.det().is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Route used to produce a determinant with polynomial entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetMethod {
    /// Fraction-free elimination directly over the parameter ring.
    Elimination,
    /// Numeric determinants on a grid followed by exact interpolation.
    Interpolation,
}

/// Total degree in the parameters of the level-`i` determinant.
pub fn level_degree(ring: &CoinvariantRing, i: usize) -> usize {
    ring.dim(i) * (ring.socle_degree() - 2 * i)
}

/// `Σ a_j w_j` for numeric parameters.
pub fn combine(weights: &[Vector], a: &[NfElem]) -> Vector {
    let n = weights.first().map_or(0, Vec::len);
    (0..n).map(|v| weights.iter().zip(a).fold(NfElem::zero(), |acc, (w, aj)| acc + aj * &w[v])).collect()
}

fn check_weights(ring: &CoinvariantRing, weights: &[Vector]) -> Result<()> {
    if weights.is_empty() || weights.len() > crate::poly::MAX_VARS {
        return Err(Error::DimensionMismatch { expected: ring.nvars(), got: weights.len() });
    }
    for w in weights {
        if w.len() != ring.nvars() {
            return Err(Error::DimensionMismatch { expected: ring.nvars(), got: w.len() });
        }
    }
    Ok(())
}

/// Determinant of `×ℓ^{m-2i} : R_i → R_{m-i}` for `ℓ = Σ a_j w_j` as a polynomial in `a_1..a_r`.
pub fn symbolic_determinant(ring: &CoinvariantRing, weights: &[Vector], i: usize, method: DetMethod, budget: &Budget) -> Result<Poly> {
    check_weights(ring, weights)?;
    let m = ring.socle_degree();
    if 2 * i > m {
        return Err(Error::LevelOutOfRange { level: i, min: 0, max: m / 2 });
    }
    match method {
        DetMethod::Elimination => by_elimination(ring, weights, i, budget),
        DetMethod::Interpolation => by_interpolation(ring, weights, i, budget),
    }
}

pub fn symbolic_determinants(
    ring: &CoinvariantRing,
    weights: &[Vector],
    levels: &[usize],
    method: DetMethod,
    budget: &Budget,
) -> Vec<(usize, Result<Poly>)> {
    levels.iter().map(|&i| (i, symbolic_determinant(ring, weights, i, method, budget))).collect()
}

fn by_elimination(ring: &CoinvariantRing, weights: &[Vector], i: usize, budget: &Budget) -> Result<Poly> {
    let l: Vec<Poly> = (0..ring.nvars())
        .map(|v| Poly::from_terms(weights.iter().enumerate().map(|(j, w)| (Monomial::var(j), w[v].clone()))))
        .collect();
    let m = ring.socle_degree();
    let mat = ring.power_map_in(&l, i, m - 2 * i, &|x: &NfElem| Poly::constant(x.clone()), budget)?;
    mat.det_checked(&mut || budget.check("symbolic determinant"))
}

/// Inverse Vandermonde matrix on the nodes `0..=d`.
fn inverse_vandermonde(d: usize) -> Vec<Vec<NfElem>> {
    let v = DenseMatrix::from_fn(d + 1, d + 1, |x, j| Rational::from_integer(BigInt::from(x).pow(j as u32)));
    let inv = v.inverse().expect("distinct nodes");
    inv.to_rows().into_iter().map(|r| r.into_iter().map(NfElem::from_rational).collect()).collect()
}

fn by_interpolation(ring: &CoinvariantRing, weights: &[Vector], i: usize, budget: &Budget) -> Result<Poly> {
    let m = ring.socle_degree();
    let d = level_degree(ring, i);
    let k = weights.len() - 1;
    let side = d + 1;
    let npts = side.checked_pow(k as u32).ok_or_else(|| Error::BudgetExceeded("interpolation grid".into()))?;
    let point = |idx: usize| -> Vec<NfElem> {
        let mut a = Vec::with_capacity(k + 1);
        let mut r = idx;
        for _ in 0..k {
            a.push(NfElem::from_int((r % side) as i64));
            r /= side;
        }
        a.push(NfElem::one());
        a
    };
    let eval = |a: &[NfElem]| -> Result<NfElem> {
        budget.check("interpolation samples")?;
        Ok(ring.multiplication_matrix(&combine(weights, a), i, m - 2 * i)?.det())
    };
    let mut values: Vec<NfElem> = (0..npts).into_par_iter().map(|idx| eval(&point(idx))).collect::<Result<_>>()?;

    let vinv = inverse_vandermonde(d);
    let mut stride = 1;
    for _ in 0..k {
        budget.check("interpolation")?;
        let mut next = values.clone();
        for base in 0..npts {
            if (base / stride) % side != 0 {
                continue;
            }
            for (j, row) in vinv.iter().enumerate() {
                let mut acc = NfElem::zero();
                for (x, c) in row.iter().enumerate() {
                    let y = &values[base + x * stride];
                    if !y.is_zero() && !c.is_zero() {
                        acc += &(c * y);
                    }
                }
                next[base + j * stride] = acc;
            }
        }
        values = next;
        stride *= side;
    }

    let mut terms = Vec::new();
    for (idx, c) in values.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut exps = Vec::with_capacity(k + 1);
        let mut r = idx;
        for _ in 0..k {
            exps.push((r % side) as u16);
            r /= side;
        }
        let used: usize = exps.iter().map(|&e| e as usize).sum();
        if used > d {
            return Err(Error::Inconsistent(format!("interpolated determinant of level {i} is not homogeneous of degree {d}")));
        }
        exps.push((d - used) as u16);
        terms.push((Monomial::from_exps(&exps), c));
    }
    let f = Poly::from_terms(terms);

    // Off-grid spot check.
    let probe: Vec<NfElem> = (0..=k).map(|j| NfElem::from_int((side + 2 * j + 1) as i64)).collect();
    if f.eval(&probe) != eval(&probe)? {
        return Err(Error::Inconsistent(format!("interpolated determinant of level {i} fails the probe point")));
    }
    Ok(f)
}

/// The weights `x1`, `τ x1 + x2`, `τ² x1 + x3` of `H3` (positive multiples of the fundamental weights).
pub fn h3_weights(rs: &RootSystem) -> Result<Vec<Vector>> {
    if rs.coxeter_type().components() != [Family::H3] {
        return Err(Error::UnsupportedType(rs.coxeter_type().to_string()));
    }
    let tau = NfElem::generator(rs.field().expect("golden field"));
    let (z, o) = (NfElem::zero(), NfElem::one());
    Ok(vec![vec![o.clone(), z.clone(), z.clone()], vec![tau.clone(), o.clone(), z.clone()], vec![&tau * &tau, z, o]])
}

/// Sign of the level-`i` determinant of `H3` at positive parameters: negative exactly for `i = 1, 3, 5`.
pub fn h3_level_sign(i: usize) -> i8 {
    if i % 2 == 1 && i < 7 {
        -1
    } else {
        1
    }
}

/// Sign pattern of a coefficient `α τ + β` (or a rational `β`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignClass {
    PosPos,
    ZeroPos,
    PosZero,
    NegNeg,
    ZeroNeg,
    NegZero,
    Mixed,
}

impl SignClass {
    pub const ALL: [SignClass; 7] =
        [SignClass::PosPos, SignClass::ZeroPos, SignClass::PosZero, SignClass::NegNeg, SignClass::ZeroNeg, SignClass::NegZero, SignClass::Mixed];

    pub fn label(self) -> &'static str {
        match self {
            SignClass::PosPos => "a>0,b>0",
            SignClass::ZeroPos => "a=0,b>0",
            SignClass::PosZero => "a>0,b=0",
            SignClass::NegNeg => "a<0,b<0",
            SignClass::ZeroNeg => "a=0,b<0",
            SignClass::NegZero => "a<0,b=0",
            SignClass::Mixed => "mixed",
        }
    }

    fn of(alpha: &Rational, beta: &Rational) -> SignClass {
        let s = |x: &Rational| if x.is_zero() { 0 } else if x.is_positive() { 1 } else { -1 };
        match (s(alpha), s(beta)) {
            (1, 1) => SignClass::PosPos,
            (0, 1) => SignClass::ZeroPos,
            (1, 0) => SignClass::PosZero,
            (-1, -1) => SignClass::NegNeg,
            (0, -1) => SignClass::ZeroNeg,
            (-1, 0) => SignClass::NegZero,
            _ => SignClass::Mixed,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignTable {
    /// Indexed like [`SignClass::ALL`].
    pub counts: [usize; 7],
    pub total: usize,
}

impl SignTable {
    pub fn count(&self, c: SignClass) -> usize {
        self.counts[SignClass::ALL.iter().position(|&x| x == c).unwrap()]
    }

    /// `Some(±1)` when every coefficient has that sign componentwise.
    pub fn uniform_sign(&self) -> Option<i8> {
        let pos = self.count(SignClass::PosPos) + self.count(SignClass::ZeroPos) + self.count(SignClass::PosZero);
        let neg = self.count(SignClass::NegNeg) + self.count(SignClass::ZeroNeg) + self.count(SignClass::NegZero);
        if self.total > 0 && pos == self.total {
            Some(1)
        } else if self.total > 0 && neg == self.total {
            Some(-1)
        } else {
            None
        }
    }
}

/// Classifies each coefficient `α τ + β` of `f`; coefficients must lie in a field of degree at most 2.
pub fn sign_table(f: &Poly) -> Result<SignTable> {
    let mut t = SignTable::default();
    for (_, c) in f.terms() {
        if c.coeffs().len() > 2 {
            return Err(Error::FieldMismatch);
        }
        let class = SignClass::of(&c.coeff(1), &c.coeff(0));
        t.counts[SignClass::ALL.iter().position(|&x| x == class).unwrap()] += 1;
        t.total += 1;
    }
    Ok(t)
}

/// Coefficient of the lexicographically largest monomial (`a_1 > a_2 > ...`).
pub fn lex_leading_coeff(f: &Poly) -> Option<&NfElem> {
    f.terms().iter().max_by(|x, y| x.0.exps().cmp(y.0.exps())).map(|(_, c)| c)
}

/// Negates `f` when its lex-leading coefficient does not have sign `expected`; reports whether it did.
pub fn normalize_sign(f: Poly, expected: i8) -> (Poly, bool) {
    match lex_leading_coeff(&f) {
        Some(c) if c.signum() != expected => (-f, true),
        _ => (f, false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{dot, CoxeterType};

    fn ring(f: Family) -> CoinvariantRing {
        let rs = RootSystem::build(&CoxeterType::irreducible(f).unwrap()).unwrap();
        CoinvariantRing::build(&rs).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<NfElem> {
        v.iter().map(|&x| NfElem::from_int(x)).collect()
    }

    #[test]
    fn a2_examples() {
        let r = ring(Family::A(2));
        let good = is_sle(&r, &ints(&[1, 0, -1])).unwrap();
        assert!(good.result);
        assert_eq!(good.levels.len(), 2);
        let bad = is_sle(&r, &ints(&[1, 1, -2])).unwrap();
        assert!(!bad.result);
        assert_eq!(bad.levels[0].det_sign, 0);
        assert!(!narrow_sle(&r, &ints(&[1, 1, -2])).unwrap());
        assert!(narrow_sle(&r, &ints(&[1, 0, -1])).unwrap());
        assert!(!narrow_sle(&r, &ints(&[0, 0, 0])).unwrap());
    }

    #[test]
    fn narrow_shape_refused_for_a3() {
        let r = ring(Family::A(3));
        assert!(matches!(narrow_sle(&r, &ints(&[3, 1, 0, -2])), Err(Error::ShapeUnsupported(_))));
    }

    #[test]
    fn i2_chamber_element_passes_both_tests() {
        for m in [5, 6] {
            let r = ring(Family::I2(m));
            let w = r.root_system().fundamental_weights();
            let l = combine(w, &ints(&[1, 1]));
            assert!(is_sle(&r, &l).unwrap().result);
            assert!(narrow_sle(&r, &l).unwrap());
            assert!(top_power_nonzero(&r, &l).unwrap());
            let fixed = combine(w, &ints(&[1, 0]));
            assert!(!top_power_nonzero(&r, &fixed).unwrap());
        }
    }

    #[test]
    fn a2_level_zero_is_product_of_root_forms() {
        let r = ring(Family::A(2));
        let rs = r.root_system();
        let w = rs.fundamental_weights().to_vec();
        let f0 = symbolic_determinant(&r, &w, 0, DetMethod::Elimination, &Budget::unlimited()).unwrap();
        let mut prod = Poly::one();
        for beta in rs.positive_roots() {
            prod = prod * Poly::from_terms(w.iter().enumerate().map(|(j, wj)| (Monomial::var(j), dot(wj, beta))));
        }
        let (lm, lc) = prod.leading_term().unwrap().clone();
        let ratio = f0.coeff(&lm) / lc;
        assert!(!ratio.is_zero());
        assert_eq!(f0, prod.scale(&ratio));
    }

    #[test]
    fn routes_agree_and_specialize() {
        let r = ring(Family::B(2));
        let w = r.root_system().fundamental_weights().to_vec();
        for i in 0..=2 {
            let e = symbolic_determinant(&r, &w, i, DetMethod::Elimination, &Budget::unlimited()).unwrap();
            let p = symbolic_determinant(&r, &w, i, DetMethod::Interpolation, &Budget::unlimited()).unwrap();
            assert_eq!(e, p, "level {i}");
            let a = ints(&[2, -3]);
            let direct = level_matrix(&r, &combine(&w, &a), i).unwrap().det();
            assert_eq!(e.eval(&a), direct);
        }
    }

    #[test]
    fn sign_classes() {
        let t = sign_table(&Poly::constant(NfElem::from_int(-1))).unwrap();
        assert_eq!(t.count(SignClass::ZeroNeg), 1);
        assert_eq!(t.total, 1);
        assert_eq!(t.uniform_sign(), Some(-1));
        let (g, flipped) = normalize_sign(Poly::constant(NfElem::from_int(-1)), 1);
        assert!(flipped);
        assert_eq!(sign_table(&g).unwrap().uniform_sign(), Some(1));
    }

    #[test]
    fn h3_weights_are_positive_multiples_of_fundamental_weights() {
        let rs = RootSystem::build(&CoxeterType::irreducible(Family::H3).unwrap()).unwrap();
        let w = h3_weights(&rs).unwrap();
        for (i, wi) in w.iter().enumerate() {
            for (j, alpha) in rs.simple_roots().iter().enumerate() {
                let d = dot(wi, alpha);
                assert_eq!(i == j, !d.is_zero());
                assert!(i != j || d.is_positive());
            }
        }
        let a2 = RootSystem::build(&CoxeterType::irreducible(Family::A(2)).unwrap()).unwrap();
        assert!(h3_weights(&a2).is_err());
    }
}
