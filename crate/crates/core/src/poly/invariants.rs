use num_traits::{One, Zero};

use super::action::act;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::coxeter::{Family, RootSystem};
use crate::error::{Error, Result};
use crate::numfield::NfElem;

type Poly = Polynomial<NfElem>;

/// Homogeneous generators of the invariant ring, one per ambient coordinate.
#[derive(Clone, Debug)]
pub struct InvariantSystem {
    polys: Vec<Poly>,
    nvars: usize,
}

impl InvariantSystem {
    pub fn new(polys: Vec<Poly>, nvars: usize) -> Self {
        InvariantSystem { polys, nvars }
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.polys.iter().map(|p| p.degree().unwrap_or(0)).collect()
    }
}

fn var(i: usize) -> Poly {
    Poly::var(i)
}

fn int(n: i64) -> NfElem {
    NfElem::from_int(n)
}

/// Elementary symmetric polynomials `e_1..e_k` of the given polynomials.
fn elementary(xs: &[Poly], k: usize) -> Vec<Poly> {
    // e[j] after processing a prefix of xs.
    let mut e = vec![Poly::zero(); k + 1];
    e[0] = Poly::one();
    for x in xs {
        for j in (1..=k).rev() {
            let t = &e[j - 1] * x;
            e[j] += &t;
        }
    }
    e.into_iter().skip(1).collect()
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// The degree-`m` dihedral invariant: `Re (x+iy)^m` for even `m`, `Im (x+iy)^m` for odd `m`.
///
/// With roots `β(kπ/m)`, a reflection acts on `z = x + iy` as `z ↦ -e^{2ikπ/m} z̄`, so `z^m`
/// picks up `(-1)^m` and conjugation; the real part is invariant only for even `m`.
pub fn dihedral_invariant(m: u32, x: usize, y: usize) -> Poly {
    let parity = if m.is_multiple_of(2) { 0 } else { 1 };
    Poly::from_terms((0..=m).filter(|j| j % 2 == parity).map(|j| {
        let sign = if (j / 2) % 2 == 0 { 1 } else { -1 };
        let mut exps = [0u16; super::MAX_VARS];
        exps[x] = (m - j) as u16;
        exps[y] = j as u16;
        (Monomial::from_exps(&exps), int(sign * binomial(m, j)))
    }))
}

fn component_invariants(rs: &RootSystem, fam: Family, o: usize) -> Vec<Poly> {
    match fam {
        Family::A(n) => (1..=n as u32 + 1).map(|k| (0..=n).fold(Poly::zero(), |acc, i| &acc + &var(o + i).pow(k))).collect(),
        Family::B(n) => {
            let squares: Vec<Poly> = (0..n).map(|i| var(o + i).pow(2)).collect();
            elementary(&squares, n)
        }
        Family::D(n) => {
            let squares: Vec<Poly> = (0..n).map(|i| var(o + i).pow(2)).collect();
            let mut v = elementary(&squares, n - 1);
            v.push((0..n).fold(Poly::one(), |acc, i| &acc * &var(o + i)));
            v
        }
        Family::I2(m) => vec![&var(o).pow(2) + &var(o + 1).pow(2), dihedral_invariant(m, o, o + 1)],
        Family::H3 => {
            let t = NfElem::generator(rs.field().expect("H3 lives over Q(τ)"));
            let tp = |i: usize| var(o + i).scale(&t);
            [1u32, 3, 5]
                .iter()
                .map(|&k| {
                    let mut acc = Poly::zero();
                    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
                        acc += &(&tp(i) + &var(o + j)).pow(2 * k);
                        acc += &(&tp(i) - &var(o + j)).pow(2 * k);
                    }
                    acc
                })
                .collect()
        }
    }
}

/// Fundamental invariants in the standard realization of `rs`.
///
/// Type `A_n` acts on `n + 1` coordinates, so the system there also contains the
/// linear invariant `p_1`; without it the quotient would not be finite-dimensional.
pub fn fundamental_invariants(rs: &RootSystem) -> Result<InvariantSystem> {
    let mut polys = Vec::new();
    for c in rs.components() {
        polys.extend(component_invariants(rs, c.family, c.coord_offset));
    }
    for p in &polys {
        for s in rs.simple_reflections() {
            if act(s, p)? != *p {
                return Err(Error::Inconsistent(format!("generator of degree {:?} is not invariant", p.degree())));
            }
        }
    }
    Ok(InvariantSystem::new(polys, rs.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::coxeter::CoxeterType;
    use crate::poly::reynolds;

    fn rs(f: Family) -> RootSystem {
        RootSystem::build(&CoxeterType::irreducible(f).unwrap()).unwrap()
    }

    #[test]
    fn degrees_per_type() {
        let cases: [(Family, &[u32]); 6] = [
            (Family::A(2), &[1, 2, 3]),
            (Family::B(3), &[2, 4, 6]),
            (Family::D(4), &[2, 4, 6, 4]),
            (Family::I2(5), &[2, 5]),
            (Family::I2(6), &[2, 6]),
            (Family::H3, &[2, 6, 10]),
        ];
        for (f, d) in cases {
            let inv = fundamental_invariants(&rs(f)).unwrap();
            assert_eq!(inv.degrees(), d, "{f}");
            let nontrivial: Vec<u32> = inv.degrees().into_iter().filter(|&d| d > 1).collect();
            assert_eq!(nontrivial.iter().map(|&d| d as u64).product::<u64>(), f.order());
            assert_eq!(nontrivial.iter().map(|&d| d as usize - 1).sum::<usize>(), f.reflection_count());
        }
    }

    #[test]
    fn dihedral_invariant_matches_reynolds_direction() {
        // The averaged y^5 over I2(5) is a nonzero multiple of the degree-5 invariant.
        let r = rs(Family::I2(5));
        let avg = reynolds(&r, &var(1).pow(5), None, &Budget::unlimited()).unwrap();
        let inv = dihedral_invariant(5, 0, 1);
        let (m, c) = inv.leading_term().unwrap().clone();
        let ratio = &avg.coeff(&m) / &c;
        assert!(!ratio.is_zero());
        assert_eq!(avg, inv.scale(&ratio));
    }

    #[test]
    fn h3_invariants_fixed_by_every_reflection() {
        let r = rs(Family::H3);
        let inv = fundamental_invariants(&r).unwrap();
        for s in r.reflections() {
            for p in inv.polys() {
                assert_eq!(act(s, p).unwrap(), *p);
            }
        }
    }
}
