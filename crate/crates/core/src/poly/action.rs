use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::invariants::InvariantSystem;
use super::polynomial::Polynomial;
use crate::budget::Budget;
use crate::coxeter::{GroupElementSet, Matrix, RootSystem};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;
use crate::numfield::NfElem;
use crate::scalar::Field;

type Poly = Polynomial<NfElem>;

/// `(g·p)(x) = p(g⁻¹ x)`, a left action by ring automorphisms.
pub fn act(g: &Matrix, p: &Poly) -> Result<Poly> {
    let n = g.rows();
    if !g.is_square() || p.support_len() > n {
        return Err(Error::DimensionMismatch { expected: n, got: p.support_len().max(g.cols()) });
    }
    let ginv = g.inverse().ok_or_else(|| Error::Inconsistent("group element is singular".into()))?;
    let images: Vec<Poly> = (0..n).map(|i| Poly::linear_form(ginv.row(i))).collect();
    Ok(p.substitute(&images))
}

/// Average of `p` over `group` (the whole group `W` when `None`).
pub fn reynolds(rs: &RootSystem, p: &Poly, group: Option<&GroupElementSet>, budget: &Budget) -> Result<Poly> {
    let owned;
    let group = match group {
        Some(g) => g,
        None => {
            owned = GroupElementSet::enumerate(rs, budget)?;
            &owned
        }
    };
    let mut acc = Poly::zero();
    for e in group.elements() {
        budget.check("Reynolds average")?;
        acc += &act(&e.matrix, p)?;
    }
    Ok(acc.scale(&NfElem::from_int(group.len() as i64).inv()))
}

/// `J_ij = ∂ f_i / ∂ x_j`.
pub fn jacobian_matrix(polys: &[Poly], nvars: usize) -> DenseMatrix<Poly> {
    DenseMatrix::from_fn(polys.len(), nvars, |i, j| polys[i].derivative(j))
}

/// Whether the Jacobian determinant is a nonzero polynomial.
///
/// Evaluates at a few seeded random integer points first; only if all vanish is the
/// determinant expanded symbolically.
pub fn jacobian_nonzero(inv: &InvariantSystem) -> bool {
    let n = inv.nvars();
    if inv.polys().len() != n {
        return false;
    }
    let jac = jacobian_matrix(inv.polys(), n);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1ac0b1);
    for _ in 0..3 {
        let point: Vec<NfElem> = (0..n).map(|_| NfElem::from_int(rng.gen_range(-50..=50))).collect();
        let m = jac.map(|p| p.eval(&point));
        if !m.det().is_zero() {
            return true;
        }
    }
    !jac.det().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterType, Family};
    use crate::poly::{fundamental_invariants, Monomial};

    fn rs(f: Family) -> RootSystem {
        RootSystem::build(&CoxeterType::irreducible(f).unwrap()).unwrap()
    }

    fn x(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn transposition_permutes_variables() {
        let r = rs(Family::A(2));
        let s = &r.simple_reflections()[0];
        let p = &x(0).pow(2) * &x(2);
        assert_eq!(act(s, &p).unwrap(), &x(1).pow(2) * &x(2));
        assert_eq!(act(&DenseMatrix::identity(3), &p).unwrap(), p);
    }

    #[test]
    fn action_is_a_left_action() {
        let r = rs(Family::H3);
        let g = GroupElementSet::enumerate(&r, &Budget::unlimited()).unwrap();
        let p = Poly::from_terms([(Monomial::from_exps(&[2, 1, 0]), NfElem::from_int(3)), (Monomial::from_exps(&[0, 0, 3]), NfElem::from_int(-1))]);
        let (a, b) = (&g.elements()[17].matrix, &g.elements()[55].matrix);
        let ab = a.mul(b).unwrap();
        assert_eq!(act(&ab, &p).unwrap(), act(a, &act(b, &p).unwrap()).unwrap());
    }

    #[test]
    fn reynolds_of_a_square_in_a2() {
        let r = rs(Family::A(2));
        let avg = reynolds(&r, &x(0).pow(2), None, &Budget::unlimited()).unwrap();
        let p2 = &(&x(0).pow(2) + &x(1).pow(2)) + &x(2).pow(2);
        assert_eq!(avg, p2.scale(&NfElem::from_rational(crate::scalar::ratio(1, 3))));
        let again = reynolds(&r, &avg, None, &Budget::unlimited()).unwrap();
        assert_eq!(again, avg);
    }

    #[test]
    fn jacobian_certificates() {
        for f in [Family::A(2), Family::B(3), Family::D(4), Family::I2(5), Family::H3] {
            let inv = fundamental_invariants(&rs(f)).unwrap();
            assert!(jacobian_nonzero(&inv), "{f}");
        }
        let p2 = &x(0).pow(2) + &x(1).pow(2);
        let dup = InvariantSystem::new(vec![p2.clone(), p2], 2);
        assert!(!jacobian_nonzero(&dup));
    }
}
