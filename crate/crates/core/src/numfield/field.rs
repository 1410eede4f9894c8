use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::factor::{irreducibility, Irreducibility};
use super::upoly::UPoly;
use crate::error::{Error, Result};
use crate::scalar::{ExactDiv, Field, Ring};

/// Generator intervals are refined to this many bits at construction.
const INITIAL_PRECISION_BITS: u64 = 48;

/// A real number field `Q[x]/(f)` with the generator pinned to one real root of `f`.
#[derive(Debug)]
pub struct NumberField {
    minpoly: UPoly,
    degree: usize,
    lo: BigRational,
    hi: BigRational,
    /// `x^(n+j) mod f` for `j = 0..n-1`.
    reduction: Vec<Vec<BigRational>>,
    name: String,
}

impl NumberField {
    /// Builds `Q[x]/(minpoly)` with the real embedding sending `x` to the unique root in `(lo, hi)`.
    pub fn new(minpoly: UPoly, interval: (BigRational, BigRational)) -> Result<Arc<Self>> {
        Self::named(minpoly, interval, "a")
    }

    pub fn named(minpoly: UPoly, interval: (BigRational, BigRational), name: &str) -> Result<Arc<Self>> {
        let degree = minpoly.degree().filter(|&d| d >= 1).ok_or_else(|| Error::NotIrreducible(minpoly.to_string()))?;
        if !minpoly.is_monic() {
            return Err(Error::NotMonic(minpoly.to_string()));
        }
        if !minpoly.is_squarefree() {
            return Err(Error::NotIrreducible(format!("{minpoly} is not squarefree")));
        }
        if let Irreducibility::Reducible { factor_degree } = irreducibility(&minpoly) {
            return Err(Error::NotIrreducible(format!("{minpoly} has a factor of degree {factor_degree}")));
        }
        let (mut lo, mut hi) = interval;
        if lo >= hi {
            return Err(Error::NotIsolating(format!("empty interval ({lo}, {hi})")));
        }
        let (flo, fhi) = (minpoly.eval(&lo), minpoly.eval(&hi));
        if flo.is_zero() || fhi.is_zero() || flo.signum() == fhi.signum() {
            return Err(Error::NotIsolating(format!("{minpoly} has no sign change on ({lo}, {hi})")));
        }
        let roots = minpoly.count_roots(&lo, &hi);
        if roots != 1 {
            return Err(Error::NotIsolating(format!("{minpoly} has {roots} roots in ({lo}, {hi})")));
        }
        let target = BigRational::new(BigInt::one(), BigInt::one() << INITIAL_PRECISION_BITS);
        while &hi - &lo > target {
            bisect(&minpoly, &mut lo, &mut hi);
        }

        let n = degree;
        let mut reduction = Vec::with_capacity(n.saturating_sub(1));
        // x^n = -(f_0 + ... + f_{n-1} x^{n-1})
        let mut cur: Vec<BigRational> = (0..n).map(|i| -minpoly.coeff(i)).collect();
        for _ in 0..n.saturating_sub(1) {
            reduction.push(cur.clone());
            // multiply by x and reduce again
            let top = cur[n - 1].clone();
            for i in (1..n).rev() {
                cur[i] = cur[i - 1].clone() - &top * minpoly.coeff(i);
            }
            cur[0] = -&top * minpoly.coeff(0);
        }
        Ok(Arc::new(NumberField { minpoly, degree, lo, hi, reduction, name: name.to_string() }))
    }

    pub fn minpoly(&self) -> &UPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Current isolating interval of the generator.
    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn generator_f64(&self) -> f64 {
        crate::scalar::rational_to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }

    /// Same polynomial and same root.
    pub fn same_as(&self, other: &NumberField) -> bool {
        if self.minpoly != other.minpoly {
            return false;
        }
        let lo = (&self.lo).max(&other.lo);
        let hi = (&self.hi).min(&other.hi);
        lo < hi && (self.minpoly.eval(lo).is_zero() || self.minpoly.count_roots(lo, hi) == 1)
    }

    fn mul_reduce(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = self.degree;
        let mut prod = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        if prod.len() > n {
            let high: Vec<BigRational> = prod.drain(n..).collect();
            for (j, c) in high.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, r) in self.reduction[j].iter().enumerate() {
                    if !r.is_zero() {
                        prod[k] += c * r;
                    }
                }
            }
        }
        prod
    }
}

fn bisect(f: &UPoly, lo: &mut BigRational, hi: &mut BigRational) {
    let mid = (&*lo + &*hi) / BigRational::from_integer(2.into());
    let fm = f.eval(&mid);
    if fm.is_zero() {
        // Only possible for a rational root, i.e. a linear minimal polynomial.
        let eps = (&*hi - &*lo) / BigRational::from_integer(8.into());
        *lo = &mid - &eps;
        *hi = &mid + eps;
        return;
    }
    if fm.signum() == f.eval(lo).signum() {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

fn interval_mul(a: (&BigRational, &BigRational), b: (&BigRational, &BigRational)) -> (BigRational, BigRational) {
    let ps = [a.0 * b.0, a.0 * b.1, a.1 * b.0, a.1 * b.1];
    let lo = ps.iter().min().unwrap().clone();
    let hi = ps.iter().max().unwrap().clone();
    (lo, hi)
}

/// Horner evaluation of `coeffs` over the interval `[lo, hi]`.
fn interval_eval(coeffs: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc = (coeffs.last().unwrap().clone(), coeffs.last().unwrap().clone());
    for c in coeffs.iter().rev().skip(1) {
        let (l, h) = interval_mul((&acc.0, &acc.1), (lo, hi));
        acc = (l + c, h + c);
    }
    acc
}

/// An element of a [`NumberField`], stored as its reduced polynomial in the generator.
///
/// Rational constants carry no field handle and combine with elements of any field,
/// which is what lets `Zero::zero()` and `One::one()` exist without a context.
#[derive(Clone)]
pub struct NfElem {
    field: Option<Arc<NumberField>>,
    coeffs: Vec<BigRational>,
}

/// The four field operations, for the fallible [`NfElem::arith`] entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl NfElem {
    fn normalized(field: Option<Arc<NumberField>>, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let field = if coeffs.len() <= 1 { None } else { field };
        NfElem { field, coeffs }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::normalized(None, vec![q])
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// The element `sum coeffs[i] * g^i`, reduced modulo the minimal polynomial.
    pub fn from_coeffs(field: &Arc<NumberField>, coeffs: Vec<BigRational>) -> Self {
        let n = field.degree();
        if coeffs.len() <= n {
            return Self::normalized(Some(field.clone()), coeffs);
        }
        let (_, r) = UPoly::new(coeffs).div_rem(field.minpoly());
        Self::normalized(Some(field.clone()), r.coeffs().to_vec())
    }

    pub fn generator(field: &Arc<NumberField>) -> Self {
        if field.degree() == 1 {
            return Self::from_rational(-field.minpoly().coeff(0));
        }
        Self::normalized(Some(field.clone()), vec![BigRational::zero(), BigRational::one()])
    }

    /// Coefficients in the power basis `1, g, g^2, ...` (trailing zeros trimmed).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `g^i`.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn join(&self, other: &Self) -> Result<Option<Arc<NumberField>>> {
        match (&self.field, &other.field) {
            (None, f) | (f, None) => Ok(f.clone()),
            (Some(a), Some(b)) if Arc::ptr_eq(a, b) || a.same_as(b) => Ok(Some(a.clone())),
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Checked arithmetic, reporting field mismatches and division by zero.
    pub fn arith(&self, other: &Self, op: ArithOp) -> Result<Self> {
        let field = self.join(other)?;
        Ok(match op {
            ArithOp::Add => Self::normalized(field, add_vec(&self.coeffs, &other.coeffs, false)),
            ArithOp::Sub => Self::normalized(field, add_vec(&self.coeffs, &other.coeffs, true)),
            ArithOp::Mul => self.mul_in(field, other),
            ArithOp::Div => {
                if other.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                self.mul_in(field, &other.try_inv()?)
            }
        })
    }

    fn mul_in(&self, field: Option<Arc<NumberField>>, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        if self.coeffs.len() == 1 || other.coeffs.len() == 1 {
            let (s, v) = if self.coeffs.len() == 1 { (&self.coeffs[0], other) } else { (&other.coeffs[0], self) };
            return Self::normalized(field, v.coeffs.iter().map(|c| c * s).collect());
        }
        let f = field.expect("non-rational operands carry a field");
        let coeffs = f.mul_reduce(&self.coeffs, &other.coeffs);
        Self::normalized(Some(f), coeffs)
    }

    pub fn try_inv(&self) -> Result<Self> {
        match self.coeffs.len() {
            0 => Err(Error::DivisionByZero),
            1 => Ok(Self::from_rational(self.coeffs[0].recip())),
            _ => {
                let f = self.field.as_ref().unwrap();
                let (g, s, _) = UPoly::new(self.coeffs.clone()).xgcd(f.minpoly());
                if g.degree() != Some(0) {
                    return Err(Error::Inconsistent("element shares a factor with the minimal polynomial".into()));
                }
                Ok(Self::normalized(Some(f.clone()), s.rem(f.minpoly()).coeffs().to_vec()))
            }
        }
    }

    /// Sign under the designated real embedding: `-1`, `0` or `1`.
    pub fn signum(&self) -> i8 {
        match self.coeffs.len() {
            0 => 0,
            1 => sign_of(&self.coeffs[0]),
            _ => {
                let f = self.field.as_ref().unwrap();
                let (mut lo, mut hi) = (f.lo.clone(), f.hi.clone());
                loop {
                    let (vlo, vhi) = interval_eval(&self.coeffs, &lo, &hi);
                    if vlo.is_positive() {
                        return 1;
                    }
                    if vhi.is_negative() {
                        return -1;
                    }
                    // The value is a nonzero algebraic number, so refinement terminates.
                    bisect(&f.minpoly, &mut lo, &mut hi);
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn to_f64(&self) -> f64 {
        match &self.field {
            None => self.coeffs.first().map_or(0.0, crate::scalar::rational_to_f64),
            Some(f) => {
                let x = f.generator_f64();
                self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + crate::scalar::rational_to_f64(c))
            }
        }
    }

    /// Substitutes this element into a rational polynomial.
    pub fn eval_upoly(&self, p: &UPoly) -> Self {
        let mut acc = Self::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc * self.clone() + Self::from_rational(c.clone());
        }
        acc
    }
}

fn sign_of(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn add_vec(a: &[BigRational], b: &[BigRational], subtract: bool) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i);
            let y = b.get(i);
            match (x, y, subtract) {
                (Some(x), Some(y), false) => x + y,
                (Some(x), Some(y), true) => x - y,
                (Some(x), None, _) => x.clone(),
                (None, Some(y), false) => y.clone(),
                (None, Some(y), true) => -y,
                (None, None, _) => unreachable!(),
            }
        })
        .collect()
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && (self.coeffs.len() <= 1 || self.join(other).is_ok())
    }
}

impl Eq for NfElem {}

impl Hash for NfElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let name = self.field.as_ref().map_or("a", |fl| fl.name());
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 || !a.is_one() {
                write!(f, "{a}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{name}")?,
                _ => write!(f, "{name}^{i}")?,
            }
        }
        Ok(())
    }
}

impl Zero for NfElem {
    fn zero() -> Self {
        NfElem { field: None, coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for NfElem {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Neg for NfElem {
    type Output = NfElem;
    fn neg(self) -> NfElem {
        NfElem { field: self.field, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &NfElem {
    type Output = NfElem;
    fn neg(self) -> NfElem {
        NfElem { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:expr) => {
        impl $tr<&NfElem> for &NfElem {
            type Output = NfElem;
            fn $m(self, rhs: &NfElem) -> NfElem {
                self.arith(rhs, $op).expect("number field arithmetic")
            }
        }
        impl $tr<NfElem> for NfElem {
            type Output = NfElem;
            fn $m(self, rhs: NfElem) -> NfElem {
                self.arith(&rhs, $op).expect("number field arithmetic")
            }
        }
        impl $tr<&NfElem> for NfElem {
            type Output = NfElem;
            fn $m(self, rhs: &NfElem) -> NfElem {
                self.arith(rhs, $op).expect("number field arithmetic")
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);
binop!(Div, div, ArithOp::Div);

impl AddAssign<&NfElem> for NfElem {
    fn add_assign(&mut self, rhs: &NfElem) {
        if rhs.coeffs.is_empty() {
            return;
        }
        let field = self.join(rhs).expect("number field arithmetic");
        let mut coeffs = std::mem::take(&mut self.coeffs);
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        *self = Self::normalized(field, coeffs);
    }
}

impl SubAssign<&NfElem> for NfElem {
    fn sub_assign(&mut self, rhs: &NfElem) {
        if rhs.coeffs.is_empty() {
            return;
        }
        let field = self.join(rhs).expect("number field arithmetic");
        let mut coeffs = std::mem::take(&mut self.coeffs);
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= r;
        }
        *self = Self::normalized(field, coeffs);
    }
}

impl MulAssign<&NfElem> for NfElem {
    fn mul_assign(&mut self, rhs: &NfElem) {
        *self = &*self * rhs;
    }
}

impl Ring for NfElem {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl ExactDiv for NfElem {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.arith(divisor, ArithOp::Div).ok()
    }
}

impl Field for NfElem {
    fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }
    fn from_rational(q: &BigRational) -> Self {
        Self::from_rational(q.clone())
    }
}

impl From<BigRational> for NfElem {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for NfElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn golden() -> Arc<NumberField> {
        NumberField::named(UPoly::from_i64(&[-1, -1, 1]), (rat(1), rat(2)), "t").unwrap()
    }

    #[test]
    fn golden_ratio_relations() {
        let f = golden();
        let t = NfElem::generator(&f);
        assert_eq!(&t * &t, &t + &NfElem::one());
        assert_eq!(&t + &NfElem::zero(), t);
        assert_eq!(t.try_inv().unwrap(), &t - &NfElem::one());
        assert!((t.to_f64() - 1.618033988749895).abs() < 1e-12);
    }

    #[test]
    fn conjugate_embedding_flips_signs() {
        let f = NumberField::new(UPoly::from_i64(&[-1, -1, 1]), (rat(-1), rat(0))).unwrap();
        let t = NfElem::generator(&f);
        assert!((t.to_f64() + 0.6180339887498949).abs() < 1e-12);
        assert_eq!((&t - &NfElem::one()).signum(), -1);
    }

    #[test]
    fn signs_of_small_elements() {
        let f = golden();
        let t = NfElem::generator(&f);
        let one = NfElem::one();
        assert_eq!(NfElem::zero().signum(), 0);
        assert_eq!((&t - &one).signum(), 1);
        assert_eq!((&one - &t).signum(), -1);
        // 55 t - 89 ≈ -0.008: needs some refinement but stays exact.
        let close = &(&t * &NfElem::from_int(55)) - &NfElem::from_int(89);
        assert_eq!(close.signum(), -1);
        let closer = &(&t * &NfElem::from_int(-832040)) + &NfElem::from_int(1346269);
        assert_eq!(closer.signum(), 1);
    }

    #[test]
    fn linear_minpoly_is_the_rationals() {
        let f = NumberField::new(UPoly::from_i64(&[-1, 1]), (rat(0), rat(2))).unwrap();
        assert_eq!(f.degree(), 1);
        let g = NfElem::generator(&f);
        assert_eq!(g, NfElem::one());
        assert_eq!(g.as_rational(), Some(rat(1)));
    }

    #[test]
    fn construction_errors() {
        let reducible = UPoly::from_i64(&[-1, 0, 1]);
        assert!(matches!(NumberField::new(reducible, (rat(0), rat(2))), Err(Error::NotIrreducible(_))));
        let f = UPoly::from_i64(&[-1, -1, 1]);
        assert!(matches!(NumberField::new(f.clone(), (rat(-2), rat(2))), Err(Error::NotIsolating(_))));
        assert!(matches!(NumberField::new(f.clone(), (rat(2), rat(3))), Err(Error::NotIsolating(_))));
        assert!(matches!(NumberField::new(f, (rat(2), rat(1))), Err(Error::NotIsolating(_))));
        let not_monic = UPoly::from_i64(&[-1, 0, 2]);
        assert!(matches!(NumberField::new(not_monic, (rat(0), rat(1))), Err(Error::NotMonic(_))));
    }

    #[test]
    fn checked_arith_errors() {
        let f = golden();
        let g = NumberField::new(UPoly::from_i64(&[-2, 0, 1]), (rat(1), rat(2))).unwrap();
        let t = NfElem::generator(&f);
        let s = NfElem::generator(&g);
        assert_eq!(t.arith(&s, ArithOp::Add), Err(Error::FieldMismatch));
        assert_eq!(t.arith(&NfElem::zero(), ArithOp::Div), Err(Error::DivisionByZero));
        // Rationals mix with anything.
        assert!(t.arith(&NfElem::from_rational(ratio(1, 2)), ArithOp::Mul).is_ok());
    }

    #[test]
    fn zero_from_any_context_is_equal() {
        let f = golden();
        let t = NfElem::generator(&f);
        assert_eq!(&t - &t, NfElem::zero());
    }
}
