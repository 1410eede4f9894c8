use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::monomial::Monomial;
use crate::scalar::{ExactDiv, Ring};

/// A sparse polynomial with terms kept in descending degrevlex order and no zero coefficients.
///
/// The variable count is not stored; callers that need it (evaluation, substitution,
/// monomial enumeration) pass it explicitly.
#[derive(Clone, PartialEq)]
pub struct Polynomial<T> {
    terms: Vec<(Monomial, T)>,
}

impl<T: Ring> Polynomial<T> {
    pub fn constant(c: T) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), T::one())
    }

    pub fn term(m: Monomial, c: T) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut map: HashMap<Monomial, T> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(map)
    }

    fn from_map(map: HashMap<Monomial, T>) -> Self {
        let mut terms: Vec<(Monomial, T)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        Polynomial { terms }
    }

    /// `sum coeffs[i] * x_i`.
    pub fn linear_form(coeffs: &[T]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(i), c.clone())))
    }

    /// Trusts that `terms` is strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, T)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Polynomial { terms }
    }

    pub fn pop_leading(&mut self) -> Option<(Monomial, T)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn terms(&self) -> &[(Monomial, T)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, T)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, T)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Polynomial { terms: self.terms.iter().filter(|t| t.0.degree() == d).cloned().collect() }
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => T::zero(),
        }
    }

    /// One past the highest variable index occurring in any term.
    pub fn support_len(&self) -> usize {
        self.terms.iter().map(|t| t.0.support_len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (*m, x.mul_ref(c))).filter(|t| !t.1.is_zero()).collect() }
    }

    /// `c * m * self`; the term order is preserved by multiplication with a monomial.
    pub fn mul_term(&self, m: &Monomial, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(t, x)| (t.mul(m), x.mul_ref(c))).filter(|t| !t.1.is_zero()).collect() }
    }

    /// `self + c * m * other` by a single merge pass.
    pub fn add_scaled(&self, other: &Self, m: &Monomial, c: &T) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, x)| (t.mul(m), x)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (t, x) = b.next().unwrap();
                    out.push((t, x.mul_ref(c)));
                }
                (Some(p), Some(q)) => match p.0.cmp(&q.0) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => {
                        let (t, x) = b.next().unwrap();
                        out.push((t, x.mul_ref(c)));
                    }
                    std::cmp::Ordering::Equal => {
                        let (t, y) = a.next().unwrap();
                        let (_, x) = b.next().unwrap();
                        let v = y.add_ref(&x.mul_ref(c));
                        if !v.is_zero() {
                            out.push((*t, v));
                        }
                    }
                },
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { terms: out }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let c = if negate { -T::one() } else { T::one() };
        self.add_scaled(other, &Monomial::one(), &c)
    }

    pub fn pow(&self, e: u32) -> Self {
        self.power(e)
    }

    /// Evaluates at a point; `point.len()` must cover every variable used.
    pub fn eval(&self, point: &[T]) -> T {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t *= &x.power(e as u32);
                }
            }
            debug_assert!(m.support_len() <= point.len());
            acc += &t;
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(m, _)| m.exp(var) > 0).map(|(m, c)| {
            let e = m.exp(var);
            let mut exps = *m.exps();
            exps[var] -= 1;
            (Monomial::from_exps(&exps), c.mul_ref(&T::from_i64(e as i64)))
        }))
    }

    /// Replaces `x_i` by `images[i]`.
    pub fn substitute(&self, images: &[Polynomial<T>]) -> Self {
        let mut powers: Vec<Vec<Polynomial<T>>> = images.iter().map(|p| vec![Polynomial::one(), p.clone()]).collect();
        let mut map: HashMap<Monomial, T> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                t = &t * &pw[e];
            }
            assert!(m.support_len() <= images.len(), "substitution misses a variable");
            for (mm, cc) in t.terms {
                match map.get_mut(&mm) {
                    Some(v) => *v += &cc,
                    None => {
                        map.insert(mm, cc);
                    }
                }
            }
        }
        Self::from_map(map)
    }

    pub fn map_coeffs<U: Ring>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Coefficients of a linear form `sum c_i x_i`, padded to `nvars`; `None` if not linear homogeneous.
    pub fn linear_coeffs(&self, nvars: usize) -> Option<Vec<T>> {
        let mut v = vec![T::zero(); nvars];
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return None;
            }
            let i = (0..nvars).find(|&i| m.exp(i) == 1)?;
            v[i] = c.clone();
        }
        Some(v)
    }
}

impl<T: ExactDiv> Polynomial<T> {
    /// Division by a single divisor with leading-term reduction; returns `(q, r)`.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let (lm, lc) = divisor.leading_term()?.clone();
        let mut p = self.clone();
        let mut q: Vec<(Monomial, T)> = Vec::new();
        let mut r: Vec<(Monomial, T)> = Vec::new();
        while let Some((m, c)) = p.terms.first().cloned() {
            match lm.quotient_of(&m) {
                Some(qm) => {
                    let qc = c.div_exact(&lc)?;
                    p = p.add_scaled(divisor, &qm, &(-qc.clone()));
                    q.push((qm, qc));
                }
                None => {
                    r.push((m, c));
                    p.terms.remove(0);
                }
            }
        }
        Some((Polynomial::from_terms(q), Polynomial { terms: r }))
    }
}

impl<T: Ring> Zero for Polynomial<T> {
    fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Ring> One for Polynomial<T> {
    fn one() -> Self {
        Self::constant(T::one())
    }
}

impl<T: Ring> Neg for Polynomial<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<T: Ring> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -(self.clone())
    }
}

impl<T: Ring> Add<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        self.merge(rhs, false)
    }
}

impl<T: Ring> Sub<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        self.merge(rhs, true)
    }
}

impl<T: Ring> Mul<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut map: HashMap<Monomial, T> = HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match map.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Polynomial::from_map(map)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<T: Ring> $tr<Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Polynomial<T>) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Ring> $tr<&Polynomial<T>> for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: &Polynomial<T>) -> Polynomial<T> {
                (&self).$m(rhs)
            }
        }
        impl<T: Ring> $tr<Polynomial<T>> for &Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Polynomial<T>) -> Polynomial<T> {
                self.$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<T: Ring> AddAssign<&Polynomial<T>> for Polynomial<T> {
    fn add_assign(&mut self, rhs: &Polynomial<T>) {
        *self = self.merge(rhs, false);
    }
}

impl<T: Ring> SubAssign<&Polynomial<T>> for Polynomial<T> {
    fn sub_assign(&mut self, rhs: &Polynomial<T>) {
        *self = self.merge(rhs, true);
    }
}

impl<T: Ring> MulAssign<&Polynomial<T>> for Polynomial<T> {
    fn mul_assign(&mut self, rhs: &Polynomial<T>) {
        *self = &*self * rhs;
    }
}

impl<T: Ring> Ring for Polynomial<T> {
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
        Self::constant(T::from_i64(n))
    }
}

impl<T: ExactDiv> ExactDiv for Polynomial<T> {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }
}

impl<T: Ring + fmt::Display> Polynomial<T> {
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let compound = cs.trim_start_matches('-').contains([' ', '+', '-']);
            let (neg, body) = if !compound && cs.starts_with('-') { (true, cs[1..].to_string()) } else { (false, cs) };
            let body = if compound { format!("({body})") } else { body };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&body);
            } else if body == "1" {
                s.push_str(&m.display_with(names));
            } else {
                s.push_str(&format!("{body}*{}", m.display_with(names)));
            }
        }
        s
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter().map(|(m, c)| (m, c))).finish()
    }
}
