//! Irreducibility over the rationals for monic polynomials of small degree.
//!
//! Pipeline: rescale to a monic integer polynomial, rational root test,
//! distinct-degree factorization modulo a handful of primes (degree-pattern
//! sieve), and finally Hensel lifting with factor recombination.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::upoly::UPoly;

/// Outcome of the irreducibility test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A nontrivial monic factor of the rescaled integer polynomial was found.
    Reducible { factor_degree: usize },
}

/// Decides irreducibility of a monic squarefree rational polynomial.
pub fn irreducibility(f: &UPoly) -> Irreducibility {
    let g = monic_integer(f);
    let n = g.len() - 1;
    if n <= 1 {
        return Irreducibility::Irreducible;
    }
    let root_test = has_integer_root(&g);
    if root_test == Some(true) {
        return Irreducibility::Reducible { factor_degree: 1 };
    }
    if n <= 3 && root_test == Some(false) {
        // No linear factor means no factor at all in degree 2 or 3.
        return Irreducibility::Irreducible;
    }

    let mut patterns: Vec<Vec<usize>> = Vec::new();
    let mut best: Option<(u64, Vec<(ModPoly, usize)>)> = None;
    for p in good_primes(&g).take(8) {
        let fp = ModPoly::from_ints(&g, p);
        let ddf = distinct_degree(&fp);
        let mut pattern = Vec::new();
        for (h, d) in &ddf {
            for _ in 0..h.degree() / d {
                pattern.push(*d);
            }
        }
        if pattern.len() == 1 {
            return Irreducibility::Irreducible;
        }
        patterns.push(pattern);
        let count: usize = ddf.iter().map(|(h, d)| h.degree() / d).sum();
        if best.as_ref().is_none_or(|(_, b)| count < b.iter().map(|(h, d)| h.degree() / d).sum()) {
            best = Some((p, ddf));
        }
    }

    // Factor degrees over Q must be subset sums in every modular pattern.
    let mut feasible: BTreeSet<usize> = (1..n).collect();
    for pat in &patterns {
        let sums = subset_sums(pat);
        feasible.retain(|d| sums.contains(d));
    }
    if feasible.is_empty() {
        return Irreducibility::Irreducible;
    }

    let (p, ddf) = best.expect("at least one good prime");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut factors = Vec::new();
    for (h, d) in ddf {
        equal_degree(&h, d, &mut rng, &mut factors);
    }
    match recombine(&g, p, &factors) {
        Some(d) => Irreducibility::Reducible { factor_degree: d },
        None => Irreducibility::Irreducible,
    }
}

/// `D^n f(y / D)` for the lcm `D` of the denominators: monic with integer coefficients.
fn monic_integer(f: &UPoly) -> Vec<BigInt> {
    let n = f.degree().expect("nonzero polynomial");
    let d = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    (0..=n)
        .map(|i| {
            let scale = BigRational::from_integer(num_traits::pow(d.clone(), n - i));
            (f.coeff(i) * scale).to_integer()
        })
        .collect()
}

fn eval_int(g: &[BigInt], x: &BigInt) -> BigInt {
    g.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// `None` when the constant term is too large to enumerate its divisors.
fn has_integer_root(g: &[BigInt]) -> Option<bool> {
    if g[0].is_zero() {
        return Some(true);
    }
    let c = g[0].abs();
    let c64 = c.to_u64().filter(|&v| v <= 1_000_000_000_000)?;
    let mut d = 1u64;
    while d * d <= c64 {
        if c64 % d == 0 {
            for cand in [d, c64 / d] {
                let b = BigInt::from(cand);
                if eval_int(g, &b).is_zero() || eval_int(g, &-b).is_zero() {
                    return Some(true);
                }
            }
        }
        d += 1;
    }
    Some(false)
}

fn subset_sums(parts: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0usize]);
    for &p in parts {
        let next: Vec<usize> = sums.iter().map(|s| s + p).collect();
        sums.extend(next);
    }
    sums
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Odd primes modulo which `g` stays squarefree.
fn good_primes(g: &[BigInt]) -> impl Iterator<Item = u64> + '_ {
    small_primes().filter(move |&p| {
        let fp = ModPoly::from_ints(g, p);
        fp.gcd(&fp.derivative()).degree() == 0
    })
}

/// Polynomial over `Z/p`, coefficients low degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ModPoly {
    c: Vec<u64>,
    p: u64,
}

impl ModPoly {
    fn new(mut c: Vec<u64>, p: u64) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { c, p }
    }

    fn from_ints(g: &[BigInt], p: u64) -> Self {
        let pb = BigInt::from(p);
        Self::new(g.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect(), p)
    }

    fn x(p: u64) -> Self {
        Self::new(vec![0, 1], p)
    }

    fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        Self::new(
            (0..n)
                .map(|i| (self.c.get(i).copied().unwrap_or(0) + p - o.c.get(i).copied().unwrap_or(0)) % p)
                .collect(),
            p,
        )
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::new(vec![], self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::new(out, p)
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = d.degree();
        let li = self.inv(*d.c.last().unwrap());
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::new(vec![], p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd] * li % p;
            if c == 0 {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                r[i + j] = (r[i + j] + p - c * dj % p) % p;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Self::new(q, p), Self::new(r, p))
    }

    fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let li = self.inv(*self.c.last().unwrap());
        Self::new(self.c.iter().map(|a| a * li % self.p).collect(), self.p)
    }

    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(s, t)` with `s*self + t*o = 1`, assuming coprime inputs.
    fn bezout(&self, o: &Self) -> (Self, Self) {
        let p = self.p;
        let one = Self::new(vec![1], p);
        let zero = Self::new(vec![], p);
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        assert_eq!(r0.degree(), 0, "bezout on non-coprime polynomials");
        let li = self.inv(r0.c[0]);
        let scale = |x: &Self| Self::new(x.c.iter().map(|a| a * li % p).collect(), p);
        (scale(&s0), scale(&t0))
    }

    fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(self.c.iter().enumerate().skip(1).map(|(i, a)| (i as u64 % p) * a % p).collect(), p)
    }

    fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::new(vec![1], self.p);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(m);
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
        }
        acc
    }
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut h = ModPoly::x(p);
    let pe = BigUint::from(p);
    let mut d = 0;
    while rest.degree() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pe, &rest);
        let g = rest.gcd(&h.sub(&ModPoly::x(p)));
        if g.degree() > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.degree() > 0 {
        let deg = rest.degree();
        out.push((rest, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    if f.degree() == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    let exp = (num_traits::pow(BigUint::from(p), d) - BigUint::one()) >> 1;
    loop {
        let a = ModPoly::new((0..f.degree()).map(|_| rng.gen_range(0..p)).collect(), p);
        if a.degree() == 0 {
            continue;
        }
        let b = a.pow_mod(&exp, f).sub(&ModPoly::new(vec![1], p));
        let g = f.gcd(&b);
        if g.degree() > 0 && g.degree() < f.degree() {
            let h = f.div_rem(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

// Integer polynomial helpers for the lifting stage (low degree first).

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    a.iter().map(|x| x.mod_floor(m)).collect()
}

fn to_mod(a: &[BigInt], p: u64) -> ModPoly {
    ModPoly::from_ints(a, p)
}

fn from_mod(a: &ModPoly) -> Vec<BigInt> {
    a.c.iter().map(|&x| BigInt::from(x)).collect()
}

/// Lifts `g ≡ a*b (mod p)` to `g ≡ A*B (mod p^k)`, all monic.
fn hensel_pair(g: &[BigInt], a: &ModPoly, b: &ModPoly, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = a.p;
    let pb = BigInt::from(p);
    let (_, t) = a.bezout(b);
    let mut la = from_mod(a);
    let mut lb = from_mod(b);
    let mut pj = pb.clone();
    for _ in 1..k {
        let prod = int_mul(&la, &lb);
        let n = g.len().max(prod.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| g.get(i).cloned().unwrap_or_default() - prod.get(i).cloned().unwrap_or_default())
            .collect();
        debug_assert!(diff.iter().all(|c| (c % &pj).is_zero()));
        let e: Vec<BigInt> = diff.iter().map(|c| c / &pj).collect();
        let e = to_mod(&e, p);
        // t*b ≡ 1 (mod a), so b*da ≡ e (mod a) and a divides e - b*da.
        let da = e.mul(&t).rem(a);
        let (db, rem) = e.sub(&b.mul(&da)).div_rem(a);
        debug_assert!(rem.is_zero());
        let add = |x: &mut Vec<BigInt>, d: &ModPoly| {
            for (i, c) in d.c.iter().enumerate() {
                if i >= x.len() {
                    x.resize(i + 1, BigInt::zero());
                }
                x[i] += &pj * BigInt::from(*c);
            }
        };
        add(&mut la, &da);
        add(&mut lb, &db);
        pj *= &pb;
        la = int_reduce(&la, &pj);
        lb = int_reduce(&lb, &pj);
    }
    (la, lb)
}

/// Lifts a full modular factorization of `g` to modulus `p^k`.
fn hensel_multi(g: &[BigInt], factors: &[ModPoly], k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        let pk = num_traits::pow(BigInt::from(factors[0].p), k as usize);
        return vec![int_reduce(g, &pk)];
    }
    let mid = factors.len() / 2;
    let p = factors[0].p;
    let prod = |fs: &[ModPoly]| fs.iter().fold(ModPoly::new(vec![1], p), |acc, f| acc.mul(f));
    let (la, lb) = hensel_pair(g, &prod(&factors[..mid]), &prod(&factors[mid..]), k);
    let mut out = hensel_multi(&la, &factors[..mid], k);
    out.extend(hensel_multi(&lb, &factors[mid..], k));
    out
}

/// Exact division test for monic integer polynomials.
fn int_divides(d: &[BigInt], g: &[BigInt]) -> bool {
    let dd = d.len() - 1;
    let mut r = g.to_vec();
    for i in (0..=(r.len() - 1 - dd)).rev() {
        let c = r[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, x) in d.iter().enumerate() {
            r[i + j] -= &c * x;
        }
    }
    r[..dd].iter().all(|c| c.is_zero())
}

fn recombine(g: &[BigInt], p: u64, factors: &[ModPoly]) -> Option<usize> {
    let n = g.len() - 1;
    // Coefficient bound for any factor: 2^n * ||g||_2 is comfortably above Mignotte's.
    let norm: BigInt = g.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = (BigInt::one() << n) * norm * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_multi(g, factors, k);
    let half = &pk >> 1;
    let r = lifted.len();
    for size in 1..=r / 2 {
        for subset in combinations(r, size) {
            let mut prod = vec![BigInt::one()];
            for &i in &subset {
                prod = int_reduce(&int_mul(&prod, &lifted[i]), &pk);
            }
            let sym: Vec<BigInt> = prod.into_iter().map(|c| if c > half { c - &pk } else { c }).collect();
            if int_divides(&sym, g) {
                return Some(sym.len() - 1);
            }
        }
    }
    None
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
