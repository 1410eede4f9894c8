//! Real subfields of cyclotomic fields, `Q(2cos(2π/n))`.

use std::f64::consts::PI;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};

use super::field::{NfElem, NumberField};
use super::upoly::UPoly;

/// The `n`-th cyclotomic polynomial, integer coefficients low degree first.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 divided by every Φ_d with d | n, d < n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut p = UPoly::from_bigints(&num);
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.div_rem(&UPoly::from_bigints(&cyclotomic_poly(d))).0;
        }
    }
    p.coeffs().iter().map(|c| c.to_integer()).collect()
}

/// Minimal polynomial of `2cos(2π/n)` over the rationals.
pub fn real_cyclotomic_minpoly(n: u64) -> UPoly {
    match n {
        1 => return UPoly::from_i64(&[-2, 1]),
        2 => return UPoly::from_i64(&[2, 1]),
        _ => {}
    }
    // Φ_n is palindromic of degree 2d; write x^{-d} Φ_n(x) as a polynomial in y = x + 1/x.
    let phi = cyclotomic_poly(n);
    let d = (phi.len() - 1) / 2;
    // Working copy of the symmetric coefficients c_k for x^k + x^{-k}, k = 0..d.
    let mut sym: Vec<BigInt> = (0..=d).map(|k| phi[d + k].clone()).collect();
    let mut out = vec![BigInt::zero(); d + 1];
    // x^k + x^{-k} = y^k - (lower symmetric terms); peel from the top.
    for k in (1..=d).rev() {
        let c = sym[k].clone();
        if c.is_zero() {
            continue;
        }
        out[k] += &c;
        // y^k = sum_j binom(k, j) x^{k-2j}; subtract its lower parts.
        let mut binom = BigInt::one();
        for j in 1..=k / 2 {
            binom = binom * BigInt::from(k - j + 1) / BigInt::from(j);
            let e = k - 2 * j;
            if e == 0 {
                sym[0] -= &c * &binom;
            } else {
                sym[e] -= &c * &binom;
            }
        }
    }
    out[0] += &sym[0];
    UPoly::from_bigints(&out)
}

/// `Q(2cos(2π/n))` with the generator pinned to `2cos(2π/n)`.
pub fn real_cyclotomic_field(n: u64) -> Arc<NumberField> {
    let f = real_cyclotomic_minpoly(n);
    let target = 2.0 * (2.0 * PI / n as f64).cos();
    let gap = (1..=n / 2)
        .filter(|&j| j.gcd(&n) == 1 && j != 1)
        .map(|j| (2.0 * (2.0 * PI * j as f64 / n as f64).cos() - target).abs())
        .fold(1.0f64, f64::min);
    let delta = gap / 3.0;
    let lo = BigRational::from_f64(target - delta).unwrap();
    let hi = BigRational::from_f64(target + delta).unwrap();
    NumberField::named(f, (lo, hi), "c").expect("2cos(2π/n) isolates in its real cyclotomic field")
}

/// `2cos(2πj/n)` expressed in `Q(2cos(2π/n))` via the Chebyshev recurrence.
pub fn two_cos(field: &Arc<NumberField>, n: u64, j: i64) -> NfElem {
    let j = j.rem_euclid(n as i64) as u64;
    let j = j.min(n - j);
    let g = NfElem::generator(field);
    let mut prev = NfElem::from_int(2);
    if j == 0 {
        return prev;
    }
    let mut cur = g.clone();
    for _ in 1..j {
        let next = &(&g * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}
