//! Buchberger's algorithm in graded reverse lexicographic order.

use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::error::Result;
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Field;
use num_traits::Zero;

/// Scales so the leading coefficient is one.
pub fn make_monic<T: Field>(p: &Polynomial<T>) -> Polynomial<T> {
    match p.leading_term() {
        Some((_, c)) => p.scale(&c.inv()),
        None => p.clone(),
    }
}

/// Full reduction of `p` modulo `basis` (every term, not only the leading one).
///
/// `basis` elements must be monic.
pub fn reduce<T: Field>(p: &Polynomial<T>, basis: &[Polynomial<T>]) -> Polynomial<T> {
    let mut rest = p.clone();
    let mut rem: Vec<(Monomial, T)> = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        let hit = basis.iter().find_map(|g| {
            let lm = g.leading_monomial()?;
            lm.quotient_of(&m).map(|q| (g, q))
        });
        match hit {
            Some((g, q)) => rest = rest.add_scaled(g, &q, &(-c)),
            None => {
                rest.pop_leading();
                rem.push((m, c));
            }
        }
    }
    Polynomial::from_sorted_terms(rem)
}

fn s_polynomial<T: Field>(f: &Polynomial<T>, g: &Polynomial<T>) -> Polynomial<T> {
    let (mf, _) = f.leading_term().unwrap();
    let (mg, _) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let uf = mf.quotient_of(&l).unwrap();
    let ug = mg.quotient_of(&l).unwrap();
    f.mul_term(&uf, &T::one()).add_scaled(g, &ug, &(-T::one()))
}

/// Pending critical pair, ordered by the lcm of the leading monomials (normal selection).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted by leading monomial.
pub fn groebner_basis<T: Field>(gens: &[Polynomial<T>], budget: &Budget) -> Result<Vec<Polynomial<T>>> {
    let mut basis: Vec<Polynomial<T>> = Vec::new();
    let mut pending: BTreeSet<Pair> = BTreeSet::new();

    let add = |h: Polynomial<T>, basis: &mut Vec<Polynomial<T>>, pending: &mut BTreeSet<Pair>| {
        let h = make_monic(&h);
        let hm = h.leading_monomial().unwrap();
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let gm = g.leading_monomial().unwrap();
            pending.insert(Pair { lcm: gm.lcm(&hm), i, j: k });
        }
        basis.push(h);
    };

    for g in gens {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            add(r, &mut basis, &mut pending);
        }
    }

    while let Some(pair) = pending.pop_first() {
        budget.check("Gröbner basis")?;
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        let (mi, mj) = (fi.leading_monomial().unwrap(), fj.leading_monomial().unwrap());
        if mi.is_coprime(&mj) {
            continue;
        }
        // Chain criterion: some k with LM_k | lcm whose pairs with i and j are already settled.
        let settled = |a: usize, b: usize, pending: &BTreeSet<Pair>| {
            let (a, b) = (a.min(b), a.max(b));
            let l = basis[a].leading_monomial().unwrap().lcm(&basis[b].leading_monomial().unwrap());
            !pending.contains(&Pair { lcm: l, i: a, j: b })
        };
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && settled(pair.i, k, &pending)
                && settled(pair.j, k, &pending)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(fi, fj);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            add(r, &mut basis, &mut pending);
        }
    }

    // Minimalize, then interreduce.
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap()).collect();
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant = (0..basis.len()).any(|j| {
            j != i && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<Polynomial<T>> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        budget.check("Gröbner interreduction")?;
        let lead = Polynomial::from_sorted_terms(g.terms()[..1].to_vec());
        let tail = Polynomial::from_sorted_terms(g.terms()[1..].to_vec());
        let others: Vec<Polynomial<T>> = minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        reduced.push(make_monic(&(&lead + &reduce(&tail, &others))));
    }
    reduced.sort_by_key(|g| g.leading_monomial().unwrap());
    Ok(reduced)
}
