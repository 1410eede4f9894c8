use std::cmp::Ordering;
use std::fmt;

/// Maximum number of variables a [`Monomial`] can carry.
pub const MAX_VARS: usize = 8;

/// An exponent vector, ordered by graded reverse lexicographic order with `x1 > x2 > ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::default();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    /// Panics if more than [`MAX_VARS`] exponents are given.
    pub fn from_exps(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::default();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.deg = exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// One past the highest variable index that occurs.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = Self::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m.deg = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// All monomials of total degree `d` in `nvars` variables, descending.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u16; MAX_VARS];
        fill(nvars, 0, d, &mut cur, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

fn fill(nvars: usize, i: usize, left: u32, cur: &mut [u16; MAX_VARS], out: &mut Vec<Monomial>) {
    if nvars == 0 {
        if left == 0 {
            out.push(Monomial::one());
        }
        return;
    }
    if i == nvars - 1 {
        cur[i] = left as u16;
        out.push(Monomial::from_exps(&cur[..nvars]));
        cur[i] = 0;
        return;
    }
    for e in 0..=left {
        cur[i] = e as u16;
        fill(nvars, i + 1, left - e, cur, out);
    }
    cur[i] = 0;
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        // Equal degree: the one with the smaller exponent in the last differing variable is larger.
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    /// Formats with the given variable names (`x1, x2, ...` when `names` is too short).
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = names.get(i).map_or_else(|| format!("x{}", i + 1), |s| s.to_string());
            parts.push(if e == 1 { name } else { format!("{name}^{e}") });
        }
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_matches_textbook_order() {
        // In three variables, degree 2: x1^2 > x1x2 > x2^2 > x1x3 > x2x3 > x3^2.
        let got = Monomial::all_of_degree(3, 2);
        let want: Vec<Monomial> =
            [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]].iter().map(|e| Monomial::from_exps(e)).collect();
        assert_eq!(got, want);
        assert!(Monomial::from_exps(&[0, 0, 3]) > Monomial::from_exps(&[2, 0, 0]));
    }

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exps(&[1, 2, 0]);
        let b = Monomial::from_exps(&[2, 2, 1]);
        assert_eq!(a.quotient_of(&b), Some(Monomial::from_exps(&[1, 0, 1])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&Monomial::from_exps(&[0, 3, 1])), Monomial::from_exps(&[1, 3, 1]));
        assert_eq!(Monomial::all_of_degree(3, 4).len(), 15);
    }
}
