use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest group order accepted for a (possibly reducible) type.
pub const MAX_GROUP_ORDER: u64 = 10_000;

/// An irreducible finite Coxeter type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A(usize),
    B(usize),
    D(usize),
    I2(u32),
    H3,
}

impl Family {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            Family::A(n) => (1..=4).contains(&n),
            Family::B(n) => (2..=3).contains(&n),
            Family::D(n) => (2..=4).contains(&n),
            Family::I2(m) => (3..=30).contains(&m),
            Family::H3 => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnsupportedType(self.to_string()))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Family::A(n) | Family::B(n) | Family::D(n) => n,
            Family::I2(_) => 2,
            Family::H3 => 3,
        }
    }

    /// Number of coordinates of the standard realization (`A_n` uses `n + 1`).
    pub fn ambient_dim(self) -> usize {
        match self {
            Family::A(n) => n + 1,
            f => f.rank(),
        }
    }

    /// Degrees of the fundamental invariants of the reflection representation.
    pub fn degrees(self) -> Vec<u32> {
        match self {
            Family::A(n) => (2..=n as u32 + 1).collect(),
            Family::B(n) => (1..=n as u32).map(|k| 2 * k).collect(),
            Family::D(n) => {
                let mut d: Vec<u32> = (1..n as u32).map(|k| 2 * k).collect();
                d.push(n as u32);
                d.sort_unstable();
                d
            }
            Family::I2(m) => vec![2, m],
            Family::H3 => vec![2, 6, 10],
        }
    }

    pub fn order(self) -> u64 {
        self.degrees().iter().map(|&d| d as u64).product()
    }

    pub fn reflection_count(self) -> usize {
        self.degrees().iter().map(|&d| d as usize - 1).sum()
    }

    /// True for Weyl groups (crystallographic types).
    pub fn is_crystallographic(self) -> bool {
        match self {
            Family::I2(m) => matches!(m, 3 | 4 | 6),
            Family::H3 => false,
            _ => true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::D(n) => write!(f, "D{n}"),
            Family::I2(m) => write!(f, "I2({m})"),
            Family::H3 => write!(f, "H3"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts `A2`, `B3`, `D4`, `I2:5`, `I2(5)`, `G2`, `H3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unsupported = || Error::UnsupportedType(s.to_string());
        let upper = s.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2") {
            let m = rest.trim_start_matches([':', '(']).trim_end_matches(')');
            let m: u32 = m.parse().map_err(|_| Error::Parse(format!("bad dihedral type {s:?}")))?;
            return Family::I2(m).validate();
        }
        let (letter, num) = upper.split_at(1.min(upper.len()));
        let n: usize = num.parse().map_err(|_| if letter.is_empty() { Error::Parse("empty type".into()) } else { unsupported() })?;
        match letter {
            "A" => Family::A(n).validate(),
            "B" | "C" => Family::B(n).validate(),
            "D" => Family::D(n).validate(),
            "G" if n == 2 => Ok(Family::I2(6)),
            "H" if n == 3 => Ok(Family::H3),
            "E" | "F" | "G" | "H" | "I" => Err(unsupported()),
            _ => Err(Error::Parse(format!("unknown type {s:?}"))),
        }
    }
}

/// A finite Coxeter type: a product of irreducible families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    components: Vec<Family>,
}

impl CoxeterType {
    pub fn new(components: Vec<Family>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Parse("empty Coxeter type".into()));
        }
        for c in &components {
            c.validate()?;
        }
        let t = CoxeterType { components };
        if t.order() > MAX_GROUP_ORDER {
            return Err(Error::BudgetExceeded(format!("group order {} of {t} exceeds {MAX_GROUP_ORDER}", t.order())));
        }
        Ok(t)
    }

    pub fn irreducible(f: Family) -> Result<Self> {
        Self::new(vec![f])
    }

    pub fn components(&self) -> &[Family] {
        &self.components
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    pub fn ambient_dim(&self) -> usize {
        self.components.iter().map(|c| c.ambient_dim()).sum()
    }

    /// Degrees of all factors, concatenated in component order.
    pub fn degrees(&self) -> Vec<u32> {
        self.components.iter().flat_map(|c| c.degrees()).collect()
    }

    pub fn order(&self) -> u64 {
        self.components.iter().map(|c| c.order()).product()
    }

    pub fn reflection_count(&self) -> usize {
        self.components.iter().map(|c| c.reflection_count()).sum()
    }

    pub fn is_crystallographic(&self) -> bool {
        self.components.iter().all(|c| c.is_crystallographic())
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Components separated by `x` or `*`, e.g. `A1xI2(5)`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(['x', 'X', '*']).filter(|p| !p.trim().is_empty()).collect();
        if parts.is_empty() {
            return Err(Error::Parse("empty Coxeter type".into()));
        }
        Self::new(parts.into_iter().map(str::parse).collect::<Result<Vec<_>>>()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("A2".parse::<Family>().unwrap(), Family::A(2));
        assert_eq!("I2:5".parse::<Family>().unwrap(), Family::I2(5));
        assert_eq!("I2(7)".parse::<Family>().unwrap(), Family::I2(7));
        assert_eq!("G2".parse::<Family>().unwrap(), Family::I2(6));
        assert_eq!("h3".parse::<Family>().unwrap(), Family::H3);
        assert!(matches!("H4".parse::<Family>(), Err(Error::UnsupportedType(_))));
        assert!(matches!("E6".parse::<Family>(), Err(Error::UnsupportedType(_))));
        assert!(matches!("I2(31)".parse::<Family>(), Err(Error::UnsupportedType(_))));
        let t: CoxeterType = "A1xI2(5)".parse().unwrap();
        assert_eq!(t.components(), &[Family::A(1), Family::I2(5)]);
        assert_eq!(t.to_string(), "A1xI2(5)");
    }

    #[test]
    fn group_orders_and_reflections() {
        let cases = [(Family::A(3), 24, 6), (Family::B(3), 48, 9), (Family::D(4), 192, 12), (Family::I2(7), 14, 7), (Family::H3, 120, 15)];
        for (f, order, refl) in cases {
            assert_eq!(f.order(), order, "{f}");
            assert_eq!(f.reflection_count(), refl, "{f}");
        }
        assert!(matches!(CoxeterType::new(vec![Family::H3, Family::H3]), Err(Error::BudgetExceeded(_))));
    }
}
