use std::time::Duration;

use coxeter_sle::{CoxeterType, Error, NfElem, Rational, Result};
use num_bigint::BigInt;

use crate::TypeArgs;

pub fn coxeter_type(t: &TypeArgs) -> Result<CoxeterType> {
    let s = t.ty.trim();
    let spec = match (s.to_ascii_uppercase().as_str(), t.rank, t.m) {
        ("I2" | "I", _, Some(m)) => format!("I2:{m}"),
        (letter, Some(n), _) if letter.len() == 1 => format!("{letter}{n}"),
        _ => s.to_string(),
    };
    spec.parse()
}

pub fn rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

pub fn rationals(s: &str) -> Result<Vec<NfElem>> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(|p| rational(p).map(NfElem::from_rational)).collect()
}

pub fn usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| Error::Parse(format!("bad integer {p:?}"))))
        .collect()
}

/// `5`, `3,4,5`, or the inclusive range `5..8`.
pub fn m_values(s: &str) -> Result<Vec<u32>> {
    let bad = || Error::Parse(format!("bad m specification {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: u32 = a.trim().parse().map_err(|_| bad())?;
        let b: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    Ok(usize_list(s)?.into_iter().map(|x| x as u32).collect())
}

/// `90`, `90s`, `30m`, `2h`.
pub fn duration(s: &str) -> Result<Duration> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad duration {s:?}"));
    let (num, unit) = match s.find(|c: char| !c.is_ascii_digit() && c != '.') {
        Some(i) => s.split_at(i),
        None => (s, "s"),
    };
    let x: f64 = num.parse().map_err(|_| bad())?;
    let secs = match unit {
        "s" => x,
        "m" => x * 60.0,
        "h" => x * 3600.0,
        _ => return Err(bad()),
    };
    if !secs.is_finite() || secs < 0.0 {
        return Err(bad());
    }
    Ok(Duration::from_secs_f64(secs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str, rank: Option<usize>, m: Option<u32>) -> String {
        coxeter_type(&TypeArgs { ty: s.into(), rank, m }).unwrap().to_string()
    }

    #[test]
    fn type_forms() {
        assert_eq!(ty("A", Some(2), None), "A2");
        assert_eq!(ty("I2", None, Some(5)), "I2(5)");
        assert_eq!(ty("H3", None, None), "H3");
        assert_eq!(ty("b3", None, None), "B3");
    }

    #[test]
    fn scalars_and_lists() {
        assert_eq!(rationals("1, -2/4").unwrap(), vec![NfElem::from_int(1), NfElem::from_rational(Rational::new((-1).into(), 2.into()))]);
        assert!(rational("1/0").is_err());
        assert_eq!(m_values("5..8").unwrap(), vec![5, 6, 7, 8]);
        assert_eq!(m_values("4").unwrap(), vec![4]);
        assert_eq!(usize_list("").unwrap(), Vec::<usize>::new());
        assert_eq!(duration("30m").unwrap(), Duration::from_secs(1800));
        assert_eq!(duration("12").unwrap(), Duration::from_secs(12));
        assert!(duration("3x").is_err());
    }
}
