//! Coefficient traits shared by polynomials, matrices and the Gröbner engine.
//!
//! Everything downstream is written against [`Ring`], [`ExactDiv`] and
//! [`Field`]. Concrete instances: [`Rational`](crate::Rational),
//! [`NfElem`](crate::NfElem), [`Polynomial`](crate::Polynomial) (ring only),
//! and the machine floats (approximate, used for numeric cross-checks).

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn mul_ref(&self, other: &Self) -> Self {
        let mut t = self.clone();
        t *= other;
        t
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut t = self.clone();
        t += other;
        t
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut t = self.clone();
        t -= other;
        t
    }

    /// Embeds an integer.
    fn from_i64(n: i64) -> Self;

    fn power(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// A ring in which `a / b` can be decided and computed whenever `b | a`.
pub trait ExactDiv: Ring {
    /// Returns `Some(q)` with `q * divisor == self`, or `None` if no such `q`.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

/// A field. `inv` panics on zero.
pub trait Field: ExactDiv {
    fn inv(&self) -> Self;

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.inv())
    }

    /// Embeds a rational number.
    fn from_rational(q: &BigRational) -> Self;
}

impl Ring for BigRational {
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
        BigRational::from_integer(BigInt::from(n))
    }
}

impl ExactDiv for BigRational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

macro_rules! impl_float_field {
    ($f:ty) => {
        impl Ring for $f {
            fn from_i64(n: i64) -> Self {
                n as $f
            }
        }

        impl ExactDiv for $f {
            fn div_exact(&self, divisor: &Self) -> Option<Self> {
                if *divisor == 0.0 {
                    None
                } else {
                    Some(self / divisor)
                }
            }
        }

        impl Field for $f {
            fn inv(&self) -> Self {
                1.0 / self
            }
            fn from_rational(q: &BigRational) -> Self {
                rational_to_f64(q) as $f
            }
        }
    };
}

impl_float_field!(f32);
impl_float_field!(f64);

/// Best-effort conversion for diagnostics and numeric cross-checks.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Huge numerator or denominator: shift both down first.
            let nb = q.numer().bits() as i64;
            let db = q.denom().bits() as i64;
            let shift = (nb.max(db) - 900).max(0) as usize;
            let n = (q.numer().abs() >> shift).to_f64().unwrap_or(f64::MAX);
            let d = (q.denom() >> shift).to_f64().unwrap_or(f64::MAX);
            let v = if d == 0.0 { f64::INFINITY } else { n / d };
            if q.is_negative() {
                -v
            } else {
                v
            }
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
