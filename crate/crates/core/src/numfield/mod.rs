//! Exact arithmetic in real number fields `Q[x]/(f)`.
//!
//! A field fixes one real root of `f` through an isolating interval, so every
//! element has a definite sign. Signs are decided by interval evaluation with
//! bisection, never by floating point.

pub mod cyclotomic;
mod factor;
mod field;
mod upoly;

pub use cyclotomic::{real_cyclotomic_field, real_cyclotomic_minpoly, two_cos};
pub use factor::{irreducibility, Irreducibility};
pub use field::{ArithOp, NfElem, NumberField};
pub use upoly::UPoly;

use std::sync::Arc;

use crate::scalar::rat;

/// `Q(τ)` with `τ` the golden ratio, root of `x^2 - x - 1` in `(1, 2)`.
pub fn golden_field() -> Arc<NumberField> {
    NumberField::named(UPoly::from_i64(&[-1, -1, 1]), (rat(1), rat(2)), "t").expect("golden ratio field")
}
