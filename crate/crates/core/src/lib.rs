pub mod budget;
pub mod coinvariant;
pub mod coxeter;
pub mod dihedral;
pub mod error;
pub mod groebner;
pub mod lefschetz;
pub mod linalg;
pub mod numfield;
pub mod parabolic;
pub mod poly;
pub mod sampling;
pub mod scalar;

pub use budget::Budget;
pub use coinvariant::CoinvariantRing;
pub use coxeter::{CoxeterType, Family, GroupElementSet, RootSystem};
pub use error::{Error, Result};
pub use linalg::DenseMatrix;
pub use numfield::{NfElem, NumberField, UPoly};
pub use poly::{Monomial, Polynomial};
pub use scalar::{ExactDiv, Field, Ring};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// Polynomials over the coefficient field of a root system.
pub type Poly = Polynomial<NfElem>;

/// Polynomials over the rationals.
pub type QPoly = Polynomial<Rational>;

/// Matrices over the coefficient field.
pub type Matrix = DenseMatrix<NfElem>;
