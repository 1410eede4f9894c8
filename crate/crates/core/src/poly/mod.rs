//! Sparse multivariate polynomials, the group action on them, and invariant systems.

mod monomial;
mod polynomial;

pub mod action;
pub mod invariants;

pub use action::{act, jacobian_matrix, jacobian_nonzero, reynolds};
pub use invariants::{fundamental_invariants, InvariantSystem};
pub use monomial::{Monomial, MAX_VARS};
pub use polynomial::Polynomial;
