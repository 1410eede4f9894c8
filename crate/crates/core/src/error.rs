use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not irreducible over the rationals: {0}")]
    NotIrreducible(String),
    #[error("interval does not isolate exactly one real root: {0}")]
    NotIsolating(String),
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different number fields")]
    FieldMismatch,
    #[error("unsupported Coxeter type: {0}")]
    UnsupportedType(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("Hilbert function {got:?} does not match Poincaré polynomial {expected:?}")]
    HilbertMismatch { expected: Vec<usize>, got: Vec<usize> },
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("level {level} out of range {min}..={max}")]
    LevelOutOfRange { level: usize, min: usize, max: usize },
    #[error("Hilbert function shape {0:?} is not supported by the narrow test")]
    ShapeUnsupported(Vec<usize>),
    #[error("element is not invariant under the parabolic subgroup: {0}")]
    NotInvariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
