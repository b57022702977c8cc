//! Exact arithmetic: rationals, Laurent polynomials and small determinants.

mod matrix;
mod monomial;
mod poly;
mod scalar;
mod var;

pub use matrix::{PolyMatrix, DEFAULT_DET_CAP};
pub use monomial::Monomial;
pub use poly::LaurentPoly;
pub use scalar::{binomial, factorial, ParseScalarError, Scalar};
pub use var::{Family, ParseVarError, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix dimension {dim} exceeds the determinant cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("rows of unequal length")]
    RaggedRows,
    #[error("no value assigned to {0}")]
    MissingAssignment(Var),
    #[error("zero assigned to Laurent variable {0}")]
    ZeroAssignedToLaurentVariable(Var),
    #[error("non-integer coefficient {0}")]
    NonIntegerCoefficient(String),
    #[error("parse error: {0}")]
    Parse(String),
}
