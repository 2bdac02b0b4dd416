//! Exact coefficient rings and sparse polynomial arithmetic.

mod monomial;
mod mpoly;
mod param;
mod scalar;
mod sparse;
mod unipoly;

pub use monomial::{monomial_cmp, monomial_count, monomials_of_degree, Exponent};
pub use mpoly::{x_names, xy_names, MPoly};
pub use param::{Param, ParamMonomial, ParamPoly};
pub use scalar::{parse_rational, signum, Scalar};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameter {0} has no assigned value")]
    MissingParameter(String),
    #[error("cannot parse polynomial `{0}`")]
    Parse(String),
}
