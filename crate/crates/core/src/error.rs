use alloc::string::String;

use crate::report::Witness;

/// Failures of preconditions or of internal consistency checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("algebra is not anticommutative: {0}")]
    NotAnticommutative(Witness),
    #[error("algebra is not nearly associative: {0}")]
    NotNearlyAssociative(Witness),
    #[error("algebra is not a nearly associative L-algebra: {0}")]
    NotNAL(Witness),
    #[error("form is not quadratic: {reason}")]
    NotQuadratic { reason: String },
    #[error("map does not intertwine the bimodule actions: {0}")]
    NotIntertwining(Witness),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("internal contradiction at step `{step}`: {detail}")]
    InternalContradiction { step: String, detail: String },
    #[error("{half} of the bialgebra candidate is not a nearly associative L-algebra: {witness}")]
    HalvesNotNAL { half: Half, witness: Witness },
    #[error("tensor is not skew-symmetric: coefficient of e{}⊗e{} is not minus that of e{}⊗e{}", .i + 1, .j + 1, .j + 1, .i + 1)]
    SkewRequired { i: usize, j: usize },
    #[error("cross-check `{name}` disagrees: {detail}")]
    CrossCheck { name: String, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Half {
    Algebra,
    DualAlgebra,
}

impl core::fmt::Display for Half {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Half::Algebra => "the algebra",
            Half::DualAlgebra => "the dual algebra",
        })
    }
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
