//! Exact verification toolkit for nearly associative algebras, their
//! representations, coalgebras, bialgebras and r-matrices.
//!
//! All arithmetic is over arbitrary-precision rationals. Indices are 0-based
//! in the API and rendered 1-based (`e1, e2, ...`).

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bimodule;
pub mod coalgebra;
pub mod coboundary;
pub mod double;
pub mod error;
pub mod fixtures;
pub mod identity;
pub mod linalg;
pub mod quadratic;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use algebra::Algebra;
pub use bimodule::Bimodule;
pub use coalgebra::Comultiplication;
pub use double::{BialgebraCandidate, DoubleAlgebra};
pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace, Vector};
pub use quadratic::{BilinearForm, Intertwiner};
pub use report::{CheckReport, Witness};
pub use scalar::Scalar;
pub use tensor::{Tensor2, Tensor3};
