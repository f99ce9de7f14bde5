//! Exact rational verification of multiple commutation relations, Bethe
//! vector representations and domain-wall partition function identities for
//! the `gl(2|1)`-graded monodromy matrix of an inhomogeneous fundamental chain.
//!
//! Every routine is generic over a [`Scalar`] field; [`Rat`] (arbitrary
//! precision rationals) is the instantiation used by the CLI and the tests.

pub mod check;
pub mod dwpf;
pub mod error;
pub mod graded;
pub mod harness;
pub mod identities;
pub mod linalg;
pub mod monodromy;
pub mod scalar;
pub mod varsets;

pub use check::CheckReport;
pub use error::{Error, Result};
pub use graded::{GMatrix, Parity};
pub use scalar::{Coupling, RationalFn, Scalar};
pub use varsets::{Split, VarSet};

/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;
/// Sparse exact matrix over [`Rat`].
pub type Matrix = GMatrix<Rat>;
