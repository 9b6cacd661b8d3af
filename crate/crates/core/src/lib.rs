//! Exact verification engine for dynamical-symmetry algebras.

pub mod check;
pub mod error;
pub mod fock;
pub mod hydrogen;
pub mod jordan;
pub mod landau;
pub mod lie;
pub mod linalg;
pub mod matrix;
pub mod scalar;
pub mod spinor;
pub mod suite;
pub mod tkk;
pub mod transforms;
pub mod weyl;

pub use error::{Error, Result};
pub use lie::{GeneratorTable, IndexSet, LieElement, Rule};
pub use matrix::ExactMatrix;
pub use scalar::{Rational, Scalar};
pub use weyl::{Signature, WeylElement};
