//! Affine Hecke algebra of GL_m, its polynomial representation, and the
//! equivariant K-theory of the subregular Springer fiber, with exact arithmetic.

pub mod check;
pub mod cli;
pub mod error;
pub mod rings;
mod syntax;
pub mod weyl;
pub mod hecke;
pub mod polyrep;
pub mod springer;
pub mod theta;
pub mod expr;
pub mod verify;

pub use error::{catch, install_quiet_hook, Error, Result};
