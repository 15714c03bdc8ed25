//! Exact computations in homotopy categories of matrix factorizations over
//! simple surface singularities.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod mf;
pub mod quiver;

pub use error::{MfError, Result};
