//! Coefficient fields, polynomials, and dense matrices over both.

pub mod field;
pub mod kmatrix;
pub mod monomial;
pub mod poly;
pub mod polymatrix;
pub mod ring;

pub use field::{Field, PrimeField, Rationals};
pub use kmatrix::KMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Poly;
pub use polymatrix::PolyMatrix;
pub use ring::PolyRing;
