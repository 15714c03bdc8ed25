//! Matrix factorizations and their homotopy category.

mod context;
mod factorization;
mod hom;
mod linalg;
mod morphism;

pub use context::{eigenvalue, is_isomorphism, ArTriangle, MfContext, RadDims, Radical};
pub use factorization::{mf_verify, CokerPresentation, CokerVariant, MatrixFactorization};
pub use hom::HomSpace;
pub use morphism::{compose, Homotopy, Morphism};

#[cfg(test)]
mod tests;
