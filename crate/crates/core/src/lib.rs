//! Exact Tutte and multiplicity Tutte polynomials of small matroids, with
//! closed forms for their extreme coefficients.

pub mod commands;
pub mod constructors;
pub mod corpus;
pub mod engines;
pub mod error;
pub mod extreme;
pub mod input;
pub mod matroid;
pub mod mobius;
pub mod multiplicity;
pub mod poly;
pub mod subset;
pub mod tutte_coeffs;

pub use error::{Error, Result};
pub use matroid::Matroid;
pub use multiplicity::MultiplicityMatroid;
pub use poly::{BivarPoly, UniPoly};
pub use subset::{ElementMap, Subset};
