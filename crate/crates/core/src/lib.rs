pub mod algebra;
pub mod bridge;
pub mod cli;
pub mod error;
pub mod expr;
pub mod functional;
pub mod inversion;
pub mod linalg;
pub mod records;
pub mod two_monomials;

pub use algebra::{ExponentVector, GaussianRational, MultiPoly, UniPoly};
pub use error::{Error, ParseError, Result};
