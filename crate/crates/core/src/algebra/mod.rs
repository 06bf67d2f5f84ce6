//! Exact scalars, sparse multivariate and dense univariate polynomials.

pub mod factorial;
pub mod multipoly;
pub mod scalar;
pub mod unipoly;

pub use factorial::{binomial, factorial, factorial_q};
pub use multipoly::{ExponentVector, MultiPoly, PowerCache};
pub use scalar::GaussianRational;
pub use unipoly::UniPoly;
