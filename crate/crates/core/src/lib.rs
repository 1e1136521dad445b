//! Generalized Pascal triangles, s-Catalan numbers and the three-Catalan
//! triangle, together with the vertically constrained lattice paths that
//! count them and exact positivity checks (log-convexity, log-concavity).
//!
//! All coefficients are arbitrary-precision [`Natural`]s; nothing here
//! touches floating point except the shape sampler in
//! [`positivity::sample`], whose output is re-checked exactly.

pub mod bisnomial;
pub mod catalan;
pub mod error;
pub mod paths;
pub mod positivity;

pub use error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every coefficient and count.
pub type Natural = num_bigint::BigUint;
