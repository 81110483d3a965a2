//! Exact fixation bounds and verified distinguishing colorings for Kneser
//! graphs `K(n, r)` and for the edges of complete graphs.

pub mod bounds;
pub mod construct;
pub mod distinguish;
pub mod error;
pub mod kneser;
pub mod perm;
pub mod scalar;
pub mod subsets;

pub use error::{Error, Result};
pub use scalar::Probability;

/// Probabilities computed without rounding.
pub type ExactProbability = num_rational::BigRational;

/// Probabilities in floating point, for sampling and display.
pub type ApproxProbability = f64;
