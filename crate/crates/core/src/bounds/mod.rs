//! Exact probability bounds.

mod decimal;
mod dyadic;
mod fixation;
mod kneser;

pub use decimal::{render_decimal, render_ratio, REPORT_DIGITS};
pub use dyadic::{DyadicRational, RENDER_EXPONENT_LIMIT};
pub use fixation::*;
pub use kneser::*;
