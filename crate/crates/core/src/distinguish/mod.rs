//! List assignments, colorings, exhaustive verification and the exact and
//! randomized procedures built on it.

mod conjecture;
mod lists;
mod probability;
mod random;
mod search;
mod verify;

pub use conjecture::*;
pub use lists::*;
pub use probability::*;
pub use random::*;
pub use search::*;
pub use verify::*;
