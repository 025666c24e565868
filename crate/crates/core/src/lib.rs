//! Exact Kronecker coefficients of symmetric groups, with closed formulas
//! and positivity certificates for tensor squares of square shapes.

pub mod certify;
pub mod characters;
pub mod error;
pub mod kronecker;
pub mod lr;
pub mod partition;
pub mod report;

pub use error::{KronError, Result};
pub use partition::{BoxFrame, Partition};
