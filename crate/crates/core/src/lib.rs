//! Littlewood-Richardson and Kronecker coefficients, symmetric group
//! characters, partition statistics and the q-series built from them.

pub mod characters;
pub mod error;
pub mod kronecker;
pub mod partition;
pub mod qseries;
pub mod statistics;
pub mod tableaux;

pub use characters::{kronecker_oracle, mn_character, CharacterCache, CycleType};
pub use error::{Error, Result};
pub use kronecker::{as_hook, as_two_row, kronecker_lr, UnimodalSequence};
pub use partition::{enumerate_in_rectangle, Partition, Rectangle};
pub use qseries::IntPolynomial;
pub use tableaux::{lr_coefficient, LrCache, SkewShape, SkewTableau};
