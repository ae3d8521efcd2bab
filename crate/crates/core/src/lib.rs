//! Constant-weight single-error-correcting codes and N-free families in the
//! Boolean lattice.
//!
//! The crate builds codes with minimum Hamming distance 4 (Graham–Sloane
//! residue classes, exact branch-and-bound maxima, Johnson upper bounds),
//! lifts them to set families with no weak N subposet via a pivot split, and
//! verifies the poset-freeness and bound claims at desk scale.

pub mod codes;
pub mod construct;
pub mod error;
pub mod exec;
pub mod family;
pub mod poset;
pub mod report;
pub mod solver;
pub mod subset;
pub mod textio;

pub use codes::{complement_code, graham_sloane, johnson_upper, ConstantWeightCode};
pub use error::{Error, Result};
pub use exec::ExecMode;
pub use family::SetFamily;
pub use solver::{exact_max_code, Budget, SolveOutcome, SolveStatus};
pub use subset::SubsetWord;
