//! Census engine for hyperelliptic Lefschetz fibrations over the sphere:
//! enumerates singular-fiber type vectors, computes their invariants, and
//! excludes candidates with a citable rule engine.

pub mod adjunction;
pub mod cli;
pub mod enumerator;
pub mod error;
pub mod exec;
pub mod invariants;
pub mod obstruction;
pub mod report;
pub mod tables;
pub mod twist_words;

pub use error::{CensusError, Result};
pub use invariants::{Exact, FiberTypeVector, InvariantSet};
