//! Edge open packing on proper interval, block and split graphs.
//!
//! An edge open packing is a set of edges no two of which are joined by a
//! third edge. The crate recognizes each supported class, computes the
//! maximum packing with a witness, and ships an exhaustive oracle plus
//! seeded generators for checking the solvers against each other.

pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{EdgeId, EdgeSet, EopSolution, Graph};
