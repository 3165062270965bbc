//! Domination, coloring and structure tools for graphs where the domination
//! number, chromatic number and dominator chromatic number coincide.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod search;
pub mod structure;

pub use error::{Error, Result};
pub use graph::Graph;
