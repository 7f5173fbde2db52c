//! Distance-2 colorings of toroidal grids.
//!
//! Construct, verify and certify proper colorings of the square of
//! `C_m x C_n`: an embedded catalogue of periodic patterns, the block
//! constructions that combine them, and exact branch-and-bound solvers for
//! the independence and chromatic numbers of small instances.

pub mod catalogue;
pub mod cli;
pub mod construct;
pub mod error;
pub mod format;
pub mod graph;
pub mod pattern;
pub mod semigroup;
pub mod solver;
pub mod survey;

pub use construct::{construct, table1_value, ConstructionResult};
pub use error::{Error, Result};
pub use graph::{color_count, square_neighbors, torus_distance, verify_coloring, Coloring, Coord, TorusDims, Violation};
pub use pattern::Pattern;
