//! Permutation-group and graph machinery for deciding 2-distance, 2-arc and
//! 2-geodesic transitivity of concrete (graph, group) pairs, and for checking
//! the classification of 2-distance transitive but not 2-arc transitive
//! graphs of small valency.

mod arith;
pub mod autgroup;
pub mod classify;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod permgroup;

pub use error::{Error, Result};
pub use graph::Graph;
pub use permgroup::{Permutation, PermutationGroup, Tristate};
