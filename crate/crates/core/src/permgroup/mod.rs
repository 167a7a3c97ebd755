//! Permutation groups: composition, orbits, stabilizer chains, induced
//! actions, transitivity degrees, block systems and subgroup enumeration.
//!
//! Points are 0-indexed internally; cycle notation at the text boundary is
//! 1-indexed.

mod action;
mod blocks;
mod chain;
mod genfile;
mod group;
mod perm;
mod subgroups;
mod transitivity;

pub use action::{induced_action, kernel_of_action, restrict, InducedAction};
pub use blocks::{find_block_systems, is_primitive, BlockSystem};
pub use chain::StabilizerChain;
pub use genfile::{parse_generator_file, write_generator_file};
pub use group::PermutationGroup;
pub use perm::Permutation;
pub use subgroups::{enumerate_subgroups, DEFAULT_SUBGROUP_CAP};
pub use transitivity::{
    transitivity_degree_tests, transitivity_degree_tests_capped, TransitivityDegrees, Tristate, DEFAULT_TRIPLE_CAP,
};
