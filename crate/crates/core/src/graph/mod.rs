//! Graph kernel: adjacency storage, distance partitions, girth, arcs, line
//! graphs, complements and the graph6 / edge-list codecs.

mod arcs;
mod distance;
pub mod edgelist;
pub mod graph6;
mod simple;

pub use arcs::{count_s_arcs, enumerate_2_geodesics, enumerate_s_arcs};
pub use distance::{
    diameter, distance_partition, girth, intersection_numbers, DistancePartition, IntersectionNumbers,
    IntersectionTriple,
};
pub use simple::Graph;
