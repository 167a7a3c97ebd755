//! Transitivity verdicts for (graph, group) pairs, the grid-complement group
//! condition, table matching, and the claim verifiers.

mod corpus;
mod predicates;
mod report;
mod verify;

pub use corpus::{classified_corpus, corpus, near_misses, table1_instances, CorpusEntry};
pub use predicates::{
    arc_orbit_count, check_condition_3_1, grid_rows, is_2_geodesic_transitive, is_s_arc_transitive,
    is_s_distance_transitive, local_action, Condition31, DistanceTransitivity,
};
pub use report::{
    classify_pair, classify_pair_with_budget, match_table1, Budget, NeighborhoodAction, Shortcut, Table1Match,
    Table1Row, TransitivityReport,
};
pub use verify::{
    check_kantor_conditions, claim_description, edge_count_identity_holds, octahedron_subgroup_table, verify_all,
    verify_paper, Evidence, PaperVerdict, Status, CLAIMS,
};
