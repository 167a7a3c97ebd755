use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{diameter, distance_partition, enumerate_2_geodesics, enumerate_s_arcs, Graph};
use crate::permgroup::{
    induced_action, kernel_of_action, restrict, transitivity_degree_tests_capped, Permutation, PermutationGroup,
    Tristate, DEFAULT_TRIPLE_CAP,
};

pub(crate) fn validate_pair(g: &Graph, group: &PermutationGroup) -> Result<()> {
    if g.order() == 0 {
        return Err(Error::EmptyDegree);
    }
    if group.degree() != g.order() {
        return Err(Error::DegreeMismatch { expected: g.order(), found: group.degree() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(index) = group.generators().iter().position(|p| !g.is_automorphism(p)) {
        return Err(Error::NotAutomorphism { index });
    }
    Ok(())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
}

/// Number of orbits of the group generated by `gens` on a set of tuples
/// closed under the action.
pub(crate) fn tuple_orbit_count(tuples: &[Vec<usize>], gens: &[Permutation]) -> usize {
    let index: HashMap<&[usize], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut uf = UnionFind((0..tuples.len()).collect());
    let mut count = tuples.len();
    let mut image = Vec::new();
    for (i, t) in tuples.iter().enumerate() {
        for g in gens {
            image.clear();
            image.extend(t.iter().map(|&x| g.apply(x)));
            let j = index[image.as_slice()];
            let (a, b) = (uf.find(i), uf.find(j));
            if a != b {
                uf.0[a] = b;
                count -= 1;
            }
        }
    }
    count
}

/// Orbit counts of `Gᵤ` on the distance layers `Γ₀(u), Γ₁(u), …`.
pub(crate) fn layer_orbit_counts(g: &Graph, stabilizer: &PermutationGroup, u: usize) -> Result<Vec<usize>> {
    let layers = distance_partition(g, u)?.layers;
    let mut owner = vec![usize::MAX; g.order()];
    for (i, orbit) in stabilizer.orbits().iter().enumerate() {
        for &v in orbit {
            owner[v] = i;
        }
    }
    Ok(layers
        .iter()
        .map(|layer| {
            let mut ids: Vec<usize> = layer.iter().map(|&v| owner[v]).collect();
            ids.sort_unstable();
            ids.dedup();
            ids.len()
        })
        .collect())
}

/// Outcome of an s-distance transitivity test with its orbit evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceTransitivity {
    pub holds: bool,
    pub vertex_transitive: bool,
    /// Orbits of `G₀` on `Γᵢ(0)` for `i ≤ min(s, diameter)`; empty when not vertex-transitive.
    pub layer_orbits: Vec<usize>,
}

pub fn is_s_distance_transitive(g: &Graph, group: &PermutationGroup, s: usize) -> Result<DistanceTransitivity> {
    validate_pair(g, group)?;
    let vertex_transitive = group.is_transitive();
    if !vertex_transitive {
        return Ok(DistanceTransitivity { holds: false, vertex_transitive, layer_orbits: Vec::new() });
    }
    let diam = diameter(g)?;
    let stab = group.point_stabilizer(0)?;
    let mut layer_orbits = layer_orbit_counts(g, &stab, 0)?;
    layer_orbits.truncate(s.min(diam) + 1);
    let holds = s <= diam && layer_orbits.iter().all(|&c| c == 1);
    Ok(DistanceTransitivity { holds, vertex_transitive, layer_orbits })
}

/// Orbits of the group on s-arcs.
pub fn arc_orbit_count(g: &Graph, group: &PermutationGroup, s: usize) -> Result<usize> {
    validate_pair(g, group)?;
    let arcs = enumerate_s_arcs(g, s)?;
    Ok(tuple_orbit_count(&arcs, group.generators()))
}

/// `G₀` restricted to `Γ(0)`.
pub fn local_action(g: &Graph, group: &PermutationGroup) -> Result<PermutationGroup> {
    let stab = group.point_stabilizer(0)?;
    restrict(&stab, g.neighbors(0))
}

/// Transitivity on vertices and on s-arcs. For `s = 2` the answer is
/// cross-checked against 2-transitivity of `G₀` on `Γ(0)`.
pub fn is_s_arc_transitive(g: &Graph, group: &PermutationGroup, s: usize) -> Result<bool> {
    if !(1..=3).contains(&s) {
        return Err(Error::InvalidParameter(format!("s must be 1, 2 or 3, got {s}")));
    }
    validate_pair(g, group)?;
    let arcs = enumerate_s_arcs(g, s)?;
    let direct = group.is_transitive() && !arcs.is_empty() && tuple_orbit_count(&arcs, group.generators()) == 1;
    if s == 2 && g.degree(0) > 0 {
        let local = local_action(g, group)?;
        let dual = group.is_transitive() && g.degree(0) >= 2 && local.is_transitive() && {
            let t = transitivity_degree_tests_capped(&local, 0);
            t.two_transitive
        };
        if dual != direct {
            return Err(Error::Inconsistent(format!(
                "2-arc orbit test says {direct}, local 2-transitivity says {dual}"
            )));
        }
    }
    Ok(direct)
}

/// Transitivity on arcs and on 2-geodesics. Complete graphs have no
/// 2-geodesics and are rejected.
pub fn is_2_geodesic_transitive(g: &Graph, group: &PermutationGroup) -> Result<bool> {
    validate_pair(g, group)?;
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    let geodesics = enumerate_2_geodesics(g);
    Ok(is_s_arc_transitive(g, group, 1)? && tuple_orbit_count(&geodesics, group.generators()) == 1)
}

/// Sub-results of the grid-complement group condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition31 {
    pub holds: bool,
    /// Order of the group induced on the two rows.
    pub row_image_order: u128,
    /// Order of the subgroup fixing both rows.
    pub kernel_order: u128,
    pub kernel_two_transitive: bool,
    pub kernel_three_transitive: Tristate,
}

/// Rows of grid_complement(m): `{0..m}` and `{m..2m}`.
pub fn grid_rows(m: usize) -> Vec<Vec<usize>> {
    vec![(0..m).collect(), (m..2 * m).collect()]
}

/// Checks that the group swaps the rows and that the row-fixing subgroup,
/// restricted to one row, is 2-transitive but not 3-transitive. The group
/// must preserve both the row and the column partitions.
pub fn check_condition_3_1(group: &PermutationGroup, m: usize) -> Result<Condition31> {
    if group.degree() != 2 * m {
        return Err(Error::DegreeMismatch { expected: 2 * m, found: group.degree() });
    }
    let rows = grid_rows(m);
    let columns: Vec<Vec<usize>> = (0..m).map(|j| vec![j, m + j]).collect();
    let row_image = induced_action(group, &rows)?.image;
    induced_action(group, &columns)?;
    let kernel = kernel_of_action(group, &rows)?;
    let on_row = restrict(&kernel, &rows[0])?;
    let t = transitivity_degree_tests_capped(&on_row, DEFAULT_TRIPLE_CAP);
    let holds = row_image.order() == 2 && t.two_transitive && t.three_transitive == Tristate::No;
    Ok(Condition31 {
        holds,
        row_image_order: row_image.order(),
        kernel_order: kernel.order(),
        kernel_two_transitive: t.two_transitive,
        kernel_three_transitive: t.three_transitive,
    })
}
