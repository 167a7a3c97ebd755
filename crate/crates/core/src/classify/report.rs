use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::predicates::{check_condition_3_1, layer_orbit_counts, local_action, tuple_orbit_count, validate_pair};
use crate::autgroup::is_isomorphic;
use crate::error::{Error, Result};
use crate::families::{build_graph, Family};
use crate::graph::{
    diameter, distance_partition, enumerate_2_geodesics, enumerate_s_arcs, girth, intersection_numbers, Graph,
    IntersectionNumbers,
};
use crate::permgroup::{
    induced_action, transitivity_degree_tests_capped, PermutationGroup, TransitivityDegrees, DEFAULT_SUBGROUP_CAP,
    DEFAULT_TRIPLE_CAP,
};

/// Caps on exhaustive work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest group order whose subgroups are enumerated.
    pub subgroups: u128,
    /// Largest degree on which ordered triples are enumerated.
    pub triples: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { subgroups: DEFAULT_SUBGROUP_CAP, triples: DEFAULT_TRIPLE_CAP }
    }
}

impl FromStr for Budget {
    type Err = Error;

    /// Parses `subgroups=400,triples=128`; omitted keys keep their defaults.
    fn from_str(s: &str) -> Result<Self> {
        let mut budget = Budget::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("budget entry '{part}' is not key=value")))?;
            let bad = |_| Error::InvalidParameter(format!("budget value '{value}' is not a number"));
            match key.trim() {
                "subgroups" => budget.subgroups = value.trim().parse().map_err(bad)?,
                "triples" => budget.triples = value.trim().parse().map_err(bad)?,
                other => return Err(Error::InvalidParameter(format!("unknown budget key '{other}'"))),
            }
        }
        Ok(budget)
    }
}

/// Rows of the classification table for valency at most 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Table1Row {
    #[serde(rename = "GC(4)")]
    GridComplement4,
    #[serde(rename = "Octahedron")]
    Octahedron,
    #[serde(rename = "H(2,3)")]
    Hamming23,
    #[serde(rename = "Line graph of a cubic (G,3)-arc transitive graph")]
    LineGraph,
    #[serde(rename = "GC(5)")]
    GridComplement5,
    #[serde(rename = "Icosahedron")]
    Icosahedron,
    #[serde(rename = "GC(6)")]
    GridComplement6,
}

impl Table1Row {
    pub const ALL: [Table1Row; 7] = [
        Table1Row::GridComplement4,
        Table1Row::Octahedron,
        Table1Row::Hamming23,
        Table1Row::LineGraph,
        Table1Row::GridComplement5,
        Table1Row::Icosahedron,
        Table1Row::GridComplement6,
    ];

    pub fn valency(self) -> usize {
        match self {
            Table1Row::GridComplement4 => 3,
            Table1Row::Octahedron | Table1Row::Hamming23 | Table1Row::LineGraph | Table1Row::GridComplement5 => 4,
            Table1Row::Icosahedron | Table1Row::GridComplement6 => 5,
        }
    }

    pub fn girth(self) -> usize {
        match self {
            Table1Row::GridComplement4 | Table1Row::GridComplement5 | Table1Row::GridComplement6 => 4,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Table1Row::GridComplement4 => "GC(4)",
            Table1Row::Octahedron => "Octahedron",
            Table1Row::Hamming23 => "H(2,3)",
            Table1Row::LineGraph => "Line graph of a cubic (G,3)-arc transitive graph",
            Table1Row::GridComplement5 => "GC(5)",
            Table1Row::Icosahedron => "Icosahedron",
            Table1Row::GridComplement6 => "GC(6)",
        }
    }

    /// Group condition of the row, as text.
    pub fn group_condition(self) -> &'static str {
        match self {
            Table1Row::GridComplement4 | Table1Row::GridComplement5 | Table1Row::GridComplement6 => {
                "swaps the rows; row-fixing subgroup 2-transitive, not 3-transitive"
            }
            Table1Row::Octahedron => "index 1 or 2 in S2 wr S3, projects onto S3",
            Table1Row::Hamming23 => "index 1 or 2 in S3 wr S2, projects onto S2",
            Table1Row::LineGraph => "|Γ2(u)| = 8, 2-geodesic transitive",
            Table1Row::Icosahedron => "A5 or A5 x C2",
        }
    }

    /// The family instance the row refers to, if it names a single graph.
    pub fn family(self) -> Option<Family> {
        match self {
            Table1Row::GridComplement4 => Some(Family::GridComplement { m: 4 }),
            Table1Row::GridComplement5 => Some(Family::GridComplement { m: 5 }),
            Table1Row::GridComplement6 => Some(Family::GridComplement { m: 6 }),
            Table1Row::Octahedron => Some(Family::Octahedron),
            Table1Row::Hamming23 => Some(Family::Hamming { d: 2, q: 3 }),
            Table1Row::Icosahedron => Some(Family::Icosahedron),
            Table1Row::LineGraph => None,
        }
    }
}

impl fmt::Display for Table1Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of matching a 2-DT, not 2-AT pair of valency at most 5.
/// Serialized as the row name, or `VIOLATION`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Table1Match {
    Row(Table1Row),
    Violation,
}

impl From<Table1Match> for String {
    fn from(m: Table1Match) -> String {
        m.to_string()
    }
}

impl TryFrom<String> for Table1Match {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<Self, String> {
        if s == "VIOLATION" {
            return Ok(Table1Match::Violation);
        }
        Table1Row::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .map(Table1Match::Row)
            .ok_or_else(|| format!("unknown table row `{s}`"))
    }
}

impl fmt::Display for Table1Match {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Table1Match::Row(r) => write!(f, "{r}"),
            Table1Match::Violation => f.write_str("VIOLATION"),
        }
    }
}

/// Action of `G₀` around vertex 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodAction {
    pub stabilizer_order: u128,
    pub orbits_on_neighbors: usize,
    pub orbits_on_second_layer: usize,
    pub orbits_on_ordered_neighbor_pairs: usize,
    pub local_order: u128,
    pub local: TransitivityDegrees,
}

/// A shortcut prediction compared with the direct computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shortcut {
    pub rule: String,
    pub predicted: bool,
    pub computed: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityReport {
    pub vertices: usize,
    pub edges: usize,
    pub group_order: u128,
    pub vertex_transitive: bool,
    /// Index `s − 1` holds the flag for `s = 1, 2`.
    pub s_distance_transitive: [bool; 2],
    pub s_arc_transitive: [bool; 2],
    /// `None` for complete graphs, which have no 2-geodesics.
    pub two_geodesic_transitive: Option<bool>,
    pub girth: Option<usize>,
    pub valency: usize,
    pub diameter: usize,
    pub layer_sizes: Vec<usize>,
    /// Orbit counts of `G₀` on each layer; empty when not vertex-transitive.
    pub layer_orbits: Vec<usize>,
    pub arc_orbits: [usize; 2],
    pub two_geodesic_orbits: usize,
    pub intersection_numbers: IntersectionNumbers,
    pub neighborhood: Option<NeighborhoodAction>,
    pub table1_match: Option<Table1Match>,
    pub lemma_flags: Vec<Shortcut>,
}

impl TransitivityReport {
    pub fn two_dt_not_two_at(&self) -> bool {
        self.s_distance_transitive[1] && !self.s_arc_transitive[1]
    }

    pub fn c2(&self) -> Option<usize> {
        self.intersection_numbers.c(2)
    }

    pub fn second_layer_size(&self) -> usize {
        self.layer_sizes.get(2).copied().unwrap_or(0)
    }
}

pub fn classify_pair(g: &Graph, group: &PermutationGroup) -> Result<TransitivityReport> {
    classify_pair_with_budget(g, group, &Budget::default())
}

pub fn classify_pair_with_budget(g: &Graph, group: &PermutationGroup, budget: &Budget) -> Result<TransitivityReport> {
    validate_pair(g, group)?;
    let valency = g.valency().ok_or(Error::Irregular)?;
    if valency == 0 && g.order() > 1 {
        return Err(Error::Disconnected);
    }
    let diam = diameter(g)?;
    let layer_sizes = distance_partition(g, 0)?.layer_sizes();
    let vertex_transitive = group.is_transitive();
    let gens = group.generators();

    let arcs1 = enumerate_s_arcs(g, 1)?;
    let arcs2 = enumerate_s_arcs(g, 2)?;
    let arc_orbits = [tuple_orbit_count(&arcs1, gens), tuple_orbit_count(&arcs2, gens)];
    let geodesics = enumerate_2_geodesics(g);
    let two_geodesic_orbits = tuple_orbit_count(&geodesics, gens);
    let s_arc_transitive = [
        vertex_transitive && !arcs1.is_empty() && arc_orbits[0] == 1,
        vertex_transitive && !arcs2.is_empty() && arc_orbits[1] == 1,
    ];

    let (layer_orbits, neighborhood) = if vertex_transitive {
        let stab = group.point_stabilizer(0)?;
        let layer_orbits = layer_orbit_counts(g, &stab, 0)?;
        let neighborhood = if valency > 0 {
            let local = local_action(g, group)?;
            let t = transitivity_degree_tests_capped(&local, budget.triples);
            Some(NeighborhoodAction {
                stabilizer_order: stab.order(),
                orbits_on_neighbors: layer_orbits.get(1).copied().unwrap_or(0),
                orbits_on_second_layer: layer_orbits.get(2).copied().unwrap_or(0),
                orbits_on_ordered_neighbor_pairs: t.ordered_pair_orbits,
                local_order: local.order(),
                local: t,
            })
        } else {
            None
        };
        (layer_orbits, neighborhood)
    } else {
        (Vec::new(), None)
    };
    let s_distance_transitive =
        [1usize, 2].map(|s| vertex_transitive && s <= diam && layer_orbits.iter().take(s + 1).all(|&c| c == 1));

    if let Some(nb) = &neighborhood {
        let dual = vertex_transitive && valency >= 2 && nb.local.two_transitive;
        if dual != s_arc_transitive[1] {
            return Err(Error::Inconsistent(format!(
                "2-arc orbit count {} disagrees with local 2-transitivity {}",
                arc_orbits[1], nb.local.two_transitive
            )));
        }
    }

    let two_geodesic_transitive = (!g.is_complete()).then(|| s_arc_transitive[0] && two_geodesic_orbits == 1);
    let girth = girth(g);
    let mut lemma_flags = Vec::new();
    let mut shortcut = |rule: &str, predicted: bool, computed: bool| {
        lemma_flags.push(Shortcut { rule: rule.into(), predicted, computed, agrees: predicted == computed });
    };
    if girth.is_some_and(|x| x >= 5) && s_distance_transitive[1] {
        shortcut("girth >= 5 and 2-distance transitive: 2-arc transitive", true, s_arc_transitive[1]);
    }
    if girth == Some(3) && !g.is_complete() {
        shortcut("girth 3, not complete: not 2-arc transitive", false, s_arc_transitive[1]);
    }
    if diam < 2 {
        shortcut("2 > diameter: not 2-distance transitive", false, s_distance_transitive[1]);
    }
    if diam >= 2 && s_arc_transitive[1] {
        shortcut("diameter >= 2 and 2-arc transitive: 2-distance transitive", true, s_distance_transitive[1]);
    }

    let mut report = TransitivityReport {
        vertices: g.order(),
        edges: g.edge_count(),
        group_order: group.order(),
        vertex_transitive,
        s_distance_transitive,
        s_arc_transitive,
        two_geodesic_transitive,
        girth,
        valency,
        diameter: diam,
        layer_sizes,
        layer_orbits,
        arc_orbits,
        two_geodesic_orbits,
        intersection_numbers: intersection_numbers(g, 0)?,
        neighborhood,
        table1_match: None,
        lemma_flags,
    };
    if report.two_dt_not_two_at() && valency <= 5 {
        report.table1_match = Some(match_table1(g, group, &report)?);
    }
    Ok(report)
}

/// Transports `group` along an isomorphism from `g` onto the row's graph.
fn transport(g: &Graph, group: &PermutationGroup, target: &Graph) -> Result<Option<PermutationGroup>> {
    if g.order() != target.order() || g.edge_count() != target.edge_count() {
        return Ok(None);
    }
    match is_isomorphic(g, target)? {
        Some(phi) => Ok(Some(group.conjugate(&phi)?)),
        None => Ok(None),
    }
}

fn row_group_condition(row: Table1Row, moved: &PermutationGroup) -> Result<bool> {
    Ok(match row {
        Table1Row::GridComplement4 => check_condition_3_1(moved, 4)?.holds,
        Table1Row::GridComplement5 => check_condition_3_1(moved, 5)?.holds,
        Table1Row::GridComplement6 => check_condition_3_1(moved, 6)?.holds,
        Table1Row::Octahedron => {
            let antipodal: Vec<Vec<usize>> = (0..3).map(|i| vec![i, i + 3]).collect();
            matches!(moved.order(), 24 | 48) && induced_action(moved, &antipodal)?.image.order() == 6
        }
        Table1Row::Hamming23 => {
            // Lines are the rows {3a, 3a+1, 3a+2} and the columns; an
            // automorphism maps the first row to a row or to a column.
            let swaps = moved.generators().iter().any(|h| h.apply(0) / 3 != h.apply(1) / 3);
            matches!(moved.order(), 36 | 72) && swaps
        }
        Table1Row::Icosahedron => matches!(moved.order(), 60 | 120),
        Table1Row::LineGraph => unreachable!("no single graph"),
    })
}

/// Matches a 2-DT, not 2-AT pair against the table rows: isomorphism to the
/// row's graph plus the row's group condition, or the numerical criteria for
/// the line-graph row.
pub fn match_table1(g: &Graph, group: &PermutationGroup, report: &TransitivityReport) -> Result<Table1Match> {
    for row in Table1Row::ALL {
        if report.valency != row.valency() || report.girth != Some(row.girth()) {
            continue;
        }
        let matched = match row.family() {
            Some(family) => {
                let target = build_graph(&family)?.graph;
                match transport(g, group, &target)? {
                    Some(moved) => row_group_condition(row, &moved)?,
                    None => false,
                }
            }
            None => report.second_layer_size() == 8 && report.two_geodesic_transitive == Some(true),
        };
        if matched {
            return Ok(Table1Match::Row(row));
        }
    }
    Ok(Table1Match::Violation)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_parsing() {
        let b: Budget = "subgroups=120, triples=7".parse().unwrap();
        assert_eq!(b, Budget { subgroups: 120, triples: 7 });
        assert_eq!("".parse::<Budget>().unwrap(), Budget::default());
        assert!("subgroups".parse::<Budget>().is_err());
        assert!("depth=3".parse::<Budget>().is_err());
        assert!("triples=x".parse::<Budget>().is_err());
    }

    #[test]
    fn row_columns() {
        let cols: Vec<(usize, usize)> = Table1Row::ALL.iter().map(|r| (r.valency(), r.girth())).collect();
        assert_eq!(cols, vec![(3, 4), (4, 3), (4, 3), (4, 3), (4, 4), (5, 3), (5, 4)]);
    }
}
