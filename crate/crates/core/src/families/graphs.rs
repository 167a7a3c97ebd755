use std::fmt;

use serde::{Deserialize, Serialize};

use super::groups;
use crate::error::{Error, Result};
use crate::graph::{diameter, girth, Graph};
use crate::permgroup::{Permutation, PermutationGroup};

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Grid { n: usize, m: usize },
    GridComplement { m: usize },
    Hamming { d: usize, q: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Cycle { n: usize },
    Octahedron,
    Icosahedron,
    Petersen,
    Line { of: Box<Family> },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Grid { n, m } => write!(f, "grid({n},{m})"),
            Family::GridComplement { m } => write!(f, "grid_complement({m})"),
            Family::Hamming { d, q } => write!(f, "hamming({d},{q})"),
            Family::Complete { n } => write!(f, "complete({n})"),
            Family::CompleteBipartite { m, n } => write!(f, "complete_bipartite({m},{n})"),
            Family::Cycle { n } => write!(f, "cycle({n})"),
            Family::Octahedron => write!(f, "octahedron"),
            Family::Icosahedron => write!(f, "icosahedron"),
            Family::Petersen => write!(f, "petersen"),
            Family::Line { of } => write!(f, "line_graph({of})"),
        }
    }
}

/// Structured name of a vertex in a labeled family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexLabel {
    Index(usize),
    /// `(i, j)`, 1-indexed.
    Pair(usize, usize),
    /// Tuple over the alphabet `{1, …, q}`.
    Tuple(Vec<usize>),
    /// Subset of `{1, …, n}`.
    Subset(Vec<usize>),
    Name(String),
    Edge(Box<VertexLabel>, Box<VertexLabel>),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            VertexLabel::Index(i) => write!(f, "{i}"),
            VertexLabel::Pair(i, j) => write!(f, "({i},{j})"),
            VertexLabel::Tuple(t) => write!(f, "({})", join(t)),
            VertexLabel::Subset(s) => write!(f, "{{{}}}", join(s)),
            VertexLabel::Name(s) => write!(f, "{s}"),
            VertexLabel::Edge(a, b) => write!(f, "{a}-{b}"),
        }
    }
}

/// A family member: the graph, a bijective labeling of its vertices and
/// generators of the family's natural symmetry group.
#[derive(Clone, Debug)]
pub struct LabeledFamily {
    pub family: Family,
    pub graph: Graph,
    pub labels: Vec<VertexLabel>,
    pub generators: Vec<Permutation>,
}

impl LabeledFamily {
    pub fn group(&self) -> PermutationGroup {
        PermutationGroup::new(self.graph.order(), self.generators.clone()).expect("generators match the graph order")
    }

    pub fn vertex(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn check_known(family: &Family, g: &Graph, valency: usize, girth_expected: Option<usize>, diam: usize) -> Result<()> {
    let found = (g.valency(), girth(g), diameter(g)?);
    if found != (Some(valency), girth_expected, diam) {
        return Err(Error::Inconsistent(format!(
            "{family}: expected valency/girth/diameter {:?}, built {:?}",
            (Some(valency), girth_expected, diam),
            found
        )));
    }
    Ok(())
}

pub fn grid_vertex(m: usize, i: usize, j: usize) -> usize {
    (i - 1) * m + (j - 1)
}

/// The family member with its fixed labeling. Regularity, girth and diameter
/// are checked against their known values, and every generator is checked to
/// be an automorphism.
pub fn build_graph(family: &Family) -> Result<LabeledFamily> {
    let built = match family {
        &Family::Grid { n, m } => {
            if n < 2 || m < 2 {
                return Err(invalid(format!("grid needs n, m >= 2, got ({n},{m})")));
            }
            let labels: Vec<VertexLabel> =
                (1..=n).flat_map(|i| (1..=m).map(move |j| VertexLabel::Pair(i, j))).collect();
            let graph = Graph::from_fn(n * m, |a, b| a / m == b / m || a % m == b % m);
            let g3 = if n >= 3 || m >= 3 { Some(3) } else { Some(4) };
            check_known(family, &graph, n + m - 2, g3, 2)?;
            let generators = groups::grid_symmetry(n, m).generators().to_vec();
            LabeledFamily { family: family.clone(), graph, labels, generators }
        }
        &Family::GridComplement { m } => {
            if m < 3 {
                return Err(invalid(format!("grid_complement needs m >= 3, got {m}")));
            }
            let grid = build_graph(&Family::Grid { n: 2, m })?;
            let graph = grid.graph.complement();
            check_known(family, &graph, m - 1, Some(if m == 3 { 6 } else { 4 }), 3)?;
            let generators = groups::wreath_grid(m)?.generators().to_vec();
            LabeledFamily { family: family.clone(), graph, labels: grid.labels, generators }
        }
        &Family::Hamming { d, q } => {
            if d < 2 || q < 2 {
                return Err(invalid(format!("hamming needs d, q >= 2, got ({d},{q})")));
            }
            let n = q.pow(d as u32);
            let digits = |x: usize| -> Vec<usize> { (0..d).rev().map(|i| (x / q.pow(i as u32)) % q).collect() };
            let labels = (0..n).map(|x| VertexLabel::Tuple(digits(x).into_iter().map(|a| a + 1).collect())).collect();
            let graph =
                Graph::from_fn(n, |a, b| digits(a).iter().zip(digits(b).iter()).filter(|(x, y)| x != y).count() == 1);
            check_known(family, &graph, d * (q - 1), Some(if q == 2 { 4 } else { 3 }), d)?;
            let generators = groups::hamming_full(d, q)?.generators().to_vec();
            LabeledFamily { family: family.clone(), graph, labels, generators }
        }
        &Family::Complete { n } => {
            if n < 1 {
                return Err(invalid("complete graph needs n >= 1".into()));
            }
            let graph = Graph::from_fn(n, |_, _| true);
            check_known(family, &graph, n - 1, (n >= 3).then_some(3), usize::from(n > 1))?;
            LabeledFamily {
                family: family.clone(),
                graph,
                labels: (1..=n).map(VertexLabel::Index).collect(),
                generators: groups::sym(n)?.generators().to_vec(),
            }
        }
        &Family::CompleteBipartite { m, n } => {
            if m < 1 || n < 1 {
                return Err(invalid(format!("complete_bipartite needs m, n >= 1, got ({m},{n})")));
            }
            let graph = Graph::from_fn(m + n, |a, b| (a < m) != (b < m));
            if m == n {
                check_known(family, &graph, m, (m >= 2).then_some(4), if m == 1 { 1 } else { 2 })?;
            }
            let labels =
                (1..=m).map(|j| VertexLabel::Pair(1, j)).chain((1..=n).map(|j| VertexLabel::Pair(2, j))).collect();
            LabeledFamily {
                family: family.clone(),
                graph,
                labels,
                generators: groups::bipartite_symmetry(m, n).generators().to_vec(),
            }
        }
        &Family::Cycle { n } => {
            if n < 3 {
                return Err(invalid(format!("cycle needs n >= 3, got {n}")));
            }
            let graph = Graph::from_fn(n, |a, b| (a + 1) % n == b || (b + 1) % n == a);
            check_known(family, &graph, 2, Some(n), n / 2)?;
            LabeledFamily {
                family: family.clone(),
                graph,
                labels: (1..=n).map(VertexLabel::Index).collect(),
                generators: groups::dihedral(n)?.generators().to_vec(),
            }
        }
        Family::Octahedron => {
            // a, b, c, a', b', c'; antipodal pairs are {x, x'}.
            let names = ["a", "b", "c", "a'", "b'", "c'"];
            let graph = Graph::from_fn(6, |x, y| x % 3 != y % 3);
            check_known(family, &graph, 4, Some(3), 2)?;
            LabeledFamily {
                family: family.clone(),
                graph,
                labels: names.iter().map(|s| VertexLabel::Name((*s).into())).collect(),
                generators: groups::octahedral().generators().to_vec(),
            }
        }
        Family::Icosahedron => {
            // u, v1..v5, w1..w5, x, arranged by distance from u.
            let v = |i: usize| 1 + (i + 4) % 5;
            let w = |i: usize| 6 + (i + 4) % 5;
            let mut edges = Vec::new();
            for i in 1..=5 {
                edges.extend([
                    (0, v(i)),
                    (v(i), v(i + 1)),
                    (v(i), w(i)),
                    (v(i), w(i + 1)),
                    (w(i), w(i + 1)),
                    (w(i), 11),
                ]);
            }
            let graph = Graph::from_edges(12, &edges)?;
            check_known(family, &graph, 5, Some(3), 3)?;
            let labels = std::iter::once("u".to_string())
                .chain((1..=5).map(|i| format!("v{i}")))
                .chain((1..=5).map(|i| format!("w{i}")))
                .chain(std::iter::once("x".to_string()))
                .map(VertexLabel::Name)
                .collect();
            LabeledFamily {
                family: family.clone(),
                graph,
                labels,
                generators: groups::icosahedral().generators().to_vec(),
            }
        }
        Family::Petersen => {
            let pairs = groups::two_subsets(5);
            let graph = Graph::from_fn(10, |a, b| {
                let (x, y) = (pairs[a], pairs[b]);
                x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
            });
            check_known(family, &graph, 3, Some(5), 2)?;
            LabeledFamily {
                family: family.clone(),
                graph,
                labels: pairs.iter().map(|&(a, b)| VertexLabel::Subset(vec![a + 1, b + 1])).collect(),
                generators: groups::petersen_s5().generators().to_vec(),
            }
        }
        Family::Line { of } => {
            let base = build_graph(of)?;
            let (graph, edges) = base.graph.line_graph()?;
            let expected: usize = (0..base.graph.order())
                .map(|v| base.graph.degree(v) * base.graph.degree(v).saturating_sub(1) / 2)
                .sum();
            if graph.edge_count() != expected {
                return Err(Error::Inconsistent(format!(
                    "{family}: line graph has {} edges, expected {expected}",
                    graph.edge_count()
                )));
            }
            let labels = edges
                .iter()
                .map(|&(a, b)| VertexLabel::Edge(Box::new(base.labels[a].clone()), Box::new(base.labels[b].clone())))
                .collect();
            let generators = groups::induced_on_edges(&base.graph, &base.generators);
            LabeledFamily { family: family.clone(), graph, labels, generators }
        }
    };
    for (index, g) in built.generators.iter().enumerate() {
        if !built.graph.is_automorphism(g) {
            return Err(Error::NotAutomorphism { index });
        }
    }
    Ok(built)
}

/// Shorthand for the graph alone.
pub fn family_graph(family: &Family) -> Result<Graph> {
    Ok(build_graph(family)?.graph)
}
