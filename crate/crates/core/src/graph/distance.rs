use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::simple::Graph;
use crate::error::{Error, Result};

/// Breadth-first layers `Γ₀(u) = {u}, Γ₁(u), …` of the component of `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistancePartition {
    pub base: usize,
    /// Layers, each in ascending vertex order.
    pub layers: Vec<Vec<usize>>,
}

impl DistancePartition {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, i: usize) -> &[usize] {
        self.layers.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    /// Distance from the base to every vertex; `None` outside the component.
    pub fn distances(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                out[v] = Some(i);
            }
        }
        out
    }
}

pub fn distance_partition(g: &Graph, u: usize) -> Result<DistancePartition> {
    g.check_vertex(u)?;
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    let mut layers: Vec<Vec<usize>> = vec![vec![u]];
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                if layers.len() <= dist[y] {
                    layers.push(Vec::new());
                }
                layers[dist[y]].push(y);
                queue.push_back(y);
            }
        }
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    Ok(DistancePartition { base: u, layers })
}

/// Largest eccentricity; errors on disconnected graphs.
pub fn diameter(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    (0..g.order())
        .map(|u| distance_partition(g, u).map(|p| p.eccentricity()))
        .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
}

/// Length of a shortest cycle, `None` for forests.
///
/// A BFS from every vertex; a non-tree edge `(x, y)` closes a closed walk of
/// length `d(x) + d(y) + 1`, and the minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[x] >= b {
                    break;
                }
            }
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// One layer's intersection counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionTriple {
    pub c: usize,
    pub a: usize,
    pub b: usize,
}

/// Per-layer `(cᵢ, aᵢ, bᵢ)`; `None` where the counts vary inside the layer
/// (the layer is not "layer-regular").
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionNumbers {
    pub base: usize,
    pub valency: usize,
    pub layers: Vec<Option<IntersectionTriple>>,
}

impl IntersectionNumbers {
    pub fn triple(&self, i: usize) -> Option<IntersectionTriple> {
        self.layers.get(i).copied().flatten()
    }

    pub fn c(&self, i: usize) -> Option<usize> {
        self.triple(i).map(|t| t.c)
    }

    pub fn a(&self, i: usize) -> Option<usize> {
        self.triple(i).map(|t| t.a)
    }

    pub fn b(&self, i: usize) -> Option<usize> {
        self.triple(i).map(|t| t.b)
    }

    pub fn well_defined(&self, i: usize) -> bool {
        self.triple(i).is_some()
    }
}

/// Counts, for every vertex in every layer around `u`, its neighbors one layer
/// in, in the same layer, and one layer out.
pub fn intersection_numbers(g: &Graph, u: usize) -> Result<IntersectionNumbers> {
    g.check_vertex(u)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let valency = g.valency().ok_or(Error::Irregular)?;
    let partition = distance_partition(g, u)?;
    let dist = partition.distances(g.order());
    let mut layers = Vec::with_capacity(partition.layers.len());
    for (i, layer) in partition.layers.iter().enumerate() {
        let mut agreed: Option<IntersectionTriple> = None;
        let mut consistent = true;
        for &v in layer {
            let mut t = IntersectionTriple { c: 0, a: 0, b: 0 };
            for &w in g.neighbors(v) {
                let d = dist[w].expect("connected");
                if d + 1 == i {
                    t.c += 1;
                } else if d == i {
                    t.a += 1;
                } else {
                    t.b += 1;
                }
            }
            match agreed {
                None => agreed = Some(t),
                Some(prev) if prev != t => consistent = false,
                _ => {}
            }
        }
        layers.push(if consistent { agreed } else { None });
    }
    Ok(IntersectionNumbers { base: u, valency, layers })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn complete_graph_layers() {
        let k4 = Graph::from_fn(4, |_, _| true);
        let p = distance_partition(&k4, 2).unwrap();
        assert_eq!(p.layers, vec![vec![2], vec![0, 1, 3]]);
        assert_eq!(girth(&k4), Some(3));
    }

    #[test]
    fn cycle_girth_and_diameter() {
        assert_eq!(girth(&cycle(6)), Some(6));
        assert_eq!(girth(&cycle(5)), Some(5));
        assert_eq!(diameter(&cycle(7)).unwrap(), 3);
    }

    #[test]
    fn forest_has_no_girth() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&path), None);
        assert_eq!(girth(&Graph::empty(3)), None);
    }

    #[test]
    fn disconnected_graphs_are_handled_per_component() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance_partition(&g, 0).unwrap().layers, vec![vec![0], vec![1]]);
        assert!(matches!(diameter(&g), Err(Error::Disconnected)));
        assert!(matches!(intersection_numbers(&g, 0), Err(Error::Disconnected)));
    }

    #[test]
    fn irregular_graph_is_rejected() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(intersection_numbers(&path, 0), Err(Error::Irregular)));
    }

    #[test]
    fn cycle_intersection_numbers() {
        let x = intersection_numbers(&cycle(6), 0).unwrap();
        assert_eq!(x.triple(1), Some(IntersectionTriple { c: 1, a: 0, b: 1 }));
        assert_eq!(x.triple(3), Some(IntersectionTriple { c: 2, a: 0, b: 0 }));
        let y = intersection_numbers(&cycle(5), 0).unwrap();
        assert_eq!(y.triple(2), Some(IntersectionTriple { c: 1, a: 1, b: 0 }));
    }
}
