use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::permgroup::Permutation;

/// Finite simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("repeated edge at vertex {u}")));
            }
        }
        Ok(Graph { adjacency })
    }

    /// Builds a graph from a symmetric predicate on vertex pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { adjacency }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.order() });
        }
        Ok(())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adjacency.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Common valency, if every vertex has the same degree.
    pub fn valency(&self) -> Option<usize> {
        let k = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adjacency.iter().all(|l| l.len() + 1 == n)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// Graph with vertex `v` renamed to `perm(v)`.
    pub fn relabel(&self, perm: &Permutation) -> Result<Graph> {
        if perm.degree() != self.order() {
            return Err(Error::DegreeMismatch { expected: self.order(), found: perm.degree() });
        }
        let edges: Vec<(usize, usize)> =
            self.edges().into_iter().map(|(u, v)| (perm.apply(u), perm.apply(v))).collect();
        Graph::from_edges(self.order(), &edges)
    }

    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        perm.degree() == self.order()
            && self.edges().iter().all(|&(u, v)| self.is_adjacent(perm.apply(u), perm.apply(v)))
    }

    /// Checks that `map` (vertex of `self` to vertex of `other`) is an isomorphism.
    pub fn is_isomorphism_to(&self, other: &Graph, map: &Permutation) -> bool {
        self.order() == other.order()
            && map.degree() == self.order()
            && self.edge_count() == other.edge_count()
            && self.edges().iter().all(|&(u, v)| other.is_adjacent(map.apply(u), map.apply(v)))
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.order(), |u, v| !self.is_adjacent(u, v))
    }

    /// Line graph; vertex `i` is `edges[i]` where `edges` is the lexicographic
    /// edge list returned alongside.
    pub fn line_graph(&self) -> Result<(Graph, Vec<(usize, usize)>)> {
        let edges = self.edges();
        if edges.is_empty() {
            return Err(Error::Edgeless);
        }
        let line = Graph::from_fn(edges.len(), |i, j| {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            a == c || a == d || b == c || b == d
        });
        Ok((line, edges))
    }
}
