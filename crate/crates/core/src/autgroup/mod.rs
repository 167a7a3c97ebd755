//! Automorphism groups, canonical forms and isomorphism testing for graphs
//! with at most 64 vertices, by equitable-partition refinement and
//! individualization.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{distance_partition, graph6, Graph};
use crate::permgroup::{Permutation, PermutationGroup, StabilizerChain};

/// Largest vertex count accepted by this module.
pub const MAX_VERTICES: usize = 64;

type Cells = Vec<Vec<usize>>;

/// Degree, sorted neighbor degrees and distance-layer sizes of a vertex.
type VertexKey = (usize, Vec<usize>, Vec<usize>);

/// Cell sizes and the quotient matrix of an equitable partition.
#[derive(Clone, PartialEq, Eq)]
struct Invariant {
    sizes: Vec<usize>,
    quotient: Vec<u32>,
}

struct Search {
    n: usize,
    adj: Vec<u64>,
}

fn check_size(g: &Graph) -> Result<()> {
    if g.order() > MAX_VERTICES {
        return Err(Error::GraphTooLarge { n: g.order(), cap: MAX_VERTICES });
    }
    Ok(())
}

impl Search {
    fn new(g: &Graph) -> Self {
        let adj = (0..g.order()).map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        Search { n: g.order(), adj }
    }

    fn mask(cell: &[usize]) -> u64 {
        cell.iter().fold(0, |m, &v| m | 1 << v)
    }

    fn initial(&self, g: &Graph) -> Cells {
        let mut keyed: Vec<(VertexKey, usize)> = (0..self.n)
            .map(|v| {
                let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
                nd.sort_unstable();
                let layers = distance_partition(g, v).expect("vertex in range").layer_sizes();
                ((g.degree(v), nd, layers), v)
            })
            .collect();
        keyed.sort();
        let mut cells: Cells = Vec::new();
        for (i, (key, v)) in keyed.iter().enumerate() {
            if i > 0 && keyed[i - 1].0 == *key {
                cells.last_mut().expect("nonempty").push(*v);
            } else {
                cells.push(vec![*v]);
            }
        }
        self.refine(&mut cells);
        cells
    }

    /// Splits cells by neighbor counts into every cell until the partition is
    /// equitable. Parts are ordered by increasing count.
    fn refine(&self, cells: &mut Cells) {
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < cells.len() {
                let splitter = Self::mask(&cells[s]);
                let mut next: Cells = Vec::with_capacity(cells.len());
                for cell in cells.iter() {
                    if cell.len() == 1 {
                        next.push(cell.clone());
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> =
                        cell.iter().map(|&v| ((self.adj[v] & splitter).count_ones(), v)).collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                }
                if next.len() != cells.len() {
                    changed = true;
                }
                *cells = next;
                s += 1;
            }
            if !changed {
                break;
            }
        }
    }

    fn invariant(&self, cells: &Cells) -> Invariant {
        let masks: Vec<u64> = cells.iter().map(|c| Self::mask(c)).collect();
        let mut quotient = Vec::with_capacity(cells.len() * cells.len());
        for cell in cells {
            for m in &masks {
                quotient.push((self.adj[cell[0]] & m).count_ones());
            }
        }
        Invariant { sizes: cells.iter().map(Vec::len).collect(), quotient }
    }

    fn target(cells: &Cells) -> Option<usize> {
        cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|&(i, c)| (c.len(), i)).map(|(i, _)| i)
    }

    fn individualize(&self, cells: &Cells, t: usize, v: usize) -> Cells {
        let mut out = cells.clone();
        let rest: Vec<usize> = cells[t].iter().copied().filter(|&x| x != v).collect();
        out.splice(t..=t, [vec![v], rest]);
        self.refine(&mut out);
        out
    }

    fn labeling(cells: &Cells) -> Vec<usize> {
        cells.iter().map(|c| c[0]).collect()
    }

    /// Columns of the relabeled upper triangle in graph6 bit order; comparing
    /// these lexicographically compares graph6 strings.
    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        (0..self.n)
            .map(|j| {
                (0..j).fold(0u64, |acc, i| {
                    let bit = self.adj[lab[i]] >> lab[j] & 1;
                    acc | bit << (j - 1 - i)
                })
            })
            .collect()
    }

    fn map_between(&self, from: &[usize], to: &[usize]) -> Permutation {
        let mut images = vec![0; self.n];
        for (&a, &b) in from.iter().zip(to) {
            images[a] = b;
        }
        Permutation::from_images(images).expect("labelings are bijections")
    }

    fn is_automorphism(&self, p: &Permutation) -> bool {
        (0..self.n).all(|v| {
            let image = (0..self.n).filter(|&w| self.adj[v] >> w & 1 == 1).fold(0u64, |m, w| m | 1 << p.apply(w));
            image == self.adj[p.apply(v)]
        })
    }
}

/// Orbit representatives of `cell` under the pointwise stabilizer of `prefix`.
fn orbit_representatives(n: usize, gens: &[Permutation], prefix: &[usize], cell: &[usize]) -> Vec<usize> {
    if gens.is_empty() {
        return cell.to_vec();
    }
    let chain = StabilizerChain::with_base_prefix(n, gens, prefix);
    let stab = chain.level_generators(prefix.len());
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for &v in cell {
        if seen[v] {
            continue;
        }
        reps.push(v);
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(x) = stack.pop() {
            for g in &stab {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    reps
}

struct FirstPath {
    nodes: Vec<Cells>,
    invariants: Vec<Invariant>,
    leaf: Vec<usize>,
}

struct AutSearch<'a> {
    s: &'a Search,
    path: FirstPath,
    gens: Vec<Permutation>,
}

impl AutSearch<'_> {
    /// Depth-first search below `cells` (at `depth`, with individualized
    /// `prefix`) for a leaf equivalent to the first leaf.
    fn find_equivalent(&self, cells: &Cells, depth: usize, prefix: &mut Vec<usize>) -> Option<Permutation> {
        let Some(t) = Search::target(cells) else {
            let p = self.s.map_between(&self.path.leaf, &Search::labeling(cells));
            return self.s.is_automorphism(&p).then_some(p);
        };
        let candidates = orbit_representatives(self.s.n, &self.gens, prefix, &cells[t]);
        for x in candidates {
            let child = self.s.individualize(cells, t, x);
            if self.s.invariant(&child) != self.path.invariants[depth + 1] {
                continue;
            }
            prefix.push(x);
            let found = self.find_equivalent(&child, depth + 1, prefix);
            prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

fn first_path(s: &Search, root: Cells) -> (FirstPath, Vec<usize>) {
    let mut nodes = vec![root];
    let mut chosen = Vec::new();
    while let Some(t) = Search::target(nodes.last().expect("root")) {
        let cur = nodes.last().expect("root");
        let v = cur[t][0];
        chosen.push(v);
        let next = s.individualize(cur, t, v);
        nodes.push(next);
    }
    let invariants = nodes.iter().map(|c| s.invariant(c)).collect();
    let leaf = Search::labeling(nodes.last().expect("root"));
    (FirstPath { nodes, invariants, leaf }, chosen)
}

fn automorphism_generators(g: &Graph, s: &Search) -> Vec<Permutation> {
    let (path, chosen) = first_path(s, s.initial(g));
    let mut search = AutSearch { s, path, gens: Vec::new() };
    for k in (0..chosen.len()).rev() {
        let node = search.path.nodes[k].clone();
        let t = Search::target(&node).expect("internal node");
        let prefix = &chosen[..k];
        let first = chosen[k];
        for &w in &node[t] {
            if w == first {
                continue;
            }
            if !search.gens.is_empty() {
                let chain = StabilizerChain::with_base_prefix(s.n, &search.gens, prefix);
                let stab = PermutationGroup::new(s.n, chain.level_generators(k)).expect("degree n");
                if stab.orbit(first).expect("point in range").contains(&w) {
                    continue;
                }
            }
            let child = s.individualize(&node, t, w);
            if s.invariant(&child) != search.path.invariants[k + 1] {
                continue;
            }
            let mut pre = chosen[..k].to_vec();
            pre.push(w);
            if let Some(p) = search.find_equivalent(&child, k + 1, &mut pre) {
                search.gens.push(p);
            }
        }
    }
    search.gens
}

/// Generators of the full automorphism group.
pub fn automorphism_group(g: &Graph) -> Result<PermutationGroup> {
    check_size(g)?;
    if g.order() == 0 {
        return Err(Error::EmptyDegree);
    }
    let s = Search::new(g);
    PermutationGroup::new(g.order(), automorphism_generators(g, &s))
}

/// Canonical representative of the isomorphism class of a graph.
#[derive(Clone, Debug, Serialize)]
pub struct CanonicalForm {
    #[serde(skip)]
    pub graph: Graph,
    pub graph6: String,
    /// Maps each vertex of the input to its canonical vertex.
    pub labeling: Permutation,
}

fn canonical_search(
    s: &Search,
    gens: &[Permutation],
    cells: &Cells,
    prefix: &mut Vec<usize>,
    best: &mut Option<(Vec<u64>, Vec<usize>)>,
) {
    let Some(t) = Search::target(cells) else {
        let lab = Search::labeling(cells);
        let cert = s.certificate(&lab);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, lab));
        }
        return;
    };
    for x in orbit_representatives(s.n, gens, prefix, &cells[t]) {
        let child = s.individualize(cells, t, x);
        prefix.push(x);
        canonical_search(s, gens, &child, prefix, best);
        prefix.pop();
    }
}

/// The relabeling whose graph6 string is least among the leaves of the
/// refinement tree; isomorphic graphs get identical forms.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_size(g)?;
    let n = g.order();
    if n == 0 {
        return Ok(CanonicalForm { graph: g.clone(), graph6: graph6::encode(g), labeling: Permutation::identity(0) });
    }
    let s = Search::new(g);
    let gens = automorphism_generators(g, &s);
    let mut best = None;
    canonical_search(&s, &gens, &s.initial(g), &mut Vec::new(), &mut best);
    let (_, lab) = best.expect("at least one leaf");
    let mut images = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        images[v] = i;
    }
    let labeling = Permutation::from_images(images)?;
    let graph = g.relabel(&labeling)?;
    Ok(CanonicalForm { graph6: graph6::encode(&graph), graph, labeling })
}

/// An isomorphism `g1 → g2` if one exists, validated edge by edge.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    check_size(g1)?;
    let (c1, c2) = (canonical_form(g1)?, canonical_form(g2)?);
    if c1.graph != c2.graph {
        return Ok(None);
    }
    let witness = c1.labeling.then(&c2.labeling.inverse());
    if !g1.is_isomorphism_to(g2, &witness) {
        return Err(Error::Inconsistent("canonical forms agree but the derived map is not an isomorphism".into()));
    }
    Ok(Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |a, b| (a + 1) % n == b || (b + 1) % n == a)
    }

    #[test]
    fn cycles_and_complete_graphs() {
        assert_eq!(automorphism_group(&cycle(7)).unwrap().order(), 14);
        assert_eq!(automorphism_group(&Graph::from_fn(5, |_, _| true)).unwrap().order(), 120);
        assert_eq!(automorphism_group(&Graph::empty(4)).unwrap().order(), 24);
    }

    #[test]
    fn size_cap() {
        assert!(matches!(automorphism_group(&Graph::empty(65)), Err(Error::GraphTooLarge { .. })));
    }

    #[test]
    fn cycle_five_is_not_complement_of_six() {
        let a = canonical_form(&cycle(5)).unwrap();
        let b = canonical_form(&cycle(6).complement()).unwrap();
        assert_ne!(a.graph6, b.graph6);
        assert!(is_isomorphic(&cycle(5), &cycle(5).complement()).unwrap().is_some());
    }
}
