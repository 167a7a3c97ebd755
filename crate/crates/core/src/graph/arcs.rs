use super::simple::Graph;
use crate::error::{Error, Result};

/// All `s`-arcs `(v₀, …, vₛ)` (consecutive vertices adjacent, `vᵢ ≠ vᵢ₊₂`)
/// in lexicographic order, for `s` in `1..=3`.
pub fn enumerate_s_arcs(g: &Graph, s: usize) -> Result<Vec<Vec<usize>>> {
    if !(1..=3).contains(&s) {
        return Err(Error::InvalidParameter(format!("s-arc length must be 1, 2 or 3, got {s}")));
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(s + 1);
    for v in 0..g.order() {
        path.push(v);
        extend_arcs(g, s, &mut path, &mut out);
        path.pop();
    }
    Ok(out)
}

fn extend_arcs(g: &Graph, s: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if path.len() == s + 1 {
        out.push(path.clone());
        return;
    }
    let last = path[path.len() - 1];
    let back = (path.len() >= 2).then(|| path[path.len() - 2]);
    for &w in g.neighbors(last) {
        if Some(w) == back {
            continue;
        }
        path.push(w);
        extend_arcs(g, s, path, out);
        path.pop();
    }
}

/// Number of `s`-arcs without materialising them.
pub fn count_s_arcs(g: &Graph, s: usize) -> usize {
    // non-backtracking walks, counted per final arc
    if s == 0 {
        return g.order();
    }
    let arcs: Vec<(usize, usize)> = (0..g.order()).flat_map(|u| g.neighbors(u).iter().map(move |&v| (u, v))).collect();
    let mut offsets = vec![0usize; g.order() + 1];
    for u in 0..g.order() {
        offsets[u + 1] = offsets[u] + g.degree(u);
    }
    let index = |u: usize, v: usize| -> usize { offsets[u] + g.neighbors(u).binary_search(&v).expect("arc") };
    let mut ways = vec![1usize; arcs.len()];
    for _ in 1..s {
        let mut next = vec![0usize; arcs.len()];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            for &w in g.neighbors(v) {
                if w != u {
                    next[index(v, w)] += ways[i];
                }
            }
        }
        ways = next;
    }
    ways.iter().sum()
}

/// 2-arcs whose end vertices are non-adjacent, in lexicographic order.
pub fn enumerate_2_geodesics(g: &Graph) -> Vec<Vec<usize>> {
    enumerate_s_arcs(g, 2).expect("s = 2 is valid").into_iter().filter(|a| !g.is_adjacent(a[0], a[2])).collect()
}
