use serde::{Deserialize, Serialize};

use super::group::PermutationGroup;

/// Default degree cap for ordered-triple enumeration.
pub const DEFAULT_TRIPLE_CAP: usize = 128;

/// A flag that may have been skipped because enumeration was capped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tristate {
    Yes,
    No,
    NotComputed,
}

impl Tristate {
    pub fn is_yes(self) -> bool {
        self == Tristate::Yes
    }
}

impl From<bool> for Tristate {
    fn from(b: bool) -> Self {
        if b {
            Tristate::Yes
        } else {
            Tristate::No
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityDegrees {
    pub point_orbits: usize,
    pub unordered_pair_orbits: usize,
    pub ordered_pair_orbits: usize,
    pub ordered_triple_orbits: Option<usize>,
    pub transitive: bool,
    pub two_homogeneous: bool,
    pub two_transitive: bool,
    pub three_transitive: Tristate,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

/// Counts orbits on `k`-tuples of distinct points (`k` in 1..=3), or on
/// unordered pairs when `unordered` is set.
fn tuple_orbits(group: &PermutationGroup, k: usize, unordered: bool) -> usize {
    let n = group.degree();
    let size = n.pow(k as u32);
    let mut uf = UnionFind::new(size);
    let valid = |t: usize| -> bool {
        match k {
            1 => true,
            2 => {
                let (a, b) = (t / n, t % n);
                if unordered {
                    a < b
                } else {
                    a != b
                }
            }
            _ => {
                let (a, b, c) = (t / (n * n), (t / n) % n, t % n);
                a != b && b != c && a != c
            }
        }
    };
    for g in group.generators() {
        for t in 0..size {
            if !valid(t) {
                continue;
            }
            let image = match k {
                1 => g.apply(t),
                2 => {
                    let (a, b) = (g.apply(t / n), g.apply(t % n));
                    if unordered && a > b {
                        b * n + a
                    } else {
                        a * n + b
                    }
                }
                _ => {
                    let (a, b, c) = (t / (n * n), (t / n) % n, t % n);
                    (g.apply(a) * n + g.apply(b)) * n + g.apply(c)
                }
            };
            uf.union(t as u32, image as u32);
        }
    }
    (0..size).filter(|&t| valid(t) && uf.find(t as u32) == t as u32).count()
}

/// Orbit counts on points, unordered pairs, ordered pairs and ordered triples.
/// Each flag holds iff the matching count is one; triples are only enumerated
/// when the degree is at most `triple_cap`.
pub fn transitivity_degree_tests_capped(group: &PermutationGroup, triple_cap: usize) -> TransitivityDegrees {
    let n = group.degree();
    let point_orbits = tuple_orbits(group, 1, false);
    let unordered_pair_orbits = if n >= 2 { tuple_orbits(group, 2, true) } else { 0 };
    let ordered_pair_orbits = if n >= 2 { tuple_orbits(group, 2, false) } else { 0 };
    let ordered_triple_orbits = if n < 3 {
        Some(0)
    } else if n <= triple_cap {
        Some(tuple_orbits(group, 3, false))
    } else {
        None
    };
    TransitivityDegrees {
        point_orbits,
        unordered_pair_orbits,
        ordered_pair_orbits,
        ordered_triple_orbits,
        transitive: point_orbits == 1,
        two_homogeneous: unordered_pair_orbits == 1,
        two_transitive: ordered_pair_orbits == 1,
        three_transitive: match ordered_triple_orbits {
            Some(c) => (c == 1).into(),
            None => Tristate::NotComputed,
        },
    }
}

pub fn transitivity_degree_tests(group: &PermutationGroup) -> TransitivityDegrees {
    transitivity_degree_tests_capped(group, DEFAULT_TRIPLE_CAP)
}
