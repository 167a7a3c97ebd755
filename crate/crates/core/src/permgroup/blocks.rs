use serde::{Deserialize, Serialize};

use super::group::PermutationGroup;
use crate::error::{Error, Result};

/// A partition of the domain into equal-size blocks permuted by the group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockSystem {
    /// Blocks, each ascending, ordered by smallest point.
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    pub fn degree(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Neither the single block nor the partition into points.
    pub fn is_proper(&self) -> bool {
        let b = self.block_count();
        b > 1 && b < self.degree()
    }

    /// Checks, generator by generator, that every block maps onto a block.
    pub fn is_preserved_by(&self, group: &PermutationGroup) -> bool {
        let n = self.degree();
        if n != group.degree() {
            return false;
        }
        let mut owner = vec![0; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &p in b {
                owner[p] = i;
            }
        }
        group.generators().iter().all(|g| {
            self.blocks.iter().all(|b| {
                let t = owner[g.apply(b[0])];
                b.iter().all(|&p| owner[g.apply(p)] == t)
            })
        })
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Finest block system in which `a` and `b` share a block.
fn minimal_block_system(group: &PermutationGroup, a: usize, b: usize) -> BlockSystem {
    let n = group.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut queue = vec![(a, b)];
    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
    parent[rb] = ra;
    while let Some((x, y)) = queue.pop() {
        for g in group.generators() {
            let (gx, gy) = (g.apply(x), g.apply(y));
            let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
            if rx != ry {
                parent[ry] = rx;
                queue.push((rx, ry));
            }
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
    for p in 0..n {
        let r = find(&mut parent, p);
        by_root[r].push(p);
    }
    let mut blocks: Vec<Vec<usize>> = by_root.into_iter().filter(|b| !b.is_empty()).collect();
    blocks.sort();
    BlockSystem { blocks }
}

/// Distinct proper block systems obtained from the seeds `{0, x}`, each the
/// finest system joining `0` and `x`. The group is primitive iff this is empty.
pub fn find_block_systems(group: &PermutationGroup) -> Result<Vec<BlockSystem>> {
    if !group.is_transitive() {
        return Err(Error::Intransitive);
    }
    let mut out: Vec<BlockSystem> = Vec::new();
    for x in 1..group.degree() {
        let system = minimal_block_system(group, 0, x);
        if system.is_proper() && !out.contains(&system) {
            out.push(system);
        }
    }
    out.sort_by(|a, b| a.block_size().cmp(&b.block_size()).then_with(|| a.cmp(b)));
    Ok(out)
}

pub fn is_primitive(group: &PermutationGroup) -> Result<bool> {
    Ok(find_block_systems(group)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    fn cyclic(n: usize) -> PermutationGroup {
        PermutationGroup::new(n, vec![Permutation::from_cycles(n, &[(0..n).collect()]).unwrap()]).unwrap()
    }

    #[test]
    fn four_cycle_has_one_proper_system() {
        let systems = find_block_systems(&cyclic(4)).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].blocks, vec![vec![0, 2], vec![1, 3]]);
        assert!(systems[0].is_preserved_by(&cyclic(4)));
    }

    #[test]
    fn prime_cycles_are_primitive() {
        for p in [2, 3, 5, 7, 11, 13] {
            assert!(is_primitive(&cyclic(p)).unwrap(), "C{p}");
        }
        assert!(!is_primitive(&cyclic(6)).unwrap());
    }

    #[test]
    fn intransitive_is_an_error() {
        let g = PermutationGroup::new(4, vec![Permutation::parse_cycles(4, "(1 2)").unwrap()]).unwrap();
        assert!(matches!(find_block_systems(&g), Err(Error::Intransitive)));
    }
}
