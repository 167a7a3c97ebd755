use std::collections::{HashMap, HashSet};

use super::group::PermutationGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Default order cap for exhaustive subgroup enumeration.
pub const DEFAULT_SUBGROUP_CAP: u128 = 400;

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn ones(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        (0..n).filter(move |&i| self.get(i))
    }
}

struct Table {
    n: usize,
    mul: Vec<u16>,
}

impl Table {
    fn product(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    /// Closure of `gens` by right multiplication from the identity (index 0).
    fn closure(&self, gens: &[usize]) -> (Bits, usize) {
        let mut members = Bits::new(self.n);
        members.set(0);
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.product(x, g);
                if !members.get(y) {
                    members.set(y);
                    count += 1;
                    stack.push(y);
                }
            }
        }
        (members, count)
    }
}

struct Found {
    members: Bits,
    order: usize,
    gens: Vec<usize>,
}

/// Every subgroup of a group of order at most `max_order`, each given by
/// generators, sorted by order and then by the sorted element list.
///
/// Subgroups are grown from the trivial group by adjoining one element at a
/// time; adjoining any element of a coset `hg` or `gh` yields the same
/// subgroup, so only one element per coset is tried.
pub fn enumerate_subgroups(group: &PermutationGroup, max_order: u128) -> Result<Vec<PermutationGroup>> {
    let order = group.order();
    if order > max_order {
        return Err(Error::GroupTooLarge { order, cap: max_order });
    }
    let elements = group.elements();
    let n = elements.len();
    debug_assert!(elements[0].is_identity());
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut mul = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            mul.push(index[&a.then(b)] as u16);
        }
    }
    let table = Table { n, mul };

    let mut found: Vec<Found> = vec![Found { members: table.closure(&[]).0, order: 1, gens: Vec::new() }];
    let mut seen: HashSet<Bits> = HashSet::from([found[0].members.clone()]);
    let mut cursor = 0;
    while cursor < found.len() {
        let members = found[cursor].members.clone();
        let base_gens = found[cursor].gens.clone();
        let mut done = members.clone();
        let member_list: Vec<usize> = members.ones(n).collect();
        for g in 0..n {
            if done.get(g) {
                continue;
            }
            for &h in &member_list {
                done.set(table.product(h, g));
                done.set(table.product(g, h));
            }
            let mut gens = base_gens.clone();
            gens.push(g);
            let (bits, count) = table.closure(&gens);
            if seen.insert(bits.clone()) {
                found.push(Found { members: bits, order: count, gens });
            }
        }
        cursor += 1;
    }

    let mut keyed: Vec<(usize, Vec<usize>, Vec<usize>)> =
        found.into_iter().map(|f| (f.order, f.members.ones(n).collect(), f.gens)).collect();
    keyed.sort();
    keyed
        .into_iter()
        .map(|(_, _, gens)| {
            PermutationGroup::new(group.degree(), gens.into_iter().map(|i| elements[i].clone()).collect())
        })
        .collect()
}
