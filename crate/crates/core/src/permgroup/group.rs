use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use super::chain::StabilizerChain;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and cached; the group is immutable afterwards.
#[derive(Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        Ok(PermutationGroup { degree, generators, chain: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup { degree, generators: Vec::new(), chain: OnceLock::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    fn check_point(&self, x: usize) -> Result<()> {
        if x >= self.degree {
            return Err(Error::PointOutOfRange { point: x, degree: self.degree });
        }
        Ok(())
    }

    /// Orbit of `x`, ascending.
    pub fn orbit(&self, x: usize) -> Result<Vec<usize>> {
        self.check_point(x)?;
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        let mut out = vec![x];
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    out.push(q);
                    queue.push_back(q);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// All orbits, each ascending, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if seen[x] {
                continue;
            }
            let orbit = self.orbit(x).expect("point in range");
            for &p in &orbit {
                seen[p] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    pub fn point_stabilizer(&self, x: usize) -> Result<PermutationGroup> {
        self.pointwise_stabilizer(&[x])
    }

    /// Subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermutationGroup> {
        for &p in points {
            self.check_point(p)?;
        }
        let mut prefix: Vec<usize> = Vec::new();
        for &p in points {
            if !prefix.contains(&p) {
                prefix.push(p);
            }
        }
        let chain = StabilizerChain::with_base_prefix(self.degree, &self.generators, &prefix);
        PermutationGroup::new(self.degree, chain.level_generators(prefix.len()))
    }

    /// All elements in lexicographic order of their image lists.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut els = self.chain().elements();
        els.sort();
        els
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermutationGroup) -> bool {
        self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }

    /// The group `phi⁻¹ G phi`, i.e. `G` transported along the relabeling `phi`.
    pub fn conjugate(&self, phi: &Permutation) -> Result<PermutationGroup> {
        if phi.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: phi.degree() });
        }
        let inv = phi.inverse();
        let gens = self.generators.iter().map(|g| inv.then(g).then(phi)).collect();
        PermutationGroup::new(self.degree, gens)
    }

    /// Generators as 1-indexed cycle strings.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(Permutation::to_cycle_string).collect()
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup").field("degree", &self.degree).field("generators", &self.generators).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::new(degree, gens.iter().map(|s| Permutation::parse_cycles(degree, s).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn orbit_of_trivial_group() {
        let g = PermutationGroup::trivial(5);
        assert_eq!(g.orbit(0).unwrap(), vec![0]);
        assert_eq!(g.orbits().len(), 5);
        assert!(g.orbit(5).is_err());
    }

    #[test]
    fn orbit_of_six_cycle() {
        let g = group(6, &["(1 2 3 4 5 6)"]);
        assert_eq!(g.orbit(2).unwrap(), vec![0, 1, 2, 3, 4, 5]);
        assert!(g.is_transitive());
    }

    #[test]
    fn stabilizer_of_s4() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let s = g.point_stabilizer(0).unwrap();
        assert_eq!(s.order(), 6);
        assert!(s.generators().iter().all(|p| p.apply(0) == 0));
    }

    #[test]
    fn conjugate_moves_fixed_points() {
        let g = group(4, &["(2 3 4)"]);
        let phi = Permutation::parse_cycles(4, "(1 2)").unwrap();
        let h = g.conjugate(&phi).unwrap();
        assert_eq!(h.orbit(1).unwrap(), vec![1]);
        assert_eq!(h.order(), 3);
    }

    #[test]
    fn rejects_mixed_degrees() {
        let r = PermutationGroup::new(4, vec![Permutation::identity(3)]);
        assert!(matches!(r, Err(Error::DegreeMismatch { .. })));
    }
}
