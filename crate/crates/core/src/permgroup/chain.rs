use super::perm::Permutation;

/// Stabilizer chain built by the deterministic incremental Schreier–Sims
/// procedure.
///
/// The chain runs over a full base order: a caller-chosen prefix followed by
/// every remaining point in ascending order. Level `i` holds the group fixing
/// the first `i` points of that order. Levels whose orbit is a single point
/// are kept internally but omitted from [`StabilizerChain::base`], so the
/// reported base is exactly "smallest point moved at each level" when the
/// prefix is empty.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    generators: Vec<Permutation>,
    /// `reps[p]` maps `point` to `p`.
    reps: Vec<Option<Permutation>>,
    inverse_reps: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut reps = vec![None; degree];
        reps[point] = Some(Permutation::identity(degree));
        let inverse_reps = reps.clone();
        Level { point, generators: Vec::new(), reps, inverse_reps, orbit: vec![point] }
    }
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        Self::with_base_prefix(degree, generators, &[])
    }

    /// Builds a chain whose base order starts with `prefix`; the stabilizer of
    /// the prefix points is then available from [`StabilizerChain::level_generators`].
    pub fn with_base_prefix(degree: usize, generators: &[Permutation], prefix: &[usize]) -> Self {
        let mut order: Vec<usize> = Vec::with_capacity(degree);
        let mut used = vec![false; degree];
        for &p in prefix {
            if !used[p] {
                used[p] = true;
                order.push(p);
            }
        }
        order.extend((0..degree).filter(|&p| !used[p]));
        let mut chain = StabilizerChain { degree, levels: order.iter().map(|&p| Level::new(p, degree)).collect() };
        for g in generators {
            if !g.is_identity() {
                chain.extend(0, g.clone());
            }
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, one per level with a nontrivial basic orbit.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().filter(|l| l.orbit.len() > 1).map(|l| l.point).collect()
    }

    /// Basic orbit sizes along [`StabilizerChain::base`].
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().filter(|l| l.orbit.len() > 1).map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Basic orbit of the level at position `depth` in the full base order.
    pub fn basic_orbit(&self, depth: usize) -> &[usize] {
        &self.levels[depth].orbit
    }

    /// Coset representative at level `depth` mapping that level's point to `target`.
    pub fn representative(&self, depth: usize, target: usize) -> Option<&Permutation> {
        self.levels[depth].reps[target].as_ref()
    }

    /// Generators of the subgroup fixing the first `depth` points of the base order.
    pub fn level_generators(&self, depth: usize) -> Vec<Permutation> {
        match self.levels.get(depth) {
            Some(level) => level.generators.clone(),
            None => Vec::new(),
        }
    }

    /// All strong generators, deduplicated, in level order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.contains_from(0, g)
    }

    fn contains_from(&self, start: usize, g: &Permutation) -> bool {
        let mut h = g.clone();
        for level in &self.levels[start..] {
            let p = h.apply(level.point);
            if p == level.point {
                continue;
            }
            match &level.inverse_reps[p] {
                Some(inv) => h = h.then(inv),
                None => return false,
            }
        }
        h.is_identity()
    }

    fn extend(&mut self, depth: usize, g: Permutation) {
        if depth >= self.levels.len() {
            debug_assert!(g.is_identity());
            return;
        }
        if self.contains_from(depth, &g) {
            return;
        }
        self.levels[depth].generators.push(g.clone());
        let point = self.levels[depth].point;
        let mut work: Vec<Permutation> = self.levels[depth]
            .orbit
            .iter()
            .map(|&p| self.levels[depth].reps[p].as_ref().expect("orbit point has a representative").then(&g))
            .collect();
        while let Some(h) = work.pop() {
            let p = h.apply(point);
            let schreier = self.levels[depth].inverse_reps[p].as_ref().map(|inv| h.then(inv));
            match schreier {
                Some(s) => {
                    if !s.is_identity() {
                        self.extend(depth + 1, s);
                    }
                }
                None => {
                    let level = &mut self.levels[depth];
                    level.inverse_reps[p] = Some(h.inverse());
                    level.orbit.push(p);
                    for s in &level.generators {
                        work.push(h.then(s));
                    }
                    level.reps[p] = Some(h);
                }
            }
        }
    }

    /// Every group element, built as products of coset representatives.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut current = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            if level.orbit.len() == 1 {
                continue;
            }
            let mut next = Vec::with_capacity(current.len() * level.orbit.len());
            for h in &current {
                for &p in &level.orbit {
                    next.push(h.then(level.reps[p].as_ref().expect("orbit representative")));
                }
            }
            current = next;
        }
        current
    }
}
