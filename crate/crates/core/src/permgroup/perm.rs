use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored by its image list.
///
/// Products are read left to right: `p.then(&q)` maps `i` to `q(p(i))`.
/// This is the only composition convention used in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::EmptyDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::NotBijective(format!("image {x} of point {i} is out of range for degree {n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijective(format!("value {x} appears twice")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-indexed disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::EmptyDegree);
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::NotBijective(format!("point {} occurs in more than one cycle position", x + 1)));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-indexed cycle notation such as `(1 2)(3 4 5)`; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::NotBijective(format!("expected `(` in `{text}`")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::NotBijective(format!("unbalanced parenthesis in `{text}`")));
            };
            let body = &stripped[..close];
            let mut cycle = Vec::new();
            for token in body.split(|c: char| c == ',' || c.is_whitespace()) {
                if token.is_empty() {
                    continue;
                }
                let point: usize = token.parse().map_err(|_| Error::NotBijective(format!("bad point `{token}`")))?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                cycle.push(point - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = stripped[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Left-to-right product: `i ↦ other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(self.then(other))
    }

    /// Same as [`Permutation::compose`] for permutations already known to share a degree.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles().iter().map(|c| c.len() as u64).fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| *i != x).map(|(i, _)| i)
    }

    /// 1-indexed cycle notation; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }

    /// Extends the permutation to a larger domain, fixing the new points.
    pub fn extend_to(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree()..degree.max(self.degree()));
        Permutation { images }
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_then_transposition_is_three_cycle() {
        let a = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![1, 2]]).unwrap();
        let c = a.compose(&b).unwrap();
        // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
        assert_eq!(c.images(), &[2, 0, 1]);
        assert_eq!(c.to_cycle_string(), "(1 3 2)");
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
        assert!(Permutation::parse_cycles(4, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(4, "(1 5)").is_err());
    }

    #[test]
    fn cycle_string_round_trip() {
        let p = Permutation::parse_cycles(6, "(1 3 5)(2 4 6)").unwrap();
        assert_eq!(p.to_cycle_string(), "(1 3 5)(2 4 6)");
        assert_eq!(p.order(), 3);
        assert_eq!(Permutation::parse_cycles(3, "()").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::parse_cycles(4, " (1,2) ").unwrap().images(), &[1, 0, 2, 3]);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let p = Permutation::parse_cycles(7, "(1 2 3 4 5)(6 7)").unwrap();
        assert_eq!(p.order(), 10);
        assert!(p.pow(10).is_identity());
        assert_eq!(p.pow(3), p.then(&p).then(&p));
    }
}
