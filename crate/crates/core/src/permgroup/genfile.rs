//! Text format for generator sets: a mandatory `degree N` header, then one
//! permutation per line in 1-indexed disjoint-cycle notation. Blank lines and
//! `#` comments are ignored.

use super::group::PermutationGroup;
use super::perm::Permutation;
use crate::error::{Error, Result};

pub fn parse_generator_file(text: &str) -> Result<PermutationGroup> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let value = line
                    .strip_prefix("degree")
                    .map(str::trim)
                    .ok_or_else(|| Error::Parse { line: line_no, message: "expected `degree N` header".into() })?;
                let n: usize = value
                    .parse()
                    .map_err(|_| Error::Parse { line: line_no, message: format!("bad degree `{value}`") })?;
                if n == 0 {
                    return Err(Error::Parse { line: line_no, message: "degree must be positive".into() });
                }
                degree = Some(n);
            }
            Some(n) => {
                let p = Permutation::parse_cycles(n, line)
                    .map_err(|e| Error::Parse { line: line_no, message: e.to_string() })?;
                gens.push(p);
            }
        }
    }
    let degree = degree.ok_or(Error::Parse { line: 0, message: "missing `degree N` header".into() })?;
    PermutationGroup::new(degree, gens)
}

pub fn write_generator_file(group: &PermutationGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_cycle_string());
        out.push('\n');
    }
    out
}
