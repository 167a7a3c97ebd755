//! Graph families and their natural symmetry groups, with fixed labelings.

mod graphs;
mod groups;

pub use graphs::{build_graph, family_graph, grid_vertex, Family, LabeledFamily, VertexLabel};
pub use groups::{
    agl1, alt, cyclic, dihedral, grid_product, icosahedral, icosahedral_rotations, induced_on_edges, line_group,
    octahedral, petersen_s5, psl2_5, row_swap_times, sym, two_homog_frobenius, two_subsets, wreath_bipartite,
    wreath_grid, wreath_hamming,
};

use serde::{Deserialize, Serialize};

use crate::classify::check_condition_3_1;
use crate::error::{Error, Result};
use crate::permgroup::PermutationGroup;

/// A named group construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "snake_case")]
pub enum GroupSpec {
    Sym {
        n: usize,
    },
    Alt {
        n: usize,
    },
    Cyclic {
        n: usize,
    },
    Dihedral {
        n: usize,
    },
    /// `Sₙ × Sₘ` on grid(n, m).
    GridProduct {
        n: usize,
        m: usize,
    },
    /// `S₂ × Sₘ` on grid_complement(m).
    WreathGrid {
        m: usize,
    },
    /// `⟨row swap⟩ × H` on grid_complement(deg H).
    RowSwapTimes {
        h: Box<GroupSpec>,
    },
    /// `Sₘ ≀ S₂` on K_{m,m}.
    WreathBipartite {
        m: usize,
    },
    /// `S₂ ≀ H` on H(d, 2).
    WreathHamming {
        h: Box<GroupSpec>,
        d: usize,
    },
    Octahedral,
    Icosahedral,
    IcosahedralRotations,
    Agl1 {
        p: usize,
    },
    TwoHomogFrobenius {
        p: usize,
    },
    Psl25,
    PetersenS5,
}

pub fn build_group(spec: &GroupSpec) -> Result<PermutationGroup> {
    match spec {
        &GroupSpec::Sym { n } => sym(n),
        &GroupSpec::Alt { n } => alt(n),
        &GroupSpec::Cyclic { n } => cyclic(n),
        &GroupSpec::Dihedral { n } => dihedral(n),
        &GroupSpec::GridProduct { n, m } => grid_product(n, m),
        &GroupSpec::WreathGrid { m } => wreath_grid(m),
        GroupSpec::RowSwapTimes { h } => row_swap_times(&build_group(h)?),
        &GroupSpec::WreathBipartite { m } => wreath_bipartite(m),
        GroupSpec::WreathHamming { h, d } => wreath_hamming(&build_group(h)?, *d),
        GroupSpec::Octahedral => Ok(octahedral()),
        GroupSpec::Icosahedral => Ok(icosahedral()),
        GroupSpec::IcosahedralRotations => Ok(icosahedral_rotations()),
        &GroupSpec::Agl1 { p } => agl1(p),
        &GroupSpec::TwoHomogFrobenius { p } => two_homog_frobenius(p),
        GroupSpec::Psl25 => Ok(psl2_5()),
        GroupSpec::PetersenS5 => Ok(petersen_s5()),
    }
}

/// Supported `m` for [`condition_3_1_examples`].
pub const CONDITION_3_1_DEGREES: [usize; 3] = [4, 5, 6];

/// 2-transitive but not 3-transitive subgroups `H ≤ Sₘ` with a built-in
/// construction.
pub fn two_transitive_not_three(m: usize) -> Result<Vec<PermutationGroup>> {
    match m {
        4 => Ok(vec![alt(4)?]),
        5 => Ok(vec![agl1(5)?]),
        6 => Ok(vec![psl2_5()]),
        _ => Err(Error::InvalidParameter(format!(
            "no built-in 2-transitive, not 3-transitive group of degree {m}; supported m: 4, 5, 6"
        ))),
    }
}

/// `⟨row swap⟩ × H` on grid_complement(m) for each built-in `H`, each checked
/// against the grid condition.
pub fn condition_3_1_examples(m: usize) -> Result<Vec<PermutationGroup>> {
    let mut out = Vec::new();
    for h in two_transitive_not_three(m)? {
        let g = row_swap_times(&h)?;
        let check = check_condition_3_1(&g, m)?;
        if !check.holds {
            return Err(Error::Inconsistent(format!("built-in witness for m = {m} fails the grid condition")));
        }
        out.push(g);
    }
    Ok(out)
}
