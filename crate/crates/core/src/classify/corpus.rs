use std::sync::OnceLock;

use super::report::{classify_pair, Table1Row, TransitivityReport};
use crate::error::{Error, Result};
use crate::families::{
    agl1, alt, build_graph, cyclic, dihedral, icosahedral, icosahedral_rotations, line_group, octahedral, petersen_s5,
    psl2_5, row_swap_times, sym, two_homog_frobenius, wreath_bipartite, wreath_grid, wreath_hamming, Family,
};
use crate::graph::Graph;
use crate::permgroup::PermutationGroup;

/// A named (graph, group) pair.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub family: Family,
    pub graph: Graph,
    pub group: PermutationGroup,
}

fn entry(name: impl Into<String>, family: Family, group: PermutationGroup) -> Result<CorpusEntry> {
    let graph = build_graph(&family)?.graph;
    Ok(CorpusEntry { name: name.into(), family, graph, group })
}

/// The constructed instance of each table row.
pub fn table1_instances() -> Result<Vec<(Table1Row, CorpusEntry)>> {
    let petersen = build_graph(&Family::Petersen)?.graph;
    let line = Family::Line { of: Box::new(Family::Petersen) };
    Ok(vec![
        (
            Table1Row::GridComplement4,
            entry("GC(4), S2 x A4", Family::GridComplement { m: 4 }, row_swap_times(&alt(4)?)?)?,
        ),
        (Table1Row::Octahedron, entry("Octahedron, S2 wr S3", Family::Octahedron, octahedral())?),
        (
            Table1Row::Hamming23,
            entry(
                "H(2,3), S3 wr S2",
                Family::Hamming { d: 2, q: 3 },
                build_graph(&Family::Hamming { d: 2, q: 3 })?.group(),
            )?,
        ),
        (Table1Row::LineGraph, entry("L(Petersen), S5", line, line_group(&petersen, &petersen_s5())?)?),
        (
            Table1Row::GridComplement5,
            entry("GC(5), S2 x AGL(1,5)", Family::GridComplement { m: 5 }, row_swap_times(&agl1(5)?)?)?,
        ),
        (Table1Row::Icosahedron, entry("Icosahedron, A5", Family::Icosahedron, icosahedral_rotations())?),
        (
            Table1Row::GridComplement6,
            entry("GC(6), S2 x PSL(2,5)", Family::GridComplement { m: 6 }, row_swap_times(&psl2_5())?)?,
        ),
    ])
}

/// Pairs that must match no table row.
pub fn near_misses() -> Result<Vec<CorpusEntry>> {
    Ok(vec![
        entry("K(4,4), S4 wr S2", Family::CompleteBipartite { m: 4, n: 4 }, wreath_bipartite(4)?)?,
        entry("K4, S4", Family::Complete { n: 4 }, sym(4)?)?,
        entry("K5, S5", Family::Complete { n: 5 }, sym(5)?)?,
        entry("C6, D12", Family::Cycle { n: 6 }, dihedral(6)?)?,
    ])
}

/// Every (graph, group) pair the claim verifiers run over.
pub fn corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for m in 4..=8 {
        out.push(entry(format!("GC({m}), S2 x S{m}"), Family::GridComplement { m }, wreath_grid(m)?)?);
    }
    for (row, e) in table1_instances()? {
        if !matches!(row, Table1Row::Octahedron) {
            out.push(e);
        }
    }
    for d in 3..=7 {
        out.push(entry(format!("H({d},2), S2 wr S{d}"), Family::Hamming { d, q: 2 }, wreath_hamming(&sym(d)?, d)?)?);
    }
    out.push(entry("H(7,2), S2 wr F21", Family::Hamming { d: 7, q: 2 }, wreath_hamming(&two_homog_frobenius(7)?, 7)?)?);
    out.push(entry("H(3,2), S2 wr C3", Family::Hamming { d: 3, q: 2 }, wreath_hamming(&cyclic(3)?, 3)?)?);
    for k in 2..=5 {
        out.push(entry(
            format!("K({k},{k}), S{k} wr S2"),
            Family::CompleteBipartite { m: k, n: k },
            wreath_bipartite(k)?,
        )?);
    }
    out.push(entry("Octahedron, S2 wr S3", Family::Octahedron, octahedral())?);
    let k4 = build_graph(&Family::Complete { n: 4 })?.graph;
    out.push(entry("L(K4), S4", Family::Line { of: Box::new(Family::Complete { n: 4 }) }, line_group(&k4, &sym(4)?)?)?);
    out.push(entry("Icosahedron, S2 x A5", Family::Icosahedron, icosahedral())?);
    out.push(entry("Petersen, S5", Family::Petersen, petersen_s5())?);
    out.push(entry("C5, D10", Family::Cycle { n: 5 }, dihedral(5)?)?);
    out.extend(near_misses()?);
    Ok(out)
}

/// The corpus with each pair's report, computed once per process.
pub fn classified_corpus() -> Result<&'static [(CorpusEntry, TransitivityReport)]> {
    static CACHE: OnceLock<std::result::Result<Vec<(CorpusEntry, TransitivityReport)>, String>> = OnceLock::new();
    let cached = CACHE.get_or_init(|| {
        let run = || -> Result<Vec<(CorpusEntry, TransitivityReport)>> {
            corpus()?
                .into_iter()
                .map(|e| {
                    let r = classify_pair(&e.graph, &e.group)?;
                    Ok((e, r))
                })
                .collect()
        };
        run().map_err(|e| e.to_string())
    });
    cached.as_deref().map_err(|e| Error::Inconsistent(format!("corpus classification failed: {e}")))
}
