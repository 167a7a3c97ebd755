//! The `symclass` command line.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::autgroup::{automorphism_group, is_isomorphic};
use crate::classify::{
    claim_description, classify_pair_with_budget, table1_instances, verify_all, verify_paper, Budget, PaperVerdict,
    TransitivityReport, CLAIMS,
};
use crate::error::{Error, Result};
use crate::families::{
    agl1, alt, build_graph, cyclic, dihedral, icosahedral, icosahedral_rotations, line_group, octahedral, petersen_s5,
    psl2_5, row_swap_times, sym, two_homog_frobenius, wreath_bipartite, wreath_grid, wreath_hamming, Family,
};
use crate::graph::{edgelist, graph6, Graph};
use crate::permgroup::{parse_generator_file, write_generator_file, PermutationGroup};

#[derive(Parser, Debug)]
#[command(name = "symclass", version, about = "Graph symmetry and 2-distance transitivity classification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family graph and print it.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
        /// Also print the family's natural generators.
        #[arg(long)]
        with_group: bool,
    },
    /// Classify a (graph, group) pair.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long, env = "SYMCLASS_BUDGET", value_parser = parse_budget, default_value = "subgroups=400,triples=128")]
        budget: Budget,
    },
    /// Automorphism group of a graph: order and generators.
    Autgroup {
        /// graph6 string.
        graph6: Option<String>,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Isomorphism test between two graph6 strings.
    Iso {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Run claim verifiers.
    VerifyPaper {
        /// Claim identifiers; see `--list`.
        claims: Vec<String>,
        #[arg(long)]
        all: bool,
        /// Print the known claim identifiers.
        #[arg(long)]
        list: bool,
        /// Report runtime_ms as 0 so that output is byte-identical across runs.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long, env = "SYMCLASS_BUDGET", value_parser = parse_budget, default_value = "subgroups=400,triples=128")]
        budget: Budget,
    },
    /// Classification table for the row instances plus every claim verdict.
    Report {
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        #[arg(long, env = "SYMCLASS_BUDGET", value_parser = parse_budget, default_value = "subgroups=400,triples=128")]
        budget: Budget,
    },
}

fn parse_budget(s: &str) -> std::result::Result<Budget, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edges,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Args, Debug, Clone, Default)]
pub struct FamilyArgs {
    /// grid, grid_complement, hamming, complete, complete_bipartite, cycle,
    /// octahedron, icosahedron, petersen.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    /// Take the line graph of the family member.
    #[arg(long)]
    pub line: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GraphArgs {
    #[arg(long = "graph6", conflicts_with_all = ["edges", "family"])]
    pub graph6_text: Option<String>,
    /// Edge-list file.
    #[arg(long, conflicts_with = "family")]
    pub edges: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GroupArgs {
    /// Generator file.
    #[arg(long, conflicts_with = "group")]
    pub generators: Option<PathBuf>,
    /// Group name, resolved against the family (see README).
    #[arg(long)]
    pub group: Option<String>,
}

/// Where a graph comes from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    Graph6(String),
    EdgeList(String),
    Family(Family),
}

/// Where a group comes from.
#[derive(Clone, Debug)]
pub enum GroupSource {
    GeneratorFile(String),
    Named(String),
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::InvalidParameter(format!("family {family} needs --{flag}")))
}

/// Family from command-line parameters.
pub fn family_from_args(args: &FamilyArgs) -> Result<Option<Family>> {
    let Some(name) = args.family.as_deref() else { return Ok(None) };
    let name = name.to_ascii_lowercase().replace('-', "_");
    let base = match name.as_str() {
        "grid" => Family::Grid { n: need(args.n, "n", &name)?, m: need(args.m, "m", &name)? },
        "grid_complement" | "gc" => Family::GridComplement { m: need(args.m.or(args.n), "m", &name)? },
        "hamming" => Family::Hamming { d: need(args.d, "d", &name)?, q: need(args.q, "q", &name)? },
        "complete" => Family::Complete { n: need(args.n, "n", &name)? },
        "complete_bipartite" => {
            let m = need(args.m.or(args.n), "m", &name)?;
            Family::CompleteBipartite { m, n: args.n.unwrap_or(m) }
        }
        "cycle" => Family::Cycle { n: need(args.n, "n", &name)? },
        "octahedron" => Family::Octahedron,
        "icosahedron" => Family::Icosahedron,
        "petersen" => Family::Petersen,
        other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
    };
    Ok(Some(if args.line { Family::Line { of: Box::new(base) } } else { base }))
}

fn split_number<'a>(name: &'a str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix).and_then(|rest: &'a str| rest.trim_start_matches('_').parse().ok())
}

/// Groups named without reference to a family.
fn abstract_group(name: &str) -> Result<PermutationGroup> {
    if let Some(n) = split_number(name, "sym") {
        return sym(n);
    }
    if let Some(n) = split_number(name, "alt") {
        return alt(n);
    }
    if let Some(n) = split_number(name, "cyclic") {
        return cyclic(n);
    }
    if let Some(n) = split_number(name, "dihedral") {
        return dihedral(n);
    }
    if let Some(p) = split_number(name, "agl1") {
        return agl1(p);
    }
    if let Some(p) = split_number(name, "frob") {
        return two_homog_frobenius(p);
    }
    match name {
        "psl2_5" => Ok(psl2_5()),
        "octahedral" => Ok(octahedral()),
        "icosahedral" => Ok(icosahedral()),
        _ => Err(Error::InvalidParameter(format!("unknown group `{name}`"))),
    }
}

/// Resolves a group name against a family: `full` is the family's natural
/// group; `alt5` on the icosahedron is the rotation group; `sym5` on the
/// Petersen graph acts on 2-subsets; `s2x<H>` on grid_complement(m) is the row
/// swap times `H`; `s2wr<H>` on hamming(d,2) is the wreath product; names on a
/// line graph are resolved on the underlying graph and induced on edges.
pub fn resolve_group(name: &str, family: Option<&Family>) -> Result<PermutationGroup> {
    let name = name.to_ascii_lowercase().replace('-', "_");
    let Some(family) = family else { return abstract_group(&name) };
    if name == "full" || name == "natural" {
        return Ok(build_graph(family)?.group());
    }
    match family {
        Family::Line { of } => {
            let base = build_graph(of)?.graph;
            return line_group(&base, &resolve_group(&name, Some(of))?);
        }
        Family::Icosahedron => match name.as_str() {
            "alt5" | "rotations" => return Ok(icosahedral_rotations()),
            "s2xalt5" | "icosahedral" => return Ok(icosahedral()),
            _ => {}
        },
        Family::Petersen if name == "sym5" => return Ok(petersen_s5()),
        Family::Octahedron if name == "s2wrsym3" || name == "octahedral" => return Ok(octahedral()),
        &Family::GridComplement { m } => {
            if let Some(h) = name.strip_prefix("s2x") {
                return row_swap_times(&abstract_group(h)?);
            }
            if name == "wreath_grid" {
                return wreath_grid(m);
            }
        }
        &Family::Hamming { d, q: 2 } => {
            if let Some(h) = name.strip_prefix("s2wr") {
                return wreath_hamming(&abstract_group(h)?, d);
            }
        }
        &Family::CompleteBipartite { m, n } if m == n && name == "wreath_bipartite" => return wreath_bipartite(m),
        _ => {}
    }
    abstract_group(&name)
}

/// Loads and validates a (graph, group) pair.
pub fn parse_inputs(graph: &GraphSource, group: &GroupSource) -> Result<(Graph, PermutationGroup)> {
    let (g, family) = match graph {
        GraphSource::Graph6(text) => (graph6::decode(text.trim())?, None),
        GraphSource::EdgeList(text) => (edgelist::parse_edge_list(text)?, None),
        GraphSource::Family(f) => (build_graph(f)?.graph, Some(f)),
    };
    let h = match group {
        GroupSource::GeneratorFile(text) => parse_generator_file(text)?,
        GroupSource::Named(name) if family.is_none() && matches!(name.as_str(), "full" | "natural") => {
            if g.order() == 0 {
                return Err(Error::EmptyDegree);
            }
            automorphism_group(&g)?
        }
        GroupSource::Named(name) => resolve_group(name, family)?,
    };
    if g.order() == 0 {
        return Err(Error::EmptyDegree);
    }
    if h.degree() != g.order() {
        return Err(Error::DegreeMismatch { expected: g.order(), found: h.degree() });
    }
    if let Some(index) = h.generators().iter().position(|p| !g.is_automorphism(p)) {
        return Err(Error::NotAutomorphism { index });
    }
    Ok((g, h))
}

fn graph_source(args: &GraphArgs, positional: Option<&String>) -> Result<GraphSource> {
    if let Some(text) = positional.or(args.graph6_text.as_ref()) {
        return Ok(GraphSource::Graph6(text.clone()));
    }
    if let Some(path) = &args.edges {
        return Ok(GraphSource::EdgeList(fs::read_to_string(path)?));
    }
    match family_from_args(&args.family)? {
        Some(f) => Ok(GraphSource::Family(f)),
        None => Err(Error::InvalidParameter("no graph given: use --graph6, --edges or --family".into())),
    }
}

fn group_source(args: &GroupArgs) -> Result<GroupSource> {
    if let Some(path) = &args.generators {
        return Ok(GroupSource::GeneratorFile(fs::read_to_string(path)?));
    }
    match &args.group {
        Some(name) => Ok(GroupSource::Named(name.clone())),
        None => Err(Error::InvalidParameter("no group given: use --generators or --group".into())),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

/// One-line verdict used by both output formats.
pub fn verdict_line(r: &TransitivityReport) -> String {
    match (r.s_distance_transitive[1], r.s_arc_transitive[1]) {
        (false, _) => "not (G,2)-distance transitive".into(),
        (true, true) => "(G,2)-distance transitive and (G,2)-arc transitive".into(),
        (true, false) => "(G,2)-distance transitive, not (G,2)-arc transitive".into(),
    }
}

fn girth_text(g: Option<usize>) -> String {
    g.map_or("inf".into(), |x| x.to_string())
}

fn classify_table(graph: &str, r: &TransitivityReport) -> String {
    let mut out = String::new();
    out.push_str("graph | valency | girth | |G| | row\n");
    let row = r.table1_match.map_or("-".into(), |m| m.to_string());
    out.push_str(&format!("{graph} | {} | {} | {} | {row}\n", r.valency, girth_text(r.girth), r.group_order));
    out.push_str(&format!("verdict: {}\n", verdict_line(r)));
    out.push_str(&format!(
        "vertex transitive: {}; 1-DT: {}; 2-DT: {}; 1-AT: {}; 2-AT: {}; 2-geodesic transitive: {}\n",
        r.vertex_transitive,
        r.s_distance_transitive[0],
        r.s_distance_transitive[1],
        r.s_arc_transitive[0],
        r.s_arc_transitive[1],
        r.two_geodesic_transitive.map_or("n/a".into(), |b| b.to_string())
    ));
    out.push_str(&format!(
        "diameter: {}; layer sizes: {:?}; c2: {}\n",
        r.diameter,
        r.layer_sizes,
        r.c2().map_or("-".into(), |c| c.to_string())
    ));
    out
}

fn verdicts_table(verdicts: &[PaperVerdict]) -> String {
    let mut out = String::from("claim | status | detail\n");
    for v in verdicts {
        let detail = v.reason.clone().unwrap_or_else(|| claim_description(&v.claim).unwrap_or("").to_string());
        let status = serde_json::to_value(v.status).expect("status").as_str().unwrap_or("").to_string();
        out.push_str(&format!("{} | {status} | {detail}\n", v.claim));
    }
    out
}

fn graph_name(source: &GraphSource) -> String {
    match source {
        GraphSource::Graph6(s) => s.trim().to_string(),
        GraphSource::EdgeList(_) => "edge list".into(),
        GraphSource::Family(f) => f.to_string(),
    }
}

fn run_verify(claims: &[String], all: bool, budget: &Budget, no_timing: bool) -> Result<Vec<PaperVerdict>> {
    let mut verdicts = if all {
        verify_all(budget)?
    } else if claims.is_empty() {
        return Err(Error::InvalidParameter("name at least one claim or pass --all".into()));
    } else {
        claims.iter().map(|c| verify_paper(c, budget)).collect::<Result<Vec<_>>>()?
    };
    if no_timing {
        verdicts.iter_mut().for_each(|v| v.runtime_ms = 0);
    }
    Ok(verdicts)
}

/// Runs a parsed command, writing its output; returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Construct { family, format, with_group } => {
            let f =
                family_from_args(family)?.ok_or_else(|| Error::InvalidParameter("construct needs --family".into()))?;
            let built = build_graph(&f)?;
            let text = match format {
                GraphFormat::Graph6 => graph6::encode(&built.graph) + "\n",
                GraphFormat::Edges => edgelist::write_edge_list(&built.graph),
                GraphFormat::Json => {
                    let mut v = json!({
                        "family": f.to_string(),
                        "vertices": built.graph.order(),
                        "edges": built.graph.edges(),
                        "labels": built.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "graph6": graph6::encode(&built.graph),
                    });
                    if *with_group {
                        let group = built.group();
                        v["group"] = json!({
                            "degree": group.degree(),
                            "order": group.order(),
                            "generators": group.generator_strings(),
                        });
                    }
                    pretty(&v)
                }
            };
            out.write_all(text.as_bytes())?;
            if *with_group && *format != GraphFormat::Json {
                out.write_all(write_generator_file(&built.group()).as_bytes())?;
            }
            Ok(0)
        }
        Command::Classify { graph, group, format, budget } => {
            let gs = graph_source(graph, None)?;
            let (g, h) = parse_inputs(&gs, &group_source(group)?)?;
            let report = classify_pair_with_budget(&g, &h, budget)?;
            let name = graph_name(&gs);
            let text = match format {
                OutputFormat::Json => pretty(&json!({
                    "graph": name,
                    "verdict": verdict_line(&report),
                    "report": report,
                })),
                OutputFormat::Table => classify_table(&name, &report),
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Autgroup { graph6: positional, graph, format } => {
            let g = match graph_source(graph, positional.as_ref())? {
                GraphSource::Graph6(t) => graph6::decode(t.trim())?,
                GraphSource::EdgeList(t) => edgelist::parse_edge_list(&t)?,
                GraphSource::Family(f) => build_graph(&f)?.graph,
            };
            let aut = automorphism_group(&g)?;
            let text = match format {
                OutputFormat::Json => pretty(&json!({
                    "vertices": g.order(),
                    "order": aut.order(),
                    "generators": aut.generator_strings(),
                })),
                OutputFormat::Table => {
                    let mut s = format!("order: {}\n", aut.order());
                    for line in aut.generator_strings() {
                        s.push_str(&line);
                        s.push('\n');
                    }
                    s
                }
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Iso { first, second, format } => {
            let (a, b) = (graph6::decode(first.trim())?, graph6::decode(second.trim())?);
            let witness = is_isomorphic(&a, &b)?;
            let text = match format {
                OutputFormat::Json => pretty(&json!({
                    "isomorphic": witness.is_some(),
                    "witness": witness.as_ref().map(|p| p.images().to_vec()),
                })),
                OutputFormat::Table => match &witness {
                    Some(p) => format!("isomorphic\nwitness: {:?}\n", p.images()),
                    None => "not isomorphic\n".into(),
                },
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::VerifyPaper { claims, all, list, no_timing, format, budget } => {
            if *list {
                for c in CLAIMS {
                    writeln!(out, "{c}\t{}", claim_description(c).unwrap_or(""))?;
                }
                return Ok(0);
            }
            let verdicts = run_verify(claims, *all, budget, *no_timing)?;
            let text = match format {
                OutputFormat::Json => pretty(&serde_json::to_value(&verdicts).expect("verdicts serialize")),
                OutputFormat::Table => verdicts_table(&verdicts),
            };
            out.write_all(text.as_bytes())?;
            Ok(if verdicts.iter().all(PaperVerdict::is_acceptable) { 0 } else { 1 })
        }
        Command::Report { no_timing, format, budget } => {
            let mut rows = Vec::new();
            for (row, e) in table1_instances()? {
                let r = classify_pair_with_budget(&e.graph, &e.group, budget)?;
                rows.push((row, e, r));
            }
            let verdicts = run_verify(&[], true, budget, *no_timing)?;
            let text = match format {
                OutputFormat::Json => pretty(&json!({
                    "table": rows.iter().map(|(row, e, r)| json!({
                        "row": row.name(),
                        "instance": e.name,
                        "valency": r.valency,
                        "girth": r.girth,
                        "group_order": r.group_order,
                        "matched": r.table1_match,
                    })).collect::<Vec<_>>(),
                    "verdicts": verdicts,
                })),
                OutputFormat::Table => {
                    let mut s = String::from("graph | valency | girth | G | row\n");
                    for (row, e, r) in &rows {
                        let matched = r.table1_match.map_or("-".into(), |m| m.to_string());
                        s.push_str(&format!(
                            "{} | {} | {} | {} (order {}) | {matched}\n",
                            row.name(),
                            r.valency,
                            girth_text(r.girth),
                            e.name,
                            r.group_order
                        ));
                    }
                    s.push('\n');
                    s.push_str(&verdicts_table(&verdicts));
                    s
                }
            };
            out.write_all(text.as_bytes())?;
            Ok(if verdicts.iter().all(PaperVerdict::is_acceptable) { 0 } else { 1 })
        }
    }
}

/// JSON error object printed on failure.
pub fn error_json(e: &Error) -> String {
    serde_json::to_string(&json!({ "error": { "code": e.code(), "message": e.to_string() } })).expect("json")
}

/// Entry point shared by the binary: parses arguments, runs, and maps errors
/// to a JSON error object on stderr with exit status 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let mut buffer = Vec::new();
    match run(&cli, &mut buffer) {
        Ok(code) => {
            let mut out = std::io::stdout().lock();
            match out.write_all(&buffer).and_then(|()| out.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("{}", error_json(&Error::from(e)));
                    2
                }
                _ => code,
            }
        }
        Err(e) => {
            eprintln!("{}", error_json(&e));
            2
        }
    }
}
