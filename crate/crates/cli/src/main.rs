// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `locdom` command-line front end.
//!
//! Exit codes: 0 success, 1 a checked property was violated, 2 bad usage or
//! unreadable input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use locdom::assoc::{trace_label, AssociatedGraph, CactusStats, LabeledEdge};
use locdom::bipartite::{classify, ClassificationReport};
use locdom::census::{run_census, CensusReport};
use locdom::families::{extremal, generate, FamilySpec};
use locdom::io::{export_dot, parse_graphs, serialize_graph, GraphDocument, GraphFormat, RunReport};
use locdom::ld::{lambda_bounded, lambda_bruteforce, BoundedResult, DEFAULT_ORACLE_CAP};
use locdom::verify::{run_suite, Suite, SuiteOptions, SuiteReport};
use locdom::VertexSet;

#[derive(Parser)]
#[command(name = "locdom", version, about = "Locating-dominating sets and graph complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Location-domination number of each input graph.
    Lambda {
        /// graph6 or edge-list file, `-` for stdin
        file: PathBuf,
        /// List every minimum LD-set (exhaustive, small graphs only).
        #[arg(long)]
        all_codes: bool,
        /// Only decide whether an LD-set of size at most K exists.
        #[arg(long, value_name = "K")]
        bounded: Option<usize>,
    },
    /// Compare λ(G) with λ of the complement for connected bipartite graphs.
    Classify { file: PathBuf },
    /// Associated labeled graph of a distinguishing set.
    Assoc {
        file: PathBuf,
        /// Comma-separated vertex set, e.g. 0,2,5
        #[arg(long, value_name = "LIST")]
        set: String,
        /// Write a DOT rendering to this path.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Include per-label edge counts.
        #[arg(long)]
        labels: bool,
        /// Restrict to the edges whose label lies in this subset of the set.
        #[arg(long, value_name = "LIST")]
        subgraph: Option<String>,
    },
    /// Emit a member of a named family.
    Family {
        kind: FamilyKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Emit,
    },
    /// Exhaustive check over connected bipartite graphs.
    Census {
        #[arg(long, value_name = "N")]
        max_n: usize,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Also write a per-shape CSV summary.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Run a property suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Largest order for the exhaustive suite.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Path,
    Cycle,
    Star,
    #[value(alias = "complete_bipartite")]
    CompleteBipartite,
    Bistar,
    Extremal,
    Banner,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Graph6,
    Edges,
}

fn parse_suite(name: &str) -> Result<Suite, String> {
    Suite::from_name(name).ok_or_else(|| {
        let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite `{name}`, expected one of {}", known.join(", "))
    })
}

enum Outcome {
    Clean,
    Violation,
}

fn read_input(path: &Path) -> Result<Vec<GraphDocument>> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let docs = parse_graphs(&text).with_context(|| format!("parsing {}", path.display()))?;
    if docs.is_empty() {
        bail!("{} contains no graph", path.display());
    }
    Ok(docs)
}

fn parse_list(text: &str) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: usize = item.parse().with_context(|| format!("bad vertex `{item}`"))?;
        if v >= locdom::MAX_VERTICES {
            bail!("vertex {v} is out of range");
        }
        set.insert(v);
    }
    Ok(set)
}

fn command_line() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn report<T: Serialize>(entries: Vec<T>) -> Result<()> {
    emit_json(&RunReport::new(command_line(), entries), None)
}

#[derive(Serialize)]
struct LambdaEntry {
    name: Option<String>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_codes: Option<Vec<VertexSet>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounded: Option<BoundedResult>,
}

fn lambda_cmd(file: &Path, all_codes: bool, bounded: Option<usize>) -> Result<Outcome> {
    let mut entries = Vec::new();
    for doc in read_input(file)? {
        let g = &doc.graph;
        let n = g.order();
        let mut entry = LambdaEntry {
            name: doc.name,
            n,
            lambda: None,
            witness: None,
            all_codes: None,
            bounded: None,
        };
        if let Some(k) = bounded {
            entry.bounded = Some(lambda_bounded(g, k));
        } else if all_codes || n <= DEFAULT_ORACLE_CAP {
            let exact = lambda_bruteforce(g, all_codes)?;
            entry.lambda = Some(exact.lambda);
            entry.witness = Some(exact.witness);
            entry.all_codes = exact.all_codes;
        } else {
            let search = lambda_bounded(g, n);
            entry.lambda = search.size;
            entry.witness = search.witness;
        }
        entries.push(entry);
    }
    report(entries)?;
    Ok(Outcome::Clean)
}

#[derive(Serialize)]
struct ClassifyEntry {
    name: Option<String>,
    #[serde(flatten)]
    report: ClassificationReport,
}

fn classify_cmd(file: &Path) -> Result<Outcome> {
    let mut entries = Vec::new();
    let mut outcome = Outcome::Clean;
    for doc in read_input(file)? {
        let report = classify(&doc.graph)
            .with_context(|| format!("classifying {}", doc.name.as_deref().unwrap_or("input")))?;
        if report.prediction_holds() == Some(false) {
            outcome = Outcome::Violation;
        }
        entries.push(ClassifyEntry {
            name: doc.name,
            report,
        });
    }
    report(entries)?;
    Ok(outcome)
}

#[derive(Serialize)]
struct AssocVertex {
    vertex: usize,
    level: usize,
    trace: String,
}

#[derive(Serialize)]
struct AssocSubgraph {
    labels: VertexSet,
    edges: Vec<LabeledEdge>,
    components: Vec<VertexSet>,
    component_traces: Vec<VertexSet>,
    component_trace_check: bool,
    cactus: CactusStats,
}

#[derive(Serialize)]
struct AssocEntry {
    name: Option<String>,
    set: VertexSet,
    k: usize,
    vertices: Vec<AssocVertex>,
    edges: Vec<LabeledEdge>,
    parity_audit: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    label_multiplicity: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subgraph: Option<AssocSubgraph>,
}

fn assoc_cmd(
    file: &Path,
    set: &str,
    dot: Option<&Path>,
    labels: bool,
    subgraph: Option<&str>,
) -> Result<Outcome> {
    let s = parse_list(set)?;
    let selection = subgraph.map(parse_list).transpose()?;
    let docs = read_input(file)?;
    if dot.is_some() && docs.len() > 1 {
        bail!("--dot needs a single input graph");
    }
    let mut entries = Vec::new();
    let mut outcome = Outcome::Clean;
    for doc in docs {
        let g = &doc.graph;
        if let Some(v) = (s - g.vertices()).first() {
            bail!("vertex {v} is not in a graph of order {}", g.order());
        }
        let ag = AssociatedGraph::build(g, s)?;
        if let Some(path) = dot {
            fs::write(path, export_dot(&ag)).with_context(|| format!("writing {}", path.display()))?;
        }
        let parity = ag.parity_audit();
        if !parity {
            outcome = Outcome::Violation;
        }
        let sub = match selection {
            Some(sel) => {
                let h = ag.label_subgraph(sel)?;
                if !h.component_trace_check() {
                    outcome = Outcome::Violation;
                }
                Some(AssocSubgraph {
                    labels: sel,
                    edges: h.edges().to_vec(),
                    components: h.incident_components(),
                    component_traces: h.component_traces(),
                    component_trace_check: h.component_trace_check(),
                    cactus: h.cactus_stats(),
                })
            }
            None => None,
        };
        entries.push(AssocEntry {
            name: doc.name,
            set: s,
            k: ag.k(),
            vertices: ag
                .vertices()
                .iter()
                .map(|x| AssocVertex {
                    vertex: x,
                    level: ag.level(x),
                    trace: trace_label(ag.trace(x)),
                })
                .collect(),
            edges: ag.edges().to_vec(),
            parity_audit: parity,
            label_multiplicity: labels.then(|| ag.label_multiplicity().into_iter().collect()),
            subgraph: sub,
        });
    }
    report(entries)?;
    Ok(outcome)
}

fn family_spec(kind: FamilyKind, n: Option<usize>, r: Option<usize>, s: Option<usize>) -> Result<FamilySpec> {
    let need_n = || n.context("this family needs --n");
    let need_rs = || -> Result<(usize, usize)> {
        Ok((r.context("this family needs --r")?, s.context("this family needs --s")?))
    };
    Ok(match kind {
        FamilyKind::Path => FamilySpec::Path { n: need_n()? },
        FamilyKind::Cycle => FamilySpec::Cycle { n: need_n()? },
        FamilyKind::Star => FamilySpec::Star { n: need_n()? },
        FamilyKind::CompleteBipartite => {
            let (r, s) = need_rs()?;
            FamilySpec::CompleteBipartite { r, s }
        }
        FamilyKind::Bistar => {
            let (r, s) = need_rs()?;
            FamilySpec::Bistar { r, s }
        }
        FamilyKind::Extremal => {
            let (r, s) = need_rs()?;
            FamilySpec::Extremal { r, s }
        }
        FamilyKind::Banner => FamilySpec::Banner,
    })
}

fn family_cmd(kind: FamilyKind, n: Option<usize>, r: Option<usize>, s: Option<usize>, emit: Emit) -> Result<Outcome> {
    let spec = family_spec(kind, n, r, s)?;
    let g = match spec {
        FamilySpec::Extremal { r, s } => extremal(r, s)?.graph,
        other => generate(&other)?,
    };
    let format = match emit {
        Emit::Graph6 => GraphFormat::Graph6,
        Emit::Edges => GraphFormat::EdgeList,
    };
    io::stdout().write_all(serialize_graph(&g, format).as_bytes())?;
    Ok(Outcome::Clean)
}

#[derive(Serialize)]
struct ShapeRow {
    r: usize,
    s: usize,
    instances: usize,
    minus_one: usize,
    zero: usize,
    plus_one: usize,
}

fn write_csv(path: &Path, census: &CensusReport) -> Result<()> {
    let mut writer = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    for shape in &census.shapes {
        writer.serialize(ShapeRow {
            r: shape.r,
            s: shape.s,
            instances: shape.instances,
            minus_one: shape.relations.minus_one,
            zero: shape.relations.zero,
            plus_one: shape.relations.plus_one,
        })?;
    }
    writer.flush()?;
    Ok(())
}

fn census_cmd(max_n: usize, jobs: usize, out: Option<&Path>, csv_path: Option<&Path>) -> Result<Outcome> {
    if !(4..=10).contains(&max_n) {
        bail!("--max-n must lie in 4..=10");
    }
    let start = Instant::now();
    let census = run_census(max_n, jobs);
    eprintln!(
        "census: {} graphs up to n = {max_n} in {:.2?}, {} violations",
        census.instances,
        start.elapsed(),
        census.violations.len()
    );
    if let Some(path) = csv_path {
        write_csv(path, &census)?;
    }
    let clean = census.violations.is_empty();
    emit_json(&RunReport::new(command_line(), vec![census]), out)?;
    Ok(if clean { Outcome::Clean } else { Outcome::Violation })
}

fn verify_cmd(suite: Suite, seed: u64, trials: usize, max_n: usize) -> Result<Outcome> {
    if max_n > 8 {
        bail!("--max-n above 8 is not supported by the exhaustive enumeration");
    }
    let start = Instant::now();
    let result: SuiteReport = run_suite(suite, &SuiteOptions { seed, trials, max_n });
    eprintln!(
        "{}: {} instances in {:.2?}, {} violations",
        suite.name(),
        result.checked,
        start.elapsed(),
        result.violations.len()
    );
    let clean = result.passed();
    report(vec![result])?;
    Ok(if clean { Outcome::Clean } else { Outcome::Violation })
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Lambda { file, all_codes, bounded } => lambda_cmd(&file, all_codes, bounded),
        Command::Classify { file } => classify_cmd(&file),
        Command::Assoc { file, set, dot, labels, subgraph } => {
            assoc_cmd(&file, &set, dot.as_deref(), labels, subgraph.as_deref())
        }
        Command::Family { kind, n, r, s, emit } => family_cmd(kind, n, r, s, emit),
        Command::Census { max_n, jobs, out, csv } => census_cmd(max_n, jobs, out.as_deref(), csv.as_deref()),
        Command::Verify { suite, seed, trials, max_n } => verify_cmd(suite, seed, trials, max_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
