//! Command-line front end: edge-list ingestion, subcommand dispatch,
//! structured certificate/witness output, and grep-style exit codes
//! (0 = yes/success, 1 = no/certificate, 2 = usage or parse failure).

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use brute_oracle as oracle;
use graph_core::{parse::parse_edge_list, Graph};
use interval_mod::certificate::Certificate;
use interval_mod::decompose::{decompose, Decomposition, DecomposeError};
use interval_mod::interval::{model_from_path, recognize_interval, IntervalModel};
use interval_mod::solvers::{
    approx_vertex_deletion, completion, edge_deletion, solve_minimum, vertex_deletion, Answer,
    ModSet, Op, SolverOutcome, SolverVariant,
};

#[derive(Parser)]
#[command(
    name = "interval-cli",
    version,
    about = "Interval graph recognition, modification, and decomposition"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Decision budget (number of allowed modifications)
    #[arg(long, global = true)]
    k: Option<usize>,

    /// Scan budgets upward and report the minimum instead of deciding
    #[arg(long, global = true)]
    min: bool,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed recorded in the report (for randomized harnesses)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for the minimum scan; 1 keeps witnesses
    /// deterministic
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Recognize an interval graph: model on yes, certificate on no
    Recognize { input: PathBuf },
    /// Interval vertex deletion
    VertexDel { input: PathBuf },
    /// Interval edge deletion
    EdgeDel { input: PathBuf },
    /// Interval completion
    Complete { input: PathBuf },
    /// Ratio-8 approximation for vertex deletion
    ApproxVd { input: PathBuf },
    /// Clique decomposition of a prime locally interval graph
    Decompose { input: PathBuf },
    /// Brute-force reference optimum for one variant
    Oracle {
        variant: OracleVariant,
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleVariant {
    Vd,
    Ed,
    Complete,
}

/// Serializable run report. Sections that do not apply are omitted, never
/// null; contents are deterministic for fixed inputs in single-threaded
/// mode (timing goes to standard error only).
#[derive(Serialize)]
struct Report {
    result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    modifications: Option<Vec<Value>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_model: Option<Vec<Value>>,
    stats: Stats,
}

#[derive(Serialize)]
struct Stats {
    subcommand: &'static str,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

impl Report {
    fn new(result: &'static str, stats: Stats) -> Self {
        Report {
            result,
            k: None,
            modifications: None,
            certificate: None,
            witness_model: None,
            stats,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((report, code, extra_text)) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                ),
                Format::Text => {
                    print_text(&report);
                    if let Some(extra) = extra_text {
                        print!("{extra}");
                    }
                }
            }
            eprintln!("time: {} ms", start.elapsed().as_millis());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print_text(r: &Report) {
    println!("result: {}", r.result);
    if let Some(k) = r.k {
        println!("k: {k}");
    }
    if let Some(mods) = &r.modifications {
        let parts: Vec<String> = mods
            .iter()
            .map(|m| {
                let arr = m.as_array().expect("modification tuple");
                arr.iter()
                    .map(|x| match x {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        println!("modifications: {}", parts.join("; "));
    }
    if let Some(cert) = &r.certificate {
        println!(
            "certificate: {} {}",
            cert["kind"].as_str().unwrap_or("?"),
            cert["vertices"]
        );
    }
    if let Some(model) = &r.witness_model {
        println!("witness_model:");
        for line in model {
            let arr = line.as_array().expect("model row");
            println!(
                "  {} {} {}",
                arr[0],
                arr[1].as_str().unwrap_or("?"),
                arr[2].as_str().unwrap_or("?")
            );
        }
    }
    let s = &r.stats;
    print!("stats: subcommand={} n={} m={}", s.subcommand, s.n, s.m);
    if let Some(nodes) = s.nodes {
        print!(" nodes={nodes}");
    }
    if let Some(d) = s.max_depth {
        print!(" max_depth={d}");
    }
    if let Some(seed) = s.seed {
        print!(" seed={seed}");
    }
    println!();
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading standard input")?;
        buf
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_edge_list(&text).map_err(|e| anyhow!("parsing {}: {e}", path.display()))
}

fn cert_value(c: &Certificate) -> Value {
    json!({ "kind": c.kind.name(), "vertices": c.vertices })
}

fn model_value(m: &IntervalModel) -> Vec<Value> {
    m.intervals
        .iter()
        .enumerate()
        .map(|(v, (lo, hi))| json!([v, lo.to_string(), hi.to_string()]))
        .collect()
}

fn modset_value(ms: &ModSet) -> Vec<Value> {
    ms.ops
        .iter()
        .map(|op| match *op {
            Op::DelVertex(v) => json!(["del_vertex", v]),
            Op::DelEdge(u, v) => json!(["del_edge", u, v]),
            Op::AddEdge(u, v) => json!(["add_edge", u, v]),
        })
        .collect()
}

fn run(cli: &Cli) -> Result<(Report, u8, Option<String>)> {
    match &cli.cmd {
        Cmd::Recognize { input } => {
            let g = read_graph(input)?;
            let stats = base_stats("recognize", &g, cli.seed);
            match recognize_interval(&g) {
                Ok(dec) => {
                    let model = model_from_path(&dec);
                    let mut r = Report::new("yes", stats);
                    r.witness_model = Some(model_value(&model));
                    Ok((r, 0, None))
                }
                Err(cert) => {
                    let mut r = Report::new("no", stats);
                    r.certificate = Some(cert_value(&cert));
                    Ok((r, 1, None))
                }
            }
        }
        Cmd::VertexDel { input } => solver_cmd(cli, input, SolverVariant::VertexDeletion),
        Cmd::EdgeDel { input } => solver_cmd(cli, input, SolverVariant::EdgeDeletion),
        Cmd::Complete { input } => solver_cmd(cli, input, SolverVariant::Completion),
        Cmd::ApproxVd { input } => {
            let g = read_graph(input)?;
            let del = approx_vertex_deletion(&g);
            let ms = ModSet::vertex_deletions(del);
            let (h, _) = ms.apply(&g);
            let dec = recognize_interval(&h)
                .map_err(|_| anyhow!("approximation produced a non-interval graph"))?;
            let mut r = Report::new("yes", base_stats("approx-vd", &g, cli.seed));
            r.k = Some(ms.len());
            r.witness_model = Some(model_value(&model_from_path(&dec)));
            r.modifications = Some(modset_value(&ms));
            Ok((r, 0, None))
        }
        Cmd::Decompose { input } => {
            let g = read_graph(input)?;
            let stats = base_stats("decompose", &g, cli.seed);
            match decompose(&g) {
                Ok(dec) => {
                    let (shape, cd) = match &dec {
                        Decomposition::Ring(r) => ("olive-ring", &r.dec),
                        Decomposition::Caterpillar(cd) => ("caterpillar", cd),
                    };
                    let mut text = format!("shape: {shape}\nmain bags: {}\n", cd.main_len);
                    for (i, bag) in cd.bags.iter().enumerate() {
                        let tag = if i < cd.main_len { "main" } else { "pendant" };
                        text.push_str(&format!("  bag {i} ({tag}): {bag:?}\n"));
                    }
                    Ok((Report::new("yes", stats), 0, Some(text)))
                }
                Err(DecomposeError::Forbidden(cert)) => {
                    let mut r = Report::new("no", stats);
                    r.certificate = Some(cert_value(&cert));
                    Ok((r, 1, None))
                }
                Err(e) => Err(anyhow!("decomposition precondition: {e}")),
            }
        }
        Cmd::Oracle { variant, input } => {
            let g = read_graph(input)?;
            let (ov, name) = match variant {
                OracleVariant::Vd => (oracle::Variant::VertexDeletion, "oracle"),
                OracleVariant::Ed => (oracle::Variant::EdgeDeletion, "oracle"),
                OracleVariant::Complete => (oracle::Variant::Completion, "oracle"),
            };
            let cap = cli.k.unwrap_or_else(|| natural_cap(&g, ov));
            let stats = base_stats(name, &g, cli.seed);
            let found = oracle::brute_minimum(&g, ov, cap)
                .map_err(|e| anyhow!("oracle refused the instance: {e}"))?;
            match found {
                Some(res) => {
                    let mut r = Report::new("yes", stats);
                    r.k = Some(res.optimum);
                    r.modifications = Some(witness_value(&res.witness, ov));
                    Ok((r, 0, None))
                }
                None => {
                    let mut r = Report::new("no", stats);
                    r.k = Some(cap);
                    Ok((r, 1, None))
                }
            }
        }
    }
}

fn witness_value(w: &oracle::Witness, ov: oracle::Variant) -> Vec<Value> {
    match w {
        oracle::Witness::Vertices(vs) => {
            vs.iter().map(|&v| json!(["del_vertex", v])).collect()
        }
        oracle::Witness::Edges(es) => es
            .iter()
            .map(|&(u, v)| match ov {
                oracle::Variant::Completion => json!(["add_edge", u, v]),
                _ => json!(["del_edge", u, v]),
            })
            .collect(),
    }
}

fn base_stats(subcommand: &'static str, g: &Graph, seed: Option<u64>) -> Stats {
    Stats {
        subcommand,
        n: g.n(),
        m: g.m(),
        nodes: None,
        max_depth: None,
        seed,
    }
}

fn natural_cap(g: &Graph, ov: oracle::Variant) -> usize {
    match ov {
        oracle::Variant::VertexDeletion => g.n(),
        oracle::Variant::EdgeDeletion => g.m(),
        oracle::Variant::Completion => g.n() * g.n().saturating_sub(1) / 2 - g.m(),
    }
}

fn decide(g: &Graph, variant: SolverVariant, k: usize) -> SolverOutcome {
    match variant {
        SolverVariant::VertexDeletion => vertex_deletion(g, k),
        SolverVariant::EdgeDeletion => edge_deletion(g, k),
        SolverVariant::Completion => completion(g, k),
    }
}

fn solver_cmd(cli: &Cli, input: &PathBuf, variant: SolverVariant) -> Result<(Report, u8, Option<String>)> {
    let g = read_graph(input)?;
    let subcommand = match variant {
        SolverVariant::VertexDeletion => "vertex-del",
        SolverVariant::EdgeDeletion => "edge-del",
        SolverVariant::Completion => "complete",
    };
    let ov = match variant {
        SolverVariant::VertexDeletion => oracle::Variant::VertexDeletion,
        SolverVariant::EdgeDeletion => oracle::Variant::EdgeDeletion,
        SolverVariant::Completion => oracle::Variant::Completion,
    };
    let outcome = if cli.min {
        let cap = cli.k.unwrap_or_else(|| natural_cap(&g, ov));
        minimum_scan(&g, variant, cap, cli.threads)
    } else {
        decide(&g, variant, cli.k.unwrap_or(0))
    };
    let mut stats = base_stats(subcommand, &g, cli.seed);
    stats.nodes = Some(outcome.stats.nodes);
    stats.max_depth = Some(outcome.stats.max_depth);
    match outcome.answer {
        Answer::Yes(ms) => {
            // round-trip verification: re-apply and re-recognize
            let (h, _) = ms.apply(&g);
            let dec = recognize_interval(&h)
                .map_err(|_| anyhow!("round-trip verification failed"))?;
            let mut r = Report::new("yes", stats);
            r.k = Some(if cli.min { ms.len() } else { cli.k.unwrap_or(0) });
            r.modifications = Some(modset_value(&ms));
            r.witness_model = Some(model_value(&model_from_path(&dec)));
            Ok((r, 0, None))
        }
        Answer::No => {
            let mut r = Report::new("no", stats);
            r.k = Some(cli.k.unwrap_or(0));
            Ok((r, 1, None))
        }
    }
}

/// Minimum scan: sequential by default; with more threads, budgets are
/// probed speculatively in parallel and the smallest feasible one is
/// re-solved (same answer, deterministic witness).
fn minimum_scan(g: &Graph, variant: SolverVariant, cap: usize, threads: usize) -> SolverOutcome {
    if threads <= 1 {
        return solve_minimum(g, variant, cap);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let found = pool.install(|| {
        use rayon::prelude::*;
        (0..=cap)
            .into_par_iter()
            .find_first(|&k| decide(g, variant, k).is_yes())
    });
    decide(g, variant, found.unwrap_or(cap))
}
