use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use critsets::fixtures;
use critsets::generate::Model;
use critsets::graph::Graph;
use critsets::io::{parse, write_edge_list, Format};
use critsets::oracle::{OracleBudget, HARD_CAP};
use critsets::report::{analyze, AnalyzeOptions};
use critsets::verify::{parse_check_list, run_checks, CheckId, Outcome, SkipReason, VerificationReport, VerifyConfig};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BREACH: u8 = 3;

#[derive(Parser)]
#[command(name = "critsets", version, about = "Critical sets, ker, core and corona of simple graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph.
    Analyze(AnalyzeArgs),
    /// Run the check suite over fixtures, files or a random corpus.
    Verify(VerifyArgs),
    /// Write a seeded random graph as an edge list.
    Gen(GenArgs),
    /// Write the built-in example graphs as edge-list files.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input file, `-` for stdin.
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    path: Option<PathBuf>,
    /// Analyze a built-in graph instead (G1, G2, G3, Gfig3, K2, P3, K23, C5).
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, default_value = "edge-list")]
    format: Format,
    #[arg(long)]
    json: bool,
    /// Vertex limit for the exact α and Ω searches.
    #[arg(long)]
    exact_guard: Option<usize>,
    /// Add brute-force values (small graphs only).
    #[arg(long)]
    oracle: bool,
    /// Vertex limit for the oracle.
    #[arg(long)]
    oracle_limit: Option<usize>,
    /// Skip core and corona (and exact α).
    #[arg(long)]
    no_core: bool,
    /// Recompute ker vertex by vertex; exit 3 if it differs.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// `fixtures`, or edge-list files.
    #[arg(conflicts_with = "random")]
    sources: Vec<String>,
    /// Random corpus: gnp:N,P | gnm:N,M | tree:N. Graph i uses seed + i.
    #[arg(long)]
    random: Option<Model>,
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated check ids, e.g. C1,C10.
    #[arg(long)]
    checks: Option<String>,
    #[arg(long)]
    oracle_limit: Option<usize>,
    #[arg(long, default_value = "edge-list")]
    format: Format,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_parser = ["gnp", "gnm", "tree"])]
    model: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(v) => cmd_verify(v),
        Command::Gen(g) => cmd_gen(g),
        Command::Fixtures { out } => cmd_fixtures(&out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("critsets: {msg}");
            ExitCode::from(code)
        }
    }
}

type CmdResult = Result<u8, (u8, String)>;

fn usage(msg: impl ToString) -> (u8, String) {
    (EXIT_USAGE, msg.to_string())
}

fn read_graph(path: &Path, format: Format) -> Result<Graph, (u8, String)> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(usage)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    parse(&text, format).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn fixture(name: &str) -> Result<Graph, (u8, String)> {
    fixtures::graph(name).ok_or_else(|| usage(format!("unknown fixture `{name}` (known: {})", fixtures::NAMES.join(", "))))
}

fn oracle_budget(limit: Option<usize>) -> OracleBudget {
    match limit {
        None => OracleBudget::default(),
        Some(n) => {
            let d = OracleBudget::default();
            if n > d.subset_limit || n > d.matching_limit {
                eprintln!(
                    "warning: oracle limit {n} is above the defaults ({}/{}); runs may take long (hard cap {HARD_CAP})",
                    d.subset_limit, d.matching_limit
                );
            }
            OracleBudget::uniform(n)
        }
    }
}

fn cmd_analyze(a: AnalyzeArgs) -> CmdResult {
    let g = match (&a.fixture, &a.path) {
        (Some(name), _) => fixture(name)?,
        (None, Some(path)) => read_graph(path, a.format)?,
        (None, None) => return Err(usage("no input")),
    };
    let mut opts = AnalyzeOptions {
        core: !a.no_core,
        cross_check: a.cross_check,
        oracle: a.oracle.then(|| oracle_budget(a.oracle_limit)),
        ..AnalyzeOptions::default()
    };
    if let Some(n) = a.exact_guard {
        opts.alpha_guard.max_vertices = n;
        opts.enumeration_guard.max_vertices = n;
    }
    let report = analyze(&g, &opts).map_err(|e| (EXIT_BREACH, e.to_string()))?;
    if a.json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    Ok(0)
}

#[derive(Serialize, Default, Clone, Copy)]
struct Tally {
    pass: u64,
    fail: u64,
    skipped_hypothesis: u64,
    skipped_guard: u64,
    skipped_assumption: u64,
}

#[derive(Serialize)]
struct CorpusReport<'a> {
    schema: u32,
    source: String,
    seed: u64,
    graphs: usize,
    summary: BTreeMap<CheckId, Tally>,
    reports: &'a [VerificationReport],
}

fn cmd_verify(v: VerifyArgs) -> CmdResult {
    let cfg = VerifyConfig {
        checks: match &v.checks {
            Some(list) => parse_check_list(list).map_err(usage)?,
            None => CheckId::ALL.to_vec(),
        },
        oracle: oracle_budget(v.oracle_limit),
        seed: v.seed,
        ..VerifyConfig::default()
    };
    let (source, graphs): (String, Vec<(String, Graph)>) = match (&v.random, v.sources.as_slice()) {
        (Some(model), _) => {
            let graphs = (0..v.count)
                .map(|i| {
                    let seed = v.seed.wrapping_add(i);
                    model.generate(seed).map(|g| (format!("{model}#{seed}"), g)).map_err(usage)
                })
                .collect::<Result<_, _>>()?;
            (model.to_string(), graphs)
        }
        (None, [one]) if one == "fixtures" => (
            "fixtures".into(),
            fixtures::all().into_iter().map(|(n, g)| (n.to_string(), g)).collect(),
        ),
        (None, []) => return Err(usage("nothing to verify: give `fixtures`, files, or --random")),
        (None, paths) => {
            let graphs = paths
                .iter()
                .map(|p| read_graph(Path::new(p), v.format).map(|g| (p.clone(), g)))
                .collect::<Result<_, _>>()?;
            (paths.join(","), graphs)
        }
    };

    let run = || -> Vec<VerificationReport> { graphs.par_iter().map(|(name, g)| run_checks(name, g, &cfg)).collect() };
    let reports = match v.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(usage)?
            .install(run),
        None => run(),
    };

    let mut summary: BTreeMap<CheckId, Tally> = BTreeMap::new();
    for r in &reports {
        for res in &r.results {
            let t = summary.entry(res.check).or_default();
            match (res.outcome, res.skip_reason) {
                (Outcome::Pass, _) => t.pass += 1,
                (Outcome::Fail, _) => t.fail += 1,
                (_, Some(SkipReason::GuardExceeded)) => t.skipped_guard += 1,
                (_, Some(SkipReason::AssumptionViolated)) => t.skipped_assumption += 1,
                _ => t.skipped_hypothesis += 1,
            }
        }
    }
    let failed = summary.values().any(|t| t.fail > 0);

    if v.json {
        let out = CorpusReport {
            schema: 1,
            source,
            seed: v.seed,
            graphs: reports.len(),
            summary,
            reports: &reports,
        };
        println!("{}", serde_json::to_string_pretty(&out).expect("report serializes"));
    } else {
        println!("{} graph(s) from {source}", reports.len());
        for r in &reports {
            for f in r.failures() {
                println!(
                    "FAIL {} on {}: {}",
                    f.check,
                    r.graph.name,
                    serde_json::to_string(&f.witness).expect("witness serializes")
                );
            }
        }
        println!("check  pass  fail  skip(hyp)  skip(guard)  skip(assump)");
        for (id, t) in &summary {
            println!(
                "{:<5} {:>5} {:>5} {:>10} {:>12} {:>13}",
                id.to_string(),
                t.pass,
                t.fail,
                t.skipped_hypothesis,
                t.skipped_guard,
                t.skipped_assumption
            );
        }
    }
    Ok(if failed { EXIT_FAIL } else { 0 })
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let model = match a.model.as_str() {
        "gnp" => Model::Gnp {
            n: a.n,
            p: a.p.ok_or_else(|| usage("--p is required for gnp"))?,
        },
        "gnm" => Model::Gnm {
            n: a.n,
            m: a.m.ok_or_else(|| usage("--m is required for gnm"))?,
        },
        _ => Model::Tree { n: a.n },
    };
    let g = model.generate(a.seed).map_err(usage)?;
    let text = write_edge_list(&g);
    match a.out {
        Some(path) => fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_fixtures(out: &Path) -> CmdResult {
    fs::create_dir_all(out).map_err(|e| usage(format!("{}: {e}", out.display())))?;
    for name in fixtures::NAMES {
        let path = out.join(format!("{name}.txt"));
        fs::write(&path, fixtures::text(name).expect("known fixture")).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    Ok(0)
}
