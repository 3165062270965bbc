use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use domchrom::constructions::{
    build_d3, build_d_even, build_d_odd, enumerate_d3_blueprints, D3Blueprint, DEvenSpec, DOddSpec,
};
use domchrom::graph::{complete_bipartite, parse_graph6, to_graph6, Graph, VertexLabeling};
use domchrom::invariants::{classify_dk, for_each_coloring, invariant_report, ColoringKind};
use domchrom::search::{min_order_scan, scan_stream, summary_csv, CheckSet, ScanOptions};
use domchrom::structure::{check_theorem1, find_chain, is_in_class_d3_until, is_planar};
use domchrom::Error;
use serde_json::{json, Value};
use std::io::{self, Read};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(name = "domchrom", version, about = "Domination and coloring invariants of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// All five invariants with witnesses, as JSON.
    Invariants(GraphArg),
    /// D(k) classification: dk, gamma, chi, chi_d.
    Classify(GraphArg),
    /// Build a graph family member and print its graph6 line.
    Construct {
        #[command(subcommand)]
        family: Family,
        #[command(flatten)]
        out: ConstructOut,
    },
    /// Run structural checks; one JSON object per check.
    Verify(VerifyArgs),
    /// Planarity verdict with certificate.
    Planar(GraphArg),
    /// Scan a graph6 stream and write JSON Lines records.
    Scan(ScanArgs),
    /// Smallest order holding a D(k) graph, over complete enumerations.
    Survey(SurveyArgs),
}

#[derive(Args)]
struct GraphArg {
    /// graph6 string; read from stdin when absent.
    graph6: Option<String>,
}

#[derive(Subcommand)]
enum Family {
    /// Odd construction (odd k >= 3, n >= 4k-3).
    DOdd {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Even construction (even k >= 4, n >= 3k).
    DEven {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Three-class family, from a blueprint file or the enumeration.
    D3 {
        /// Blueprint as JSON.
        #[arg(long, conflicts_with_all = ["a", "b", "index"])]
        blueprint: Option<PathBuf>,
        #[arg(long, requires = "b")]
        a: Option<usize>,
        #[arg(long, requires = "a")]
        b: Option<usize>,
        /// Position in the enumeration for sizes (a, b).
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Complete bipartite graph.
    Kpq {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
}

#[derive(Args)]
struct ConstructOut {
    /// Write the role labeling as JSON.
    #[arg(long, global = true)]
    labels: Option<PathBuf>,
    /// Write a DOT rendering.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// Print one JSON object (graph6, labels) instead of the bare line.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    graph6: Option<String>,
    #[arg(long)]
    theorem1: bool,
    #[arg(long = "d3-membership")]
    d3_membership: bool,
    #[arg(long)]
    planar: bool,
    /// Look for a chain in the dominator colorings with this many classes.
    #[arg(long, value_name = "K")]
    chain: Option<usize>,
    #[arg(long, env = "DOMCHROM_DEADLINE_SECS")]
    deadline_secs: Option<u64>,
}

#[derive(Args)]
struct ScanArgs {
    /// graph6 file, or `-` for stdin.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    source: Option<String>,
    /// Use the built-in generator for all connected graphs of this order.
    #[arg(long)]
    builtin: Option<usize>,
    #[arg(long, default_value = "invariants")]
    checks: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    summary: Option<PathBuf>,
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Abort on the first unparsable line instead of skipping it.
    #[arg(long)]
    strict: bool,
    #[arg(long, env = "DOMCHROM_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long, env = "DOMCHROM_DEADLINE_SECS")]
    deadline_secs: Option<u64>,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n_max: usize,
    /// graph6 file with every connected graph of one order: `N=FILE`.
    #[arg(long = "order-source", value_name = "N=FILE")]
    order_sources: Vec<String>,
    #[arg(long, env = "DOMCHROM_JOBS", default_value_t = 1)]
    jobs: usize,
}

fn read_graph(arg: Option<String>) -> Result<Graph> {
    let text = match arg {
        Some(s) => s,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf.lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| anyhow!("no graph6 input on stdin"))?
                .to_string()
        }
    };
    Ok(parse_graph6(text.trim())?)
}

fn print(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string(v)?);
    Ok(())
}

fn construct(family: Family, out: ConstructOut) -> Result<u8> {
    let (g, labels): (Graph, VertexLabeling) = match family {
        Family::DOdd { k, n } => build_d_odd(DOddSpec::new(k, n)?),
        Family::DEven { k, n } => build_d_even(DEvenSpec::new(k, n)?),
        Family::Kpq { p, q } => complete_bipartite(p, q)?,
        Family::D3 {
            blueprint,
            a,
            b,
            index,
        } => {
            let bp: D3Blueprint = match (blueprint, a, b) {
                (Some(path), _, _) => serde_json::from_str(
                    &std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?,
                )?,
                (None, Some(a), Some(b)) => enumerate_d3_blueprints(a, b, index + 1)?
                    .nth(index)
                    .ok_or_else(|| anyhow!("only fewer than {} blueprints exist for a={a}, b={b}", index + 1))?,
                _ => bail!("give --blueprint FILE or --a A --b B"),
            };
            build_d3(&bp)?
        }
    };
    let g6 = to_graph6(&g);
    if let Some(path) = &out.labels {
        std::fs::write(path, serde_json::to_string_pretty(&labels)? + "\n")?;
    }
    if let Some(path) = &out.dot {
        std::fs::write(path, g.to_dot(Some(&labels)))?;
    }
    if out.json {
        print(&json!({ "graph6": g6, "labels": labels }))?;
    } else {
        println!("{g6}");
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<u8> {
    let g = read_graph(args.graph6)?;
    let deadline = args.deadline_secs.map(|s| Instant::now() + Duration::from_secs(s));
    let mut results: Vec<Value> = Vec::new();
    if args.theorem1 {
        let report = check_theorem1(&g)?;
        results.push(json!({ "check": "theorem1", "verdict": report.holds(), "report": report }));
    }
    if args.d3_membership {
        let found = is_in_class_d3_until(&g, deadline)?;
        results.push(json!({ "check": "d3-membership", "verdict": found.is_some(), "certificate": found }));
    }
    if args.planar {
        let v = is_planar(&g);
        results.push(json!({ "check": "planar", "verdict": v.planar, "certificate": v.certificate }));
    }
    if let Some(k) = args.chain {
        if k < 3 {
            return Err(Error::TooFewClasses(k).into());
        }
        let mut found = None;
        let mut failure = None;
        for_each_coloring(&g, ColoringKind::Dominator, k, |c| match find_chain(&g, &c) {
            Ok(Some(w)) => {
                found = Some(json!({ "coloring": c, "chain": w }));
                ControlFlow::Break(())
            }
            Ok(None) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        })?;
        if let Some(e) = failure {
            return Err(e.into());
        }
        results.push(json!({ "check": "chain", "k": k, "verdict": found.is_some(), "certificate": found }));
    }
    if results.is_empty() {
        bail!("no check requested (use --theorem1, --d3-membership, --planar or --chain K)");
    }
    let mut code = 0;
    for r in &results {
        print(r)?;
        if r["verdict"] == Value::Bool(false) {
            code = 1;
        }
    }
    Ok(code)
}

fn scan(args: ScanArgs) -> Result<u8> {
    let checks: CheckSet = args.checks.parse()?;
    let source = match (&args.source, args.builtin) {
        (Some(path), _) if path == "-" => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
        (Some(path), _) => std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
        (None, Some(n)) => {
            let mut text = String::new();
            for g in domchrom::search::enumerate_connected(n)? {
                text.push_str(&to_graph6(&g));
                text.push('\n');
            }
            text
        }
        (None, None) => bail!("give --source or --builtin"),
    };
    let opts = ScanOptions {
        checks,
        jobs: args.jobs,
        strict: args.strict,
        checkpoint: args.checkpoint,
        deadline: args.deadline_secs.map(Duration::from_secs),
        ..ScanOptions::default()
    };
    let summary = scan_stream(&source, args.out.as_deref(), &opts)?;
    if let Some(path) = &args.summary {
        std::fs::write(path, summary_csv(&summary))?;
    }
    print(&summary)?;
    Ok(0)
}

fn survey(args: SurveyArgs) -> Result<u8> {
    let mut files = std::collections::BTreeMap::new();
    for spec in &args.order_sources {
        let (n, path) = spec
            .split_once('=')
            .ok_or_else(|| anyhow!("--order-source expects N=FILE, got {spec:?}"))?;
        let n: usize = n.parse().with_context(|| format!("order in {spec:?}"))?;
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        files.insert(n, domchrom::graph::parse_graph6_lines(&text)?);
    }
    let record = min_order_scan(args.k, args.n_max, |n| files.remove(&n), args.jobs)?;
    print(&record)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Invariants(a) => {
            print(&invariant_report(&read_graph(a.graph6)?)?)?;
            Ok(0)
        }
        Command::Classify(a) => {
            let (dk, r) = classify_dk(&read_graph(a.graph6)?)?;
            print(&json!({ "dk": dk, "gamma": r.gamma, "chi": r.chi, "chi_d": r.chi_d }))?;
            Ok(0)
        }
        Command::Construct { family, out } => construct(family, out),
        Command::Verify(a) => verify(a),
        Command::Planar(a) => {
            print(&is_planar(&read_graph(a.graph6)?))?;
            Ok(0)
        }
        Command::Scan(a) => scan(a),
        Command::Survey(a) => survey(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
