use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use indpath::acceptance;
use indpath::bench::{self, Instance};
use indpath::extract::{self, Algorithm};
use indpath::graph::io::{parse_graph, parse_path_witness, write_graph};
use indpath::graph::verify_path_witness;
use indpath::interval::parse_intervals;
use indpath::oracle::{longest_induced_path_exact, longest_path_exact, SearchBudget};
use indpath::Error;

#[derive(Parser)]
#[command(
    name = "indpath",
    version,
    about = "Long induced paths: generators, extractors, exact oracle, benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a family instance: graph, metadata and Hamiltonian path.
    Gen(GenArgs),
    /// Run one extractor and print its certified induced path.
    Extract(ExtractArgs),
    /// Exact longest induced path.
    Oracle(OracleArgs),
    /// Run a JSON suite and write a CSV table.
    Bench(BenchArgs),
    /// Run the acceptance criteria.
    Verify(VerifyArgs),
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Oracle search-node cap.
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    /// Oracle wall-clock cap in milliseconds.
    #[arg(long, default_value_t = 60_000)]
    budget_ms: u64,
}

impl BudgetArgs {
    fn budget(self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget_nodes,
            max_millis: self.budget_ms,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// Extra parameters as key=value (e.g. n=100, blocks=3, reach=2).
    #[arg(long = "param", value_parser = parse_kv)]
    params: Vec<(String, usize)>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output prefix; writes <out>.graph, <out>.json and, when known,
    /// <out>.path and <out>.intervals. Without it the graph goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long, default_value = "auto")]
    algo: Algorithm,
    /// Graph file; may be omitted when --intervals is given.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Hamiltonian (or any) path; defaults to the oracle's longest path.
    #[arg(long)]
    path_file: Option<PathBuf>,
    #[arg(long)]
    intervals: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct BenchArgs {
    /// Suite file: a JSON array of entries.
    #[arg(long)]
    input: PathBuf,
    /// CSV destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run only these criteria (1-based); all when omitted.
    #[arg(long)]
    criterion: Vec<usize>,
}

fn parse_kv(s: &str) -> Result<(String, usize), String> {
    let (k, v) = s.split_once('=').ok_or("expected key=value")?;
    let v = v.parse().map_err(|_| format!("`{v}` is not a non-negative integer"))?;
    Ok((k.to_string(), v))
}

/// Failure with the exit code it maps to.
struct Fail {
    code: u8,
    msg: String,
}

impl Fail {
    fn usage(msg: impl Into<String>) -> Self {
        Fail {
            code: 2,
            msg: msg.into(),
        }
    }

    fn failed(msg: impl Into<String>) -> Self {
        Fail {
            code: 1,
            msg: msg.into(),
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Fail::usage(e.to_string()),
            _ => Fail::failed(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail::failed(format!("cannot write {}: {e}", path.display())))
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn sidecar(inst: &Instance) -> String {
    inst.sidecar.clone().unwrap_or_else(|| {
        serde_json::json!({
            "family": inst.source,
            "params": inst.params,
            "n": inst.graph.n(),
            "m": inst.graph.m(),
            "has_ham": inst.path.is_some(),
        })
        .to_string()
    })
}

fn cmd_gen(a: GenArgs) -> Result<(), Fail> {
    let mut params: BTreeMap<String, usize> = a.params.into_iter().collect();
    for (key, v) in [("i", a.i), ("k", a.k), ("t", a.t)] {
        if let Some(v) = v {
            params.insert(key.to_string(), v);
        }
    }
    let inst = bench::build_instance(&a.family, &params, a.seed).map_err(|e| match e {
        Error::Precondition(m) => Fail::usage(m),
        other => other.into(),
    })?;
    let meta = sidecar(&inst);
    match a.out {
        Some(prefix) => {
            write(&with_ext(&prefix, "graph"), &write_graph(&inst.graph))?;
            write(&with_ext(&prefix, "json"), &format!("{meta}\n"))?;
            if let Some(p) = &inst.path {
                write(&with_ext(&prefix, "path"), &format!("{p}\n"))?;
            }
            if let Some(rep) = &inst.rep {
                write(&with_ext(&prefix, "intervals"), &rep.to_text())?;
            }
            println!(
                "wrote {} (n={}, m={})",
                with_ext(&prefix, "graph").display(),
                inst.graph.n(),
                inst.graph.m()
            );
        }
        None => {
            print!("# {meta}\n{}", write_graph(&inst.graph));
            if let Some(p) = &inst.path {
                println!("# {p}");
            }
        }
    }
    Ok(())
}

fn cmd_extract(a: ExtractArgs) -> Result<(), Fail> {
    let parsed = a
        .intervals
        .as_deref()
        .map(|p| read(p).and_then(|t| Ok(parse_intervals(&t)?)))
        .transpose()?;
    let g = match (&a.input, &parsed) {
        (Some(p), _) => parse_graph(&read(p)?)?,
        (None, Some((g, _, _))) => g.clone(),
        (None, None) => return Err(Fail::usage("extract needs --input or --intervals")),
    };
    let rep = parsed.map(|(_, rep, _)| rep);
    if let Some(rep) = &rep {
        rep.check_graph(&g)?;
    }
    let path = match &a.path_file {
        Some(p) => parse_path_witness(&read(p)?)?,
        None => {
            let r = longest_path_exact(&g, a.budget.budget());
            eprintln!(
                "no --path-file; using a longest path of {} vertices ({})",
                r.witness.size(),
                if r.optimal { "optimal" } else { "budget" }
            );
            r.witness
        }
    };
    let x = extract::run(a.algo, &g, &path, rep.as_ref())?;
    verify_path_witness(&g, &x.witness).map_err(Fail::failed)?;
    let ok = x.meets_bound();
    println!(
        "algorithm {}{}{}",
        x.algorithm,
        if x.detail.is_empty() { "" } else { " " },
        x.detail
    );
    println!("{}", x.witness);
    println!(
        "size {} bound {:.4} {}",
        x.witness.size(),
        x.bound,
        if ok { "ok" } else { "below" }
    );
    if ok {
        Ok(())
    } else {
        Err(Fail::failed(format!(
            "size {} is below the guaranteed {:.4}",
            x.witness.size(),
            x.bound
        )))
    }
}

fn cmd_oracle(a: OracleArgs) -> Result<(), Fail> {
    let g = parse_graph(&read(&a.input)?)?;
    let r = longest_induced_path_exact(&g, a.budget.budget());
    if g.n() > 0 {
        verify_path_witness(&g, &r.witness).map_err(Fail::failed)?;
    }
    println!("{r}");
    println!("{}", r.witness);
    eprintln!("{} search nodes, {} ms", r.nodes, r.millis);
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> Result<(), Fail> {
    let suite = bench::parse_suite(&read(&a.input)?)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| Fail::failed(format!("thread pool: {e}")))?;
    let out = pool.install(|| bench::run_suite(&suite, a.seed, a.budget.budget()))?;
    let mut failures = 0;
    for o in &out {
        let tag = format!("{} {} {}", o.row.family, o.row.params, o.row.algorithm);
        if let Some(s) = &o.skipped {
            eprintln!("skipped {tag}: {s}");
        }
        if let Some(f) = &o.failure {
            eprintln!("FAILED {tag}: {f}");
            failures += 1;
        }
    }
    let csv = bench::to_csv(&out.into_iter().map(|o| o.row).collect::<Vec<_>>())?;
    match &a.out {
        Some(p) => write(p, &csv)?,
        None => print!("{csv}"),
    }
    if failures > 0 {
        return Err(Fail::failed(format!("{failures} row(s) failed")));
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Fail> {
    let ids: Vec<usize> = if a.criterion.is_empty() {
        (1..=acceptance::NAMES.len()).collect()
    } else {
        a.criterion
    };
    if let Some(bad) = ids.iter().find(|&&id| id == 0 || id > acceptance::NAMES.len()) {
        return Err(Fail::usage(format!("no criterion {bad}")));
    }
    let failed: Vec<String> = ids
        .into_iter()
        .map(acceptance::run_criterion)
        .inspect(|o| println!("{o}"))
        .filter(|o| !o.passed)
        .map(|o| format!("{} ({})", o.id, o.name))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Fail::failed(format!("failed criteria: {}", failed.join(", "))))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Extract(a) => cmd_extract(a),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::Bench(a) => cmd_bench(a),
        Cmd::Verify(a) => cmd_verify(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
