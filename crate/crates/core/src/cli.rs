//! The `hcs` command line. [`dispatch`] returns the process exit code:
//! 0 when every check passes, 1 on any failure or runtime error, 2 on a
//! usage error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use log::LevelFilter;

use crate::bounds::{verify_all, verify_alternative, write_csv, write_json, BoundReport, ParameterAlternative, VerifyOptions};
use crate::error::{Error, Result};
use crate::experiment::{run_experiment, write_rows, ExperimentConfig, TrialOutcome};
use crate::extract::extract;
use crate::extremal::{build_extremal, verify_extremal, ExtremalFile, ExtremalGraph};
use crate::graph::{GraphJson, SimpleGraph};
use crate::numeric::{parse_rational, Interval};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hcs", version, about = "Highly connected subgraphs: construction, extraction and bound checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph of the sharpness family and write it as JSON.
    Construct(ConstructArgs),
    /// Find a large (k+1)-connected subgraph or a full separation tree.
    Extract(ExtractArgs),
    /// Evaluate the inequality obligations behind the main bounds.
    VerifyBounds(VerifyArgs),
    /// Randomized density experiment.
    Experiment(ExperimentArgs),
    /// Verify a constructed graph file.
    Certify(CertifyArgs),
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    sigma_k: usize,
    #[arg(long)]
    level: usize,
    #[arg(long)]
    out: PathBuf,
    /// Also write a Graphviz rendering.
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExtractArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    /// Exact rational such as `0.2` or `3/5`.
    #[arg(long, conflicts_with = "alt", required_unless_present = "alt")]
    sigma: Option<String>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    alt: Option<u8>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// 1, 2, 3 or all.
    #[arg(long, default_value = "all")]
    alt: String,
    #[arg(long)]
    grid_step: Option<String>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[arg(long)]
    trials: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    alt: u8,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Defaults to standard output.
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = 15)]
    n_min: usize,
    #[arg(long, default_value_t = 50)]
    n_max: usize,
    /// Record per-trial wall time (makes the output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
}

/// Reads `HCS_LOG` (`quiet`, `info` or `debug`). Anything else leaves
/// warnings on.
pub fn init_logging() {
    let level = match std::env::var("HCS_LOG").as_deref() {
        Ok("quiet") => LevelFilter::Off,
        Ok("info") => LevelFilter::Info,
        Ok("debug") => LevelFilter::Debug,
        _ => LevelFilter::Warn,
    };
    let _ = env_logger::Builder::new().filter_level(level).format_timestamp(None).try_init();
}

pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Extract(a) => run_extract(a),
        Command::VerifyBounds(a) => verify_bounds(a),
        Command::Experiment(a) => experiment(a),
        Command::Certify(a) => certify(a),
    };
    match result {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_FAIL,
        Err(e @ Error::Parameter(_)) => {
            eprintln!("hcs: {e}");
            EXIT_USAGE
        }
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_PASS,
        Err(e) => {
            eprintln!("hcs: {e}");
            EXIT_FAIL
        }
    }
}

fn say(text: impl std::fmt::Display) -> Result<()> {
    writeln!(io::stdout().lock(), "{text}")?;
    Ok(())
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let file = File::open(path)?;
    Ok(serde_json::from_reader(io::BufReader::new(file))?)
}

fn construct(a: ConstructArgs) -> Result<bool> {
    let e = build_extremal(a.k, a.sigma_k, a.level)?;
    let mut out = create(&a.out)?;
    serde_json::to_writer_pretty(&mut out, &e.to_file())?;
    writeln!(out)?;
    out.flush()?;
    if let Some(dot) = &a.dot {
        let mut w = create(dot)?;
        w.write_all(e.graph.to_dot().as_bytes())?;
        w.flush()?;
    }
    say(format_args!("wrote {} ({} vertices, {} edges)", a.out.display(), e.graph.n(), e.graph.edge_count()))?;
    Ok(true)
}

fn run_extract(a: ExtractArgs) -> Result<bool> {
    let json: GraphJson = read_json(&a.input)?;
    let g = SimpleGraph::try_from(json)?;
    let sigma = match (&a.sigma, a.alt) {
        (Some(q), _) => Interval::exact(parse_rational(q)?),
        (None, Some(alt)) => ParameterAlternative::get(alt)?.sigma,
        (None, None) => return Err(Error::Parameter("one of --sigma or --alt is required".into())),
    };
    let result = extract(&g, a.k, &sigma)?;
    log::info!("extraction: {} nodes in tree", result.tree().nodes.len());
    let text = serde_json::to_string_pretty(&result)?;
    match &a.out {
        Some(path) => {
            let mut w = create(path)?;
            writeln!(w, "{text}")?;
            w.flush()?;
        }
        None => say(text)?,
    }
    Ok(true)
}

fn verify_bounds(a: VerifyArgs) -> Result<bool> {
    let mut opts = VerifyOptions::default();
    if let Some(step) = &a.grid_step {
        let q = parse_rational(step)?;
        if q <= num_traits::Zero::zero() {
            return Err(Error::Parameter(format!("grid step must be positive, got {step}")));
        }
        opts.grid_step = q;
    }
    let reports: Vec<BoundReport> = match a.alt.as_str() {
        "all" => verify_all(&opts)?,
        id => {
            let id: u8 = id.parse().map_err(|_| Error::Parameter(format!("unknown alternative '{id}'")))?;
            verify_alternative(&ParameterAlternative::get(id)?, &opts)?
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in &reports {
        let row = r.row();
        writeln!(out, "{:<4} {:<36} {:<28} margin {}", row.verdict, row.obligation_id, row.params, row.margin)?;
    }
    if let Some(path) = &a.csv {
        write_csv(&reports, create(path)?)?;
    }
    if let Some(path) = &a.json {
        write_json(&reports, create(path)?)?;
    }
    Ok(reports.iter().all(|r| !r.verdict.is_fail()))
}

fn experiment(a: ExperimentArgs) -> Result<bool> {
    let cfg = ExperimentConfig {
        trials: a.trials,
        k: a.k,
        n_min: a.n_min,
        n_max: a.n_max,
        alt: a.alt,
        seed: a.seed,
        timing: a.timing,
    };
    let summary = run_experiment(&cfg)?;
    match &a.csv {
        Some(path) => write_rows(&summary.rows, create(path)?)?,
        None => write_rows(&summary.rows, io::stdout().lock())?,
    }
    eprintln!(
        "trials {}: found {}, saturated {}, failures {}",
        summary.rows.len(),
        summary.count(TrialOutcome::Found),
        summary.count(TrialOutcome::NotApplicableSaturated),
        summary.failures()
    );
    Ok(summary.failures() == 0)
}

fn certify(a: CertifyArgs) -> Result<bool> {
    let file: ExtremalFile = read_json(&a.input)?;
    let e = ExtremalGraph::from_file(file)?;
    let report = verify_extremal(&e)?;
    say(serde_json::to_string_pretty(&report)?)?;
    Ok(report.passed())
}
