//! Command-line front end: `weight`, `verify`, `batch` and `gen`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use edgeweight::batch::{run_batch, BatchConfig};
use edgeweight::formats::{encode_graph6, parse_graph_auto};
use edgeweight::generate::gen_random_regular;
use edgeweight::{weight_with_set, Certificate, Error, Graph, MisMode, Options, WeightSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INCOMPLETE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "edgeweight", version, about = "Proper edge weightings of regular graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight one graph and write its certificate.
    Weight {
        /// graph6 or edge-list file (detected from content).
        #[arg(long)]
        input: PathBuf,
        /// Three weights, e.g. `-1,0,2` or `1/2,1,3`.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// Certificate destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        /// Check loop invariants during construction and embed audit reports.
        #[arg(long)]
        audit: bool,
    },
    /// Re-check a certificate against a graph.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Weight every graph of a graph6 corpus with every set.
    Batch {
        #[arg(long)]
        corpus: PathBuf,
        /// Semicolon-separated sets, e.g. `-1,0,2;-1,0,3`.
        #[arg(long, allow_hyphen_values = true)]
        sets: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Cross-check with exhaustive search for graphs with at most this many edges.
        #[arg(long, default_value_t = 12)]
        oracle_cap: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random regular graphs as graph6 lines.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Optimistic,
}

impl From<Mode> for MisMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exact => MisMode::Exact,
            Mode::Optimistic => MisMode::Optimistic,
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::FallbackExhausted(_) => EXIT_INCOMPLETE,
        Error::Invariant(_) | Error::Saturation(_) | Error::Precondition(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

/// Parses `argv` and runs it. Never exits the process.
pub fn run_from<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli, stdout, stderr),
        Err(e) if e.use_stderr() => {
            let _ = write!(stderr, "{e}");
            EXIT_INPUT
        }
        Err(e) => {
            let _ = write!(stdout, "{e}");
            EXIT_OK
        }
    }
}

pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Weight {
            input,
            set,
            out,
            mode,
            audit,
        } => cmd_weight(&input, &set, out.as_deref(), mode, audit, stdout),
        Command::Verify { input, cert } => cmd_verify(&input, &cert, stdout),
        Command::Batch {
            corpus,
            sets,
            jobs,
            oracle_cap,
            mode,
            out,
        } => cmd_batch(&corpus, &sets, jobs, oracle_cap, mode, out.as_deref(), stdout, stderr),
        Command::Gen { n, k, seed, count, out } => cmd_gen(n, k, seed, count, out.as_deref(), stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure(EXIT_INPUT, e.to_string())),
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph_auto(&read(path)?).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn cmd_weight(input: &Path, set: &str, out: Option<&Path>, mode: Mode, audit: bool, stdout: &mut dyn Write) -> CmdResult {
    let g = load_graph(input)?;
    let q: WeightSet = set.parse()?;
    let options = Options {
        mis: mode.into(),
        check_steps: audit,
        audit,
        ..Options::default()
    };
    let cert = weight_with_set(&g, &q, &options)?;
    emit(out, &cert.to_json(), stdout)?;
    Ok(EXIT_OK)
}

fn cmd_verify(input: &Path, cert: &Path, stdout: &mut dyn Write) -> CmdResult {
    let g = load_graph(input)?;
    let cert = Certificate::from_json(&read(cert)?)?;
    let report = cert.recheck(&g)?;
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    emit(None, &text, stdout)?;
    if report.is_proper() {
        Ok(EXIT_OK)
    } else {
        Err(Failure(
            EXIT_INPUT,
            format!("certificate is not proper: {} conflicting edges", report.conflict_count),
        ))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_batch(
    corpus: &Path,
    sets: &str,
    jobs: usize,
    oracle_cap: usize,
    mode: Mode,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CmdResult {
    let text = read(corpus)?;
    let sets = sets
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<Vec<WeightSet>, _>>()?;
    let config = BatchConfig {
        sets,
        jobs,
        oracle_cap,
        options: Options {
            mis: mode.into(),
            ..Options::default()
        },
    };
    let start = Instant::now();
    let report = run_batch(&text, &config);
    // Timing goes to stderr so the report itself stays reproducible.
    let _ = writeln!(
        stderr,
        "{} lines, {} runs, {:.3}s wall clock, {} jobs",
        report.summary.lines,
        report.summary.runs,
        start.elapsed().as_secs_f64(),
        jobs
    );
    emit(out, &report.to_json(), stdout)?;
    Ok(if report.summary.internal_errors > 0 {
        EXIT_INTERNAL
    } else {
        EXIT_OK
    })
}

fn cmd_gen(n: usize, k: usize, seed: u64, count: usize, out: Option<&Path>, stdout: &mut dyn Write) -> CmdResult {
    let mut text = String::new();
    for i in 0..count as u64 {
        text.push_str(&encode_graph6(&gen_random_regular(n, k, seed.wrapping_add(i))?));
        text.push('\n');
    }
    emit(out, &text, stdout)?;
    Ok(EXIT_OK)
}
