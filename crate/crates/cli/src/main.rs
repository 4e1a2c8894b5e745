//! `permrecon`: reconstruction numbers of Cayley graphs on `Sym_n`, claim
//! verification and reconstruction experiments from the command line.

mod commands;
mod config;
mod output;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{Degrees, FileConfig, Format, Kinds, Settings};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_AMBIGUOUS: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Run(permrecon::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Run(e) => write!(f, "error: {e}"),
        }
    }
}

impl From<permrecon::Error> for CliError {
    fn from(e: permrecon::Error) -> Self {
        CliError::Run(e)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "permrecon",
    version,
    about = "Reconstruct permutations from transposition-distorted patterns"
)]
struct Cli {
    /// TOML file with default settings; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Directory for persisted identity balls.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Largest ball (in vertices) a single expansion may hold.
    #[arg(long, global = true)]
    max_ball: Option<usize>,
    /// Largest degree for whole-graph searches.
    #[arg(long, global = true)]
    max_whole_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parameters and intersection numbers of Cayley graphs.
    Report(ReportArgs),
    /// Check published claims against exhaustive search.
    Verify(VerifyArgs),
    /// Recover a permutation from a file of patterns.
    Reconstruct(ReconstructArgs),
    /// Seeded reconstruction experiments.
    Simulate(SimulateArgs),
    /// Minimal transposition factorizations of a permutation or class.
    Factorizations(FactorizationArgs),
    /// Conjugacy classes of `Sym_n` and their local parameters.
    Classes(ClassesArgs),
    /// Where `N(Sym_n(T), r)` is attained (informational).
    ProbeConjecture(ProbeArgs),
    /// Parameters of a graph read from an edge list.
    GraphImport(GraphImportArgs),
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Generator sets: `T`, `t`, `st`, comma separated.
    #[arg(long)]
    pub graph: Option<Kinds>,
    /// Degrees: `5`, `3..6` or `3,5`.
    #[arg(long)]
    pub n: Option<Degrees>,
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long)]
    pub graph: Option<Kinds>,
    #[arg(long)]
    pub r: Option<usize>,
    /// One permutation per line, e.g. `[3,1,4,2]`; `-` reads stdin.
    #[arg(long)]
    pub patterns: PathBuf,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub graph: Option<Kinds>,
    #[arg(long)]
    pub n: Option<Degrees>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Patterns per trial; defaults to `N(Γ,r) + 1`.
    #[arg(long)]
    pub m: Option<usize>,
    /// Draw patterns from a maximal ball intersection instead.
    #[arg(long)]
    pub adversarial: bool,
    /// Apply exactly `r` generators per pattern instead of `0..=r`.
    #[arg(long)]
    pub exact_errors: bool,
    /// Write one JSON record per trial to this file.
    #[arg(long)]
    pub transcript: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FactorizationArgs {
    /// A permutation in one-line notation.
    #[arg(long, conflicts_with = "class", required_unless_present = "class")]
    pub perm: Option<String>,
    /// A cycle type such as `1^2 3^1`.
    #[arg(long)]
    pub class: Option<String>,
    /// Also list up to this many factorizations.
    #[arg(long)]
    pub list: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ClassesArgs {
    #[arg(long)]
    pub n: Option<Degrees>,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long)]
    pub n: Option<Degrees>,
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Args)]
pub struct GraphImportArgs {
    /// Edge list, one `u v` pair per line; `-` reads stdin.
    #[arg(long)]
    pub edges: PathBuf,
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long)]
    pub r: Option<usize>,
}

fn settings(cli: &Cli, file: &FileConfig) -> Settings {
    let defaults = permrecon::Limits::default();
    Settings {
        format: cli.format.or(file.format).unwrap_or(Format::Json),
        workers: cli.workers.or(file.workers),
        cache_dir: cli.cache_dir.clone().or_else(|| file.cache_dir.clone()),
        max_ball: cli.max_ball.or(file.max_ball).unwrap_or(defaults.max_ball),
        max_whole_n: cli
            .max_whole_n
            .or(file.max_whole_n)
            .unwrap_or(defaults.whole_graph_max_n),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let settings = settings(&cli, &file);
    settings.validate()?;
    if let Some(w) = settings.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let ctx = commands::Context { settings, file };
    let outcome = match &cli.command {
        Command::Report(a) => commands::report(&ctx, a)?,
        Command::Verify(a) => commands::verify(&ctx, a)?,
        Command::Reconstruct(a) => commands::reconstruct(&ctx, a)?,
        Command::Simulate(a) => commands::simulate(&ctx, a)?,
        Command::Factorizations(a) => commands::factorizations(&ctx, a)?,
        Command::Classes(a) => commands::classes(&ctx, a)?,
        Command::ProbeConjecture(a) => commands::probe(&ctx, a)?,
        Command::GraphImport(a) => commands::graph_import(&ctx, a)?,
    };
    print!("{}", outcome.render(ctx.settings.format));
    Ok(outcome.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Run(_) => EXIT_FAILURE,
            })
        }
    }
}
