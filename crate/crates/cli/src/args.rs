use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "bicomm",
    version,
    about = "Top-r influential community search in weighted bipartite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one search and print its communities and counters.
    Run(RunArgs),
    /// Sweep one parameter and print a CSV row per run.
    Bench(BenchArgs),
    /// Write a seeded random graph as an edge file and a weight file.
    Gen(GenArgs),
    /// Enumerate every influential community of a small graph.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Basic,
    Slimtree,
    Upperbound,
    Newfra,
    Pruning,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Vary {
    Alpha,
    Beta,
    R,
    Sample,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Edge list, one `upper lower` pair per line, 1-based ids.
    #[arg(long)]
    pub input: PathBuf,

    /// Weight file with `U id w` / `V id w` lines.
    #[arg(long, conflicts_with = "gen_weights_seed")]
    pub weights: Option<PathBuf>,

    /// Replace all weights with uniform draws from 1..=wmax.
    #[arg(long)]
    pub gen_weights_seed: Option<u64>,

    #[arg(long, default_value_t = 100)]
    pub wmax: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value_t = AlgoArg::Upperbound)]
    pub algo: AlgoArg,

    #[arg(long, default_value_t = 2)]
    pub alpha: u32,

    #[arg(long, default_value_t = 2)]
    pub beta: u32,

    /// Number of communities to report.
    #[arg(long, default_value_t = 10)]
    pub top: usize,

    /// Comma list of bounds used by upperbound, from ub1, ub2, ub3.
    #[arg(long, default_value = "ub1,ub2,ub3")]
    pub bounds: String,

    /// Seconds before a search stops and reports what it has.
    #[arg(long, default_value_t = 3600.0)]
    pub time_limit: f64,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub out: OutputArgs,
    /// Recorded in the CSV `seed` column.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[command(flatten)]
    pub out: OutputArgs,
    /// Base seed for vertex sampling; repetition k uses seed + k.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, value_enum)]
    pub vary: Vary,

    /// Comma list of values for the swept parameter.
    #[arg(long)]
    pub values: String,

    #[arg(long, default_value_t = 1)]
    pub reps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub nu: usize,

    #[arg(long)]
    pub nv: usize,

    #[arg(long)]
    pub m: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, default_value_t = 100)]
    pub wmax: u64,

    /// Edge file to write.
    #[arg(long)]
    pub output: PathBuf,

    /// Weight file to write; defaults to `<output>.weights`.
    #[arg(long)]
    pub weights: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    #[arg(long, default_value_t = 2)]
    pub alpha: u32,

    #[arg(long, default_value_t = 2)]
    pub beta: u32,

    #[arg(long)]
    pub output: Option<PathBuf>,
}
