//! Command-line front end: loading, dispatch, sweeps and output records.

pub mod args;
pub mod bench;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use bicomm::exact::BoundConfig;
use bicomm::generate::{generate_random_bipartite, generate_weights};
use bicomm::io::{load_graph, write_edges, write_weights};
use bicomm::oracle::{brute_force_topr, enumerate_influential_communities};
use bicomm::report::{enumeration_lines, CommunityRecord, StatsRecord};
use bicomm::{
    run_algorithm, Algorithm, SearchOutcome, SearchParams, SearchStats, WeightedBipartiteGraph,
};

use args::{AlgoArg, Cli, Command, Format, GenArgs, GraphArgs, OracleArgs, RunArgs, SearchArgs};
use bench::{BenchRow, Sweep};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Io = 1,
    Usage = 2,
    Parse = 3,
    Validation = 4,
    Timeout = 5,
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Failure {
            status: Status::Validation,
            message: message.into(),
        }
    }

    fn io(path: &Path, err: io::Error) -> Self {
        Failure {
            status: Status::Io,
            message: format!("{}: {err}", path.display()),
        }
    }
}

impl From<bicomm::Error> for Failure {
    fn from(err: bicomm::Error) -> Self {
        let status = match err {
            bicomm::Error::Parse { .. } => Status::Parse,
            bicomm::Error::Io(_) => Status::Io,
            _ => Status::Validation,
        };
        Failure {
            status,
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure {
            status: Status::Io,
            message: err.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(err: csv::Error) -> Self {
        Failure {
            status: Status::Io,
            message: err.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

/// Runs one parsed command, writing results to `stdout` unless an output
/// path is given. Returns [`Status::Timeout`] when any search hit its time
/// limit; partial results are still written.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> CliResult<Status> {
    match cli.command {
        Command::Run(args) => cmd_run(&args, stdout),
        Command::Bench(args) => cmd_bench(&args, stdout),
        Command::Gen(args) => cmd_gen(&args).map(|()| Status::Ok),
        Command::Oracle(args) => cmd_oracle(&args, stdout).map(|()| Status::Ok),
    }
}

pub fn load(args: &GraphArgs) -> CliResult<WeightedBipartiteGraph> {
    let edges = File::open(&args.input).map_err(|e| Failure::io(&args.input, e))?;
    let weights = match &args.weights {
        Some(path) => Some(BufReader::new(
            File::open(path).map_err(|e| Failure::io(path, e))?,
        )),
        None => None,
    };
    let graph = load_graph(BufReader::new(edges), weights)?;
    match args.gen_weights_seed {
        Some(seed) => Ok(generate_weights(&graph, seed, args.wmax)?),
        None => Ok(graph),
    }
}

pub fn search_params(args: &SearchArgs) -> CliResult<SearchParams> {
    if !(args.time_limit.is_finite() && args.time_limit >= 0.0) {
        return Err(Failure::validation(
            "--time-limit must be a non-negative number of seconds",
        ));
    }
    let params = SearchParams::new(args.alpha, args.beta, args.top)
        .with_bounds(BoundConfig::parse_list(&args.bounds)?)
        .with_time_limit(Duration::from_secs_f64(args.time_limit));
    params.validate()?;
    Ok(params)
}

/// Outcome of one dispatched run, oracle included.
pub struct Run {
    pub algo: &'static str,
    pub outcome: SearchOutcome,
    pub wall: Duration,
}

/// Deep recursions on large graphs need more than the default stack.
const SEARCH_STACK: usize = 1 << 30;

pub fn dispatch(
    graph: &WeightedBipartiteGraph,
    algo: AlgoArg,
    params: &SearchParams,
) -> CliResult<Run> {
    let start = Instant::now();
    let (name, outcome) = match algo {
        AlgoArg::Oracle => {
            let top = brute_force_topr(graph, params.alpha, params.beta, params.r)?;
            let outcome = SearchOutcome {
                top,
                stats: SearchStats::default(),
            };
            ("oracle", outcome)
        }
        other => {
            let algorithm = match other {
                AlgoArg::Basic => Algorithm::Basic,
                AlgoArg::Slimtree => Algorithm::SlimTree,
                AlgoArg::Upperbound => Algorithm::UpperBound,
                AlgoArg::Newfra => Algorithm::NewFra,
                AlgoArg::Pruning => Algorithm::Pruning,
                AlgoArg::Oracle => unreachable!(),
            };
            let outcome = std::thread::scope(|scope| {
                std::thread::Builder::new()
                    .stack_size(SEARCH_STACK)
                    .spawn_scoped(scope, || run_algorithm(graph, algorithm, params))
                    .expect("search thread spawns")
                    .join()
                    .expect("search thread does not panic")
            })?;
            (algorithm.name(), outcome)
        }
    };
    Ok(Run {
        algo: name,
        outcome,
        wall: start.elapsed(),
    })
}

fn open_output(path: &Option<PathBuf>) -> CliResult<Option<BufWriter<File>>> {
    match path {
        Some(p) => Ok(Some(BufWriter::new(
            File::create(p).map_err(|e| Failure::io(p, e))?,
        ))),
        None => Ok(None),
    }
}

fn with_sink<T>(
    path: &Option<PathBuf>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> CliResult<T>,
) -> CliResult<T> {
    match open_output(path)? {
        Some(mut file) => {
            let value = body(&mut file)?;
            file.flush()?;
            Ok(value)
        }
        None => {
            let value = body(stdout)?;
            stdout.flush()?;
            Ok(value)
        }
    }
}

fn cmd_run(args: &RunArgs, stdout: &mut dyn Write) -> CliResult<Status> {
    let graph = load(&args.graph)?;
    let params = search_params(&args.search)?;
    let run = dispatch(&graph, args.search.algo, &params)?;
    with_sink(&args.out.output, stdout, |out| {
        match args.out.format {
            Format::Json => {
                for (i, c) in run.outcome.top.entries().iter().enumerate() {
                    writeln!(out, "{}", json(&CommunityRecord::new(i + 1, c)))?;
                }
                let stats = StatsRecord::new(run.algo, &run.outcome.stats, run.outcome.top.len());
                writeln!(out, "{}", json(&stats))?;
            }
            Format::Csv => {
                let row = BenchRow::new(&run, &graph, &params, args.seed);
                let mut writer = csv::Writer::from_writer(out);
                writer.serialize(row)?;
                writer.flush()?;
            }
        }
        Ok(())
    })?;
    Ok(if run.outcome.stats.timed_out {
        Status::Timeout
    } else {
        Status::Ok
    })
}

fn cmd_bench(args: &args::BenchArgs, stdout: &mut dyn Write) -> CliResult<Status> {
    let graph = load(&args.graph)?;
    let base = search_params(&args.search)?;
    let sweep = Sweep::parse(args.vary, &args.values, args.reps)?;
    // Every point is checked before the first run.
    let points = sweep.points(&base, args.seed)?;
    let mut timed_out = false;
    with_sink(&args.out.output, stdout, |out| {
        let mut rows = Vec::with_capacity(points.len());
        for point in &points {
            let sampled;
            let graph = match point.fraction {
                Some(frac) => {
                    sampled = bench::sample_vertices(&graph, frac, point.seed)?;
                    &sampled
                }
                None => &graph,
            };
            let run = dispatch(graph, args.search.algo, &point.params)?;
            timed_out |= run.outcome.stats.timed_out;
            rows.push(BenchRow::new(&run, graph, &point.params, point.seed));
        }
        match args.out.format {
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(out);
                for row in rows {
                    writer.serialize(row)?;
                }
                writer.flush()?;
            }
            Format::Json => {
                for row in rows {
                    writeln!(out, "{}", json(&row))?;
                }
            }
        }
        Ok(())
    })?;
    Ok(if timed_out {
        Status::Timeout
    } else {
        Status::Ok
    })
}

fn cmd_gen(args: &GenArgs) -> CliResult<()> {
    let graph = generate_random_bipartite(args.nu, args.nv, args.m, args.seed, args.wmax)?;
    let weights_path = args.weights.clone().unwrap_or_else(|| {
        let mut name = args.output.clone().into_os_string();
        name.push(".weights");
        PathBuf::from(name)
    });
    let edges = File::create(&args.output).map_err(|e| Failure::io(&args.output, e))?;
    write_edges(&graph, BufWriter::new(edges))?;
    let weights = File::create(&weights_path).map_err(|e| Failure::io(&weights_path, e))?;
    write_weights(&graph, BufWriter::new(weights))?;
    Ok(())
}

fn cmd_oracle(args: &OracleArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let graph = load(&args.graph)?;
    if args.alpha == 0 || args.beta == 0 {
        return Err(Failure::validation("alpha and beta must be at least 1"));
    }
    let report = enumerate_influential_communities(&graph, args.alpha, args.beta)?;
    with_sink(&args.output, stdout, |out| {
        for line in enumeration_lines(&report) {
            writeln!(out, "{line}")?;
        }
        Ok(())
    })
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}
