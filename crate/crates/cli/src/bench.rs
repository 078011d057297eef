//! Parameter sweeps and the CSV row shared by `run` and `bench`.

use rand::seq::index::sample;
use serde::Serialize;

use bicomm::generate::rng;
use bicomm::{Layer, SearchParams, VertexId, WeightedBipartiteGraph};

use crate::args::Vary;
use crate::{CliResult, Failure, Run};

/// Column order of every CSV the tool writes.
pub const CSV_HEADER: &str =
    "algo,alpha,beta,r,seed,n_u,n_v,m,time_ms,nodes,cuts_ub1,cuts_ub2,cuts_ub3,slim_skips,timed_out,influences";

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub algo: String,
    pub alpha: u32,
    pub beta: u32,
    pub r: usize,
    pub seed: u64,
    pub n_u: usize,
    pub n_v: usize,
    pub m: usize,
    pub time_ms: f64,
    /// Recursion nodes for exact searches, expanded vertices for greedy ones.
    pub nodes: u64,
    pub cuts_ub1: u64,
    pub cuts_ub2: u64,
    pub cuts_ub3: u64,
    pub slim_skips: u64,
    pub timed_out: bool,
    /// Reported influences, best first, separated by `;`.
    pub influences: String,
}

impl BenchRow {
    pub fn new(
        run: &Run,
        graph: &WeightedBipartiteGraph,
        params: &SearchParams,
        seed: u64,
    ) -> Self {
        let stats = &run.outcome.stats;
        let exact = matches!(run.algo, "basic" | "slimtree" | "upperbound");
        let influences: Vec<String> = run
            .outcome
            .top
            .influences()
            .iter()
            .map(|f| f.to_string())
            .collect();
        BenchRow {
            algo: run.algo.to_string(),
            alpha: params.alpha,
            beta: params.beta,
            r: params.r,
            seed,
            n_u: graph.upper_count(),
            n_v: graph.lower_count(),
            m: graph.edge_count(),
            time_ms: (run.wall.as_secs_f64() * 1e6).round() / 1e3,
            nodes: if exact {
                stats.nodes
            } else {
                stats.vertices_expanded
            },
            cuts_ub1: stats.cuts[0],
            cuts_ub2: stats.cuts[1],
            cuts_ub3: stats.cuts[2],
            slim_skips: stats.slim_skips,
            timed_out: stats.timed_out,
            influences: influences.join(";"),
        }
    }
}

/// One swept parameter with its values and repetition count.
#[derive(Debug, Clone)]
pub struct Sweep {
    pub vary: Vary,
    pub values: Vec<String>,
    pub reps: usize,
}

/// A single run of a sweep.
#[derive(Debug, Clone)]
pub struct Point {
    pub params: SearchParams,
    /// Fraction of each layer kept, for sample sweeps.
    pub fraction: Option<f64>,
    pub seed: u64,
}

impl Sweep {
    pub fn parse(vary: Vary, values: &str, reps: usize) -> CliResult<Self> {
        let values: Vec<String> = values
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        if values.is_empty() {
            return Err(Failure::validation("--values needs at least one value"));
        }
        if reps == 0 {
            return Err(Failure::validation("--reps must be at least 1"));
        }
        Ok(Sweep { vary, values, reps })
    }

    /// Expands the sweep into runs, value-major then repetition.
    pub fn points(&self, base: &SearchParams, seed: u64) -> CliResult<Vec<Point>> {
        let mut out = Vec::with_capacity(self.values.len() * self.reps);
        for raw in &self.values {
            let mut params = base.clone();
            let mut fraction = None;
            match self.vary {
                Vary::Alpha => params.alpha = parse_int(raw)?,
                Vary::Beta => params.beta = parse_int(raw)?,
                Vary::R => params.r = parse_int(raw)?,
                Vary::Sample => {
                    let f: f64 = raw
                        .parse()
                        .map_err(|_| Failure::validation(format!("bad sample fraction {raw:?}")))?;
                    if !(f > 0.0 && f <= 1.0) {
                        return Err(Failure::validation(format!(
                            "sample fraction {raw} is outside (0, 1]"
                        )));
                    }
                    fraction = Some(f);
                }
            }
            params.validate()?;
            for rep in 0..self.reps as u64 {
                out.push(Point {
                    params: params.clone(),
                    fraction,
                    seed: if fraction.is_some() { seed + rep } else { seed },
                });
            }
        }
        Ok(out)
    }
}

fn parse_int<T: std::str::FromStr>(raw: &str) -> CliResult<T> {
    raw.parse()
        .map_err(|_| Failure::validation(format!("bad sweep value {raw:?}")))
}

/// Keeps `round(fraction * n)` vertices of each layer, drawn without
/// replacement, and returns the induced subgraph.
pub fn sample_vertices(
    graph: &WeightedBipartiteGraph,
    fraction: f64,
    seed: u64,
) -> CliResult<WeightedBipartiteGraph> {
    let mut rng = rng(seed);
    let mut keep: Vec<VertexId> = Vec::new();
    for layer in [Layer::Upper, Layer::Lower] {
        let range = graph.layer_range(layer);
        let n = (range.end - range.start) as usize;
        let k = ((fraction * n as f64).round() as usize).min(n);
        let mut picked: Vec<VertexId> = sample(&mut rng, n, k)
            .into_iter()
            .map(|i| range.start + i as u32)
            .collect();
        picked.sort_unstable();
        keep.extend(picked);
    }
    Ok(graph.induced(&keep))
}
