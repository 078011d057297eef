//! Seeded synthetic weights and random bipartite graphs.
//!
//! All randomness comes from ChaCha8 seeded with [`SeedableRng::seed_from_u64`],
//! so a seed reproduces the same graph on every platform.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{WeightedBipartiteGraph, MAX_WEIGHT};

pub type GraphRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GraphRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Replaces every weight with an independent uniform draw from `1..=w_max`,
/// upper layer first, ascending id.
pub fn generate_weights(
    graph: &WeightedBipartiteGraph,
    seed: u64,
    w_max: u64,
) -> Result<WeightedBipartiteGraph> {
    if w_max == 0 {
        return Err(Error::Validation("w_max must be at least 1".into()));
    }
    if w_max > MAX_WEIGHT {
        return Err(Error::Validation(format!(
            "w_max exceeds the limit {MAX_WEIGHT}"
        )));
    }
    let mut rng = rng(seed);
    let upper = (0..graph.upper_count())
        .map(|_| rng.gen_range(1..=w_max))
        .collect();
    let lower = (0..graph.lower_count())
        .map(|_| rng.gen_range(1..=w_max))
        .collect();
    graph.with_weights(upper, lower)
}

/// `m` distinct edges chosen uniformly among all `upper_count * lower_count`
/// pairs, then weights from [`generate_weights`] with the same seed.
pub fn generate_random_bipartite(
    upper_count: usize,
    lower_count: usize,
    m: usize,
    seed: u64,
    w_max: u64,
) -> Result<WeightedBipartiteGraph> {
    let pairs = upper_count
        .checked_mul(lower_count)
        .ok_or_else(|| Error::Validation("layer sizes overflow".into()))?;
    if m > pairs {
        return Err(Error::Validation(format!(
            "cannot place {m} distinct edges in a {upper_count}x{lower_count} graph"
        )));
    }
    let mut rng = rng(seed);
    let edges: Vec<(u32, u32)> = index::sample(&mut rng, pairs, m)
        .into_iter()
        .map(|cell| ((cell / lower_count) as u32, (cell % lower_count) as u32))
        .collect();
    let structure = WeightedBipartiteGraph::unweighted(upper_count, lower_count, edges)?;
    generate_weights(&structure, seed, w_max)
}
