//! Seeded graphs shared by the benchmarks.

use bicomm::generate::generate_random_bipartite;
use bicomm::WeightedBipartiteGraph;

/// Largest weight drawn for benchmark graphs.
pub const W_MAX: u64 = 100;

/// Random graph used by the greedy and peeling benchmarks.
pub fn large(upper: usize, lower: usize, m: usize) -> WeightedBipartiteGraph {
    generate_random_bipartite(upper, lower, m, 1, W_MAX).expect("edge count fits")
}

/// Graph small enough for every exact search to finish quickly.
pub fn small() -> WeightedBipartiteGraph {
    generate_random_bipartite(6, 6, 18, 2, W_MAX).expect("edge count fits")
}
