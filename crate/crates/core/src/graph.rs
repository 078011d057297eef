//! Immutable vertex-weighted bipartite graph in CSR form.
//!
//! Vertices share one global id space: upper vertices occupy
//! `0..upper_count` and lower vertices `upper_count..vertex_count`. Every
//! iteration in the crate walks ids ascending, which puts the upper layer
//! before the lower layer.

use std::ops::Range;

use crate::error::{Error, Result};

/// Global vertex id.
pub type VertexId = u32;

/// Largest accepted vertex weight. Keeps every influence numerator inside
/// 128 bits for graphs with up to 2^32 vertices per layer.
pub const MAX_WEIGHT: u64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    Upper,
    Lower,
}

impl Layer {
    pub fn index(self) -> usize {
        match self {
            Layer::Upper => 0,
            Layer::Lower => 1,
        }
    }

    pub fn other(self) -> Layer {
        match self {
            Layer::Upper => Layer::Lower,
            Layer::Lower => Layer::Upper,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedBipartiteGraph {
    upper_count: usize,
    lower_count: usize,
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    weights: Vec<u64>,
}

impl WeightedBipartiteGraph {
    /// Builds a graph from 0-based `(upper, lower)` edge pairs. Duplicate
    /// pairs collapse into one edge.
    pub fn from_edges<I>(
        upper_count: usize,
        lower_count: usize,
        edges: I,
        upper_weights: Vec<u64>,
        lower_weights: Vec<u64>,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if upper_count + lower_count > u32::MAX as usize {
            return Err(Error::Validation("too many vertices".into()));
        }
        check_weights(upper_count, &upper_weights, "upper")?;
        check_weights(lower_count, &lower_weights, "lower")?;

        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u as usize >= upper_count || v as usize >= lower_count {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) out of range for {upper_count}x{lower_count} graph"
                )));
            }
            pairs.push((u, v));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let n = upper_count + lower_count;
        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u as usize] += 1;
            degree[upper_count + v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0 as VertexId; 2 * pairs.len()];
        // Pairs are sorted by (u, v), so upper lists come out ascending.
        for &(u, v) in &pairs {
            let lv = upper_count + v as usize;
            targets[cursor[u as usize]] = lv as VertexId;
            cursor[u as usize] += 1;
        }
        // Lower lists: walk pairs sorted by (v, u).
        pairs.sort_unstable_by_key(|&(u, v)| (v, u));
        for &(u, v) in &pairs {
            let lv = upper_count + v as usize;
            targets[cursor[lv]] = u;
            cursor[lv] += 1;
        }

        let mut weights = upper_weights;
        weights.extend(lower_weights);
        Ok(WeightedBipartiteGraph {
            upper_count,
            lower_count,
            offsets,
            targets,
            weights,
        })
    }

    /// Unit-weight graph.
    pub fn unweighted<I>(upper_count: usize, lower_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        Self::from_edges(
            upper_count,
            lower_count,
            edges,
            vec![1; upper_count],
            vec![1; lower_count],
        )
    }

    /// Same structure with new weights.
    pub fn with_weights(&self, upper_weights: Vec<u64>, lower_weights: Vec<u64>) -> Result<Self> {
        check_weights(self.upper_count, &upper_weights, "upper")?;
        check_weights(self.lower_count, &lower_weights, "lower")?;
        let mut weights = upper_weights;
        weights.extend(lower_weights);
        Ok(WeightedBipartiteGraph {
            weights,
            ..self.clone()
        })
    }

    pub fn upper_count(&self) -> usize {
        self.upper_count
    }

    pub fn lower_count(&self) -> usize {
        self.lower_count
    }

    pub fn vertex_count(&self) -> usize {
        self.upper_count + self.lower_count
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn layer(&self, v: VertexId) -> Layer {
        if (v as usize) < self.upper_count {
            Layer::Upper
        } else {
            Layer::Lower
        }
    }

    /// Global ids of one layer.
    pub fn layer_range(&self, layer: Layer) -> Range<VertexId> {
        match layer {
            Layer::Upper => 0..self.upper_count as VertexId,
            Layer::Lower => self.upper_count as VertexId..self.vertex_count() as VertexId,
        }
    }

    pub fn upper(&self, index: u32) -> VertexId {
        debug_assert!((index as usize) < self.upper_count);
        index
    }

    pub fn lower(&self, index: u32) -> VertexId {
        debug_assert!((index as usize) < self.lower_count);
        self.upper_count as VertexId + index
    }

    /// 0-based id within the vertex's own layer.
    pub fn local_id(&self, v: VertexId) -> u32 {
        match self.layer(v) {
            Layer::Upper => v,
            Layer::Lower => v - self.upper_count as VertexId,
        }
    }

    /// Neighbors in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn weight(&self, v: VertexId) -> u64 {
        self.weights[v as usize]
    }

    pub fn upper_weights(&self) -> &[u64] {
        &self.weights[..self.upper_count]
    }

    pub fn lower_weights(&self) -> &[u64] {
        &self.weights[self.upper_count..]
    }

    /// Edges as 0-based `(upper, lower)` pairs, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let lower_base = self.upper_count as u32;
        (0..self.upper_count as u32)
            .flat_map(move |u| self.neighbors(u).iter().map(move |&v| (u, v - lower_base)))
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Subgraph induced by `keep` (global ids), relabelled compactly in
    /// ascending order within each layer.
    pub fn induced(&self, keep: &[VertexId]) -> WeightedBipartiteGraph {
        let mut map = vec![u32::MAX; self.vertex_count()];
        let mut upper_weights = Vec::new();
        let mut lower_weights = Vec::new();
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            match self.layer(v) {
                Layer::Upper => {
                    map[v as usize] = upper_weights.len() as u32;
                    upper_weights.push(self.weight(v));
                }
                Layer::Lower => {
                    map[v as usize] = lower_weights.len() as u32;
                    lower_weights.push(self.weight(v));
                }
            }
        }
        let mut edges = Vec::new();
        for &u in sorted
            .iter()
            .take_while(|&&v| self.layer(v) == Layer::Upper)
        {
            for &v in self.neighbors(u) {
                if map[v as usize] != u32::MAX {
                    edges.push((map[u as usize], map[v as usize]));
                }
            }
        }
        WeightedBipartiteGraph::from_edges(
            upper_weights.len(),
            lower_weights.len(),
            edges,
            upper_weights,
            lower_weights,
        )
        .expect("induced subgraph of a valid graph is valid")
    }
}

fn check_weights(count: usize, weights: &[u64], layer: &str) -> Result<()> {
    if weights.len() != count {
        return Err(Error::Validation(format!(
            "{layer} layer has {count} vertices but {} weights",
            weights.len()
        )));
    }
    if let Some(w) = weights.iter().find(|&&w| w > MAX_WEIGHT) {
        return Err(Error::Validation(format!(
            "{layer} weight {w} exceeds the limit {MAX_WEIGHT}"
        )));
    }
    Ok(())
}
