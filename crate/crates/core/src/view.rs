//! Mutable induced-subgraph overlay on a [`WeightedBipartiteGraph`].

use std::cell::Cell;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Layer, VertexId, WeightedBipartiteGraph};
use crate::influence::Influence;

/// Active-vertex mask over a base graph with live degrees and per-layer
/// aggregates kept in sync on every removal and restore.
///
/// Per-layer maxima are cached lazily: removing a vertex that carries the
/// cached maximum invalidates it and the next read rescans the layer.
#[derive(Debug, Clone)]
pub struct SubgraphView<'g> {
    graph: &'g WeightedBipartiteGraph,
    active: Vec<bool>,
    degree: Vec<u32>,
    count: [u64; 2],
    sum: [u128; 2],
    max: [Cell<Option<u64>>; 2],
}

impl<'g> SubgraphView<'g> {
    /// The whole graph.
    pub fn full(graph: &'g WeightedBipartiteGraph) -> Self {
        let n = graph.vertex_count();
        let degree = (0..n as VertexId).map(|v| graph.degree(v) as u32).collect();
        let mut count = [0u64; 2];
        let mut sum = [0u128; 2];
        for v in 0..n as VertexId {
            let l = graph.layer(v).index();
            count[l] += 1;
            sum[l] += graph.weight(v) as u128;
        }
        SubgraphView {
            graph,
            active: vec![true; n],
            degree,
            count,
            sum,
            max: [Cell::new(None), Cell::new(None)],
        }
    }

    /// The subgraph induced by `vertices`.
    pub fn induced(graph: &'g WeightedBipartiteGraph, vertices: &[VertexId]) -> Self {
        let n = graph.vertex_count();
        let mut view = SubgraphView {
            graph,
            active: vec![false; n],
            degree: vec![0; n],
            count: [0; 2],
            sum: [0; 2],
            max: [Cell::new(None), Cell::new(None)],
        };
        for &v in vertices {
            if !view.active[v as usize] {
                view.active[v as usize] = true;
                let l = graph.layer(v).index();
                view.count[l] += 1;
                view.sum[l] += graph.weight(v) as u128;
            }
        }
        for &v in vertices {
            view.degree[v as usize] = graph
                .neighbors(v)
                .iter()
                .filter(|&&x| view.active[x as usize])
                .count() as u32;
        }
        view
    }

    pub fn graph(&self) -> &'g WeightedBipartiteGraph {
        self.graph
    }

    pub fn is_active(&self, v: VertexId) -> bool {
        self.active[v as usize]
    }

    /// Number of active neighbors of `v`.
    pub fn live_degree(&self, v: VertexId) -> u32 {
        self.degree[v as usize]
    }

    pub fn layer_count(&self, layer: Layer) -> u64 {
        self.count[layer.index()]
    }

    pub fn layer_sum(&self, layer: Layer) -> u128 {
        self.sum[layer.index()]
    }

    /// Largest active weight in `layer`, `None` when the layer is empty.
    pub fn layer_max(&self, layer: Layer) -> Option<u64> {
        let l = layer.index();
        if self.count[l] == 0 {
            return None;
        }
        if let Some(m) = self.max[l].get() {
            return Some(m);
        }
        let m = self
            .graph
            .layer_range(layer)
            .filter(|&v| self.active[v as usize])
            .map(|v| self.graph.weight(v))
            .max();
        self.max[l].set(m);
        m
    }

    pub fn active_count(&self) -> u64 {
        self.count[0] + self.count[1]
    }

    pub fn is_empty(&self) -> bool {
        self.active_count() == 0
    }

    pub fn has_empty_layer(&self) -> bool {
        self.count[0] == 0 || self.count[1] == 0
    }

    /// Active vertices in ascending id order (upper layer first).
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.active.len() as VertexId).filter(move |&v| self.active[v as usize])
    }

    pub fn layer_vertices(&self, layer: Layer) -> impl Iterator<Item = VertexId> + '_ {
        self.graph
            .layer_range(layer)
            .filter(move |&v| self.active[v as usize])
    }

    pub fn active_neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&x| self.active[x as usize])
    }

    pub fn influence(&self) -> Result<Influence> {
        Influence::from_layers(self.sum[0], self.count[0], self.sum[1], self.count[1])
    }

    /// Deactivates `v`, updating neighbor degrees and aggregates.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        if !self.active[v as usize] {
            return Err(Error::InactiveVertex(v));
        }
        self.deactivate(v);
        Ok(())
    }

    /// Inverse of [`remove_vertex`](Self::remove_vertex).
    pub fn restore_vertex(&mut self, v: VertexId) -> Result<()> {
        if self.active[v as usize] {
            return Err(Error::Validation(format!("vertex {v} is already active")));
        }
        let g = self.graph;
        self.active[v as usize] = true;
        let mut deg = 0;
        for &x in g.neighbors(v) {
            if self.active[x as usize] {
                self.degree[x as usize] += 1;
                deg += 1;
            }
        }
        self.degree[v as usize] = deg;
        let l = g.layer(v).index();
        let w = g.weight(v);
        self.count[l] += 1;
        self.sum[l] += w as u128;
        match self.max[l].get() {
            Some(m) if w > m => self.max[l].set(Some(w)),
            None if self.count[l] == 1 => self.max[l].set(Some(w)),
            _ => {}
        }
        Ok(())
    }

    fn deactivate(&mut self, v: VertexId) {
        let g = self.graph;
        self.active[v as usize] = false;
        for &x in g.neighbors(v) {
            if self.active[x as usize] {
                self.degree[x as usize] -= 1;
            }
        }
        self.degree[v as usize] = 0;
        let l = g.layer(v).index();
        let w = g.weight(v);
        self.count[l] -= 1;
        self.sum[l] -= w as u128;
        if self.max[l].get() == Some(w) {
            self.max[l].set(None);
        }
    }

    fn threshold(&self, v: VertexId, alpha: u32, beta: u32) -> u32 {
        match self.graph.layer(v) {
            Layer::Upper => alpha,
            Layer::Lower => beta,
        }
    }

    /// Peels in place to the maximal (alpha, beta)-core and returns the
    /// removed vertices in removal order.
    pub fn peel(&mut self, alpha: u32, beta: u32) -> Vec<VertexId> {
        let mut queued = vec![false; self.active.len()];
        let mut work = Vec::new();
        for v in self.vertices() {
            if self.degree[v as usize] < self.threshold(v, alpha, beta) {
                queued[v as usize] = true;
                work.push(v);
            }
        }
        self.drain_peel(work, &mut queued, alpha, beta)
    }

    /// Removes `v` and peels the cascade it triggers. When the view was a
    /// core before the call, the result is the maximal core of `view - v`.
    pub fn remove_and_peel(&mut self, v: VertexId, alpha: u32, beta: u32) -> Result<Vec<VertexId>> {
        if !self.active[v as usize] {
            return Err(Error::InactiveVertex(v));
        }
        let mut queued = vec![false; self.active.len()];
        queued[v as usize] = true;
        let mut removed = self.drain_peel(vec![v], &mut queued, alpha, beta);
        removed.remove(0);
        Ok(removed)
    }

    fn drain_peel(
        &mut self,
        mut work: Vec<VertexId>,
        queued: &mut [bool],
        alpha: u32,
        beta: u32,
    ) -> Vec<VertexId> {
        let g = self.graph;
        let mut removed = Vec::new();
        while let Some(v) = work.pop() {
            self.deactivate(v);
            removed.push(v);
            for &x in g.neighbors(v) {
                let xi = x as usize;
                if self.active[xi]
                    && !queued[xi]
                    && self.degree[xi] < self.threshold(x, alpha, beta)
                {
                    queued[xi] = true;
                    work.push(x);
                }
            }
        }
        removed
    }

    /// Copy peeled to the maximal (alpha, beta)-core.
    pub fn alpha_beta_core(&self, alpha: u32, beta: u32) -> SubgraphView<'g> {
        let mut core = self.clone();
        core.peel(alpha, beta);
        core
    }

    /// True iff the view is nonempty and every active vertex meets its
    /// layer's degree threshold.
    pub fn is_core(&self, alpha: u32, beta: u32) -> bool {
        !self.is_empty()
            && self
                .vertices()
                .all(|v| self.degree[v as usize] >= self.threshold(v, alpha, beta))
    }

    /// Connected components as vertex lists, each ascending, ordered by
    /// smallest member.
    pub fn component_vertex_sets(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.active.len()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s as usize] {
                continue;
            }
            seen[s as usize] = true;
            queue.push_back(s);
            let mut members = Vec::new();
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for x in self.active_neighbors(v) {
                    if !seen[x as usize] {
                        seen[x as usize] = true;
                        queue.push_back(x);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<SubgraphView<'g>> {
        self.component_vertex_sets()
            .iter()
            .map(|members| SubgraphView::induced(self.graph, members))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_vertex_sets().len() == 1
    }
}
