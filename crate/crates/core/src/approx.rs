//! Greedy approximate search.
//!
//! Each connected component of the maximal core is grown breadth-first
//! from its heaviest upper vertex. A popped vertex enqueues its heaviest
//! neighbors: as many as its layer's degree threshold, or the whole run of
//! neighbors tied at the top weight when that run is longer. The grown set
//! becomes a candidate if it is an (alpha, beta)-core once the queue
//! drains. The pruning variant stops a growth as soon as its running
//! influence falls below the current r-th best.

use std::collections::VecDeque;
use std::time::Instant;

use crate::community::Community;
use crate::error::Result;
use crate::exact::{SearchOutcome, SearchParams, SearchStats};
use crate::graph::{Layer, VertexId, WeightedBipartiteGraph};
use crate::influence::Influence;
use crate::topr::TopRSet;
use crate::view::SubgraphView;

/// Number of neighbors to take from a descending weight list: the length
/// of the leading run of equal weights if it exceeds `threshold`,
/// otherwise `threshold`.
pub fn check_gamma(sorted_weights: &[u64], threshold: u32) -> usize {
    let Some(&first) = sorted_weights.first() else {
        return threshold as usize;
    };
    let run = sorted_weights.iter().take_while(|&&w| w == first).count();
    if run > threshold as usize {
        run
    } else {
        threshold as usize
    }
}

/// Trace of one component growth.
#[derive(Debug, Clone)]
pub struct Expansion {
    /// Vertices in the order they joined the grown set.
    pub order: Vec<VertexId>,
    pub broke_early: bool,
    pub community: Option<Community>,
}

/// Frontier and partial community of one growth.
struct ExpansionState {
    queue: VecDeque<VertexId>,
    members: Vec<VertexId>,
    sum: [u128; 2],
    count: [u64; 2],
}

impl ExpansionState {
    fn influence(&self) -> Option<Influence> {
        Influence::from_layers(self.sum[0], self.count[0], self.sum[1], self.count[1]).ok()
    }
}

/// Grows `component` (a connected core view) once. `h_min` gates the
/// result, and with `prune` also stops the growth early.
pub fn expand_component(
    component: &SubgraphView<'_>,
    params: &SearchParams,
    h_min: Influence,
    prune: bool,
) -> Option<Community> {
    expand_component_traced(component, params, h_min, prune).community
}

pub fn expand_component_traced(
    component: &SubgraphView<'_>,
    params: &SearchParams,
    h_min: Influence,
    prune: bool,
) -> Expansion {
    let g = component.graph();
    let mut visited = vec![false; g.vertex_count()];
    let members: Vec<VertexId> = component.vertices().collect();
    let mut stats = SearchStats::default();
    grow(
        g,
        &members,
        &|v| component.is_active(v),
        params,
        h_min,
        prune,
        &mut visited,
        &mut stats,
    )
}

#[allow(clippy::too_many_arguments)]
fn grow(
    g: &WeightedBipartiteGraph,
    members: &[VertexId],
    in_component: &dyn Fn(VertexId) -> bool,
    params: &SearchParams,
    h_min: Influence,
    prune: bool,
    visited: &mut [bool],
    stats: &mut SearchStats,
) -> Expansion {
    let mut trace = Expansion {
        order: Vec::new(),
        broke_early: false,
        community: None,
    };
    // Heaviest upper vertex, smallest id on ties; members are ascending.
    let seed = members
        .iter()
        .copied()
        .take_while(|&v| g.layer(v) == Layer::Upper)
        .fold(None, |best: Option<VertexId>, v| match best {
            Some(b) if g.weight(b) >= g.weight(v) => Some(b),
            _ => Some(v),
        });
    let Some(seed) = seed else {
        return trace;
    };

    let mut state = ExpansionState {
        queue: VecDeque::from([seed]),
        members: Vec::new(),
        sum: [0; 2],
        count: [0; 2],
    };
    visited[seed as usize] = true;
    let mut neighbors: Vec<VertexId> = Vec::new();

    while let Some(v) = state.queue.pop_front() {
        let layer = g.layer(v);
        state.members.push(v);
        state.sum[layer.index()] += g.weight(v) as u128;
        state.count[layer.index()] += 1;
        stats.vertices_expanded += 1;
        trace.order.push(v);

        if prune {
            if let Some(f) = state.influence() {
                if f < h_min {
                    stats.early_breaks += 1;
                    trace.broke_early = true;
                    break;
                }
            }
        }

        neighbors.clear();
        neighbors.extend(g.neighbors(v).iter().copied().filter(|&x| in_component(x)));
        neighbors.sort_by(|&a, &b| g.weight(b).cmp(&g.weight(a)).then(a.cmp(&b)));
        let weights: Vec<u64> = neighbors.iter().map(|&x| g.weight(x)).collect();
        let threshold = match layer {
            Layer::Upper => params.alpha,
            Layer::Lower => params.beta,
        };
        let take = check_gamma(&weights, threshold).min(neighbors.len());
        for &x in &neighbors[..take] {
            if !visited[x as usize] {
                visited[x as usize] = true;
                state.queue.push_back(x);
            }
        }
    }

    if let Some(f) = state.influence() {
        if f > h_min && is_core_set(g, &state.members, params) {
            trace.community = Community::from_vertices(g, &state.members).ok();
        }
    }
    trace
}

/// Degree check of the subgraph induced by `members`.
fn is_core_set(g: &WeightedBipartiteGraph, members: &[VertexId], params: &SearchParams) -> bool {
    let mut inside = members.to_vec();
    inside.sort_unstable();
    members.iter().all(|&v| {
        let need = match g.layer(v) {
            Layer::Upper => params.alpha,
            Layer::Lower => params.beta,
        } as usize;
        g.neighbors(v)
            .iter()
            .filter(|x| inside.binary_search(x).is_ok())
            .count()
            >= need
    })
}

pub fn newfra_search(
    graph: &WeightedBipartiteGraph,
    params: &SearchParams,
) -> Result<SearchOutcome> {
    greedy_search(graph, params, false)
}

pub fn pruning_search(
    graph: &WeightedBipartiteGraph,
    params: &SearchParams,
) -> Result<SearchOutcome> {
    greedy_search(graph, params, true)
}

fn greedy_search(
    graph: &WeightedBipartiteGraph,
    params: &SearchParams,
    prune: bool,
) -> Result<SearchOutcome> {
    params.validate()?;
    let start = Instant::now();
    let deadline = params.time_limit.map(|limit| start + limit);
    let mut stats = SearchStats {
        nodes: 1,
        ..SearchStats::default()
    };
    let mut top = TopRSet::new(params.r);

    let mut core = SubgraphView::full(graph);
    core.peel(params.alpha, params.beta);
    stats.core_computations = 1;

    let components = core.component_vertex_sets();
    let mut label = vec![u32::MAX; graph.vertex_count()];
    for (i, members) in components.iter().enumerate() {
        for &v in members {
            label[v as usize] = i as u32;
        }
    }
    let mut visited = vec![false; graph.vertex_count()];

    for (i, members) in components.iter().enumerate() {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            stats.timed_out = true;
            break;
        }
        let id = i as u32;
        let label = &label;
        let expansion = grow(
            graph,
            members,
            &|v| label[v as usize] == id,
            params,
            top.h_min(),
            prune,
            &mut visited,
            &mut stats,
        );
        if let Some(candidate) = expansion.community {
            top.insert(candidate);
        }
    }
    stats.elapsed = start.elapsed();
    Ok(SearchOutcome { top, stats })
}
