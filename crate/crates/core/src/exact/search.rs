use std::time::Instant;

use crate::community::Community;
use crate::error::{Error, Result};
use crate::exact::bounds::{ub1, ub2, ub3, BoundKind};
use crate::exact::{SearchOutcome, SearchParams, SearchStats};
use crate::graph::{Layer, VertexId, WeightedBipartiteGraph};
use crate::influence::Influence;
use crate::topr::TopRSet;
use crate::view::SubgraphView;

/// Sees every bound evaluation of [`upperbound_search_observed`].
pub trait BoundObserver {
    /// `view` is the re-peeled child about to be gated; `bounds` holds the
    /// enabled bounds in `ub1, ub2, ub3` order.
    fn observe(
        &mut self,
        view: &SubgraphView<'_>,
        bounds: &[(BoundKind, Influence)],
        h_min: Influence,
    );
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Strategy {
    /// Recurse on every single-vertex deletion of every component.
    Basic,
    /// Drop candidates peeled away by an earlier sibling deletion.
    SlimTree,
    /// Slim tree plus the bound gate on each child.
    UpperBound,
}

pub fn basic_search(
    graph: &WeightedBipartiteGraph,
    params: &SearchParams,
) -> Result<SearchOutcome> {
    run(graph, params, Strategy::Basic, None)
}

pub fn slimtree_search(
    graph: &WeightedBipartiteGraph,
    params: &SearchParams,
) -> Result<SearchOutcome> {
    run(graph, params, Strategy::SlimTree, None)
}

pub fn upperbound_search(
    graph: &WeightedBipartiteGraph,
    params: &SearchParams,
) -> Result<SearchOutcome> {
    run(graph, params, Strategy::UpperBound, None)
}

pub fn upperbound_search_observed(
    graph: &WeightedBipartiteGraph,
    params: &SearchParams,
    observer: &mut dyn BoundObserver,
) -> Result<SearchOutcome> {
    run(graph, params, Strategy::UpperBound, Some(observer))
}

fn run(
    graph: &WeightedBipartiteGraph,
    params: &SearchParams,
    strategy: Strategy,
    observer: Option<&mut dyn BoundObserver>,
) -> Result<SearchOutcome> {
    params.validate()?;
    if strategy == Strategy::UpperBound && !params.bounds.any() {
        return Err(Error::Validation(
            "at least one bound must be enabled".into(),
        ));
    }
    let start = Instant::now();
    let mut search = Search {
        graph,
        params,
        strategy,
        top: TopRSet::new(params.r),
        stats: SearchStats::default(),
        deadline: params.time_limit.map(|limit| start + limit),
        observer,
    };
    search.find(SubgraphView::full(graph));
    search.stats.elapsed = start.elapsed();
    Ok(SearchOutcome {
        top: search.top,
        stats: search.stats,
    })
}

struct Search<'g, 'p, 'o> {
    graph: &'g WeightedBipartiteGraph,
    params: &'p SearchParams,
    strategy: Strategy,
    top: TopRSet,
    stats: SearchStats,
    deadline: Option<Instant>,
    observer: Option<&'o mut dyn BoundObserver>,
}

impl<'g> Search<'g, '_, '_> {
    fn expired(&mut self) -> bool {
        if self.stats.timed_out {
            return true;
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                self.stats.timed_out = true;
            }
        }
        self.stats.timed_out
    }

    fn find(&mut self, mut view: SubgraphView<'g>) {
        if self.expired() {
            return;
        }
        self.stats.nodes += 1;
        let (alpha, beta) = (self.params.alpha, self.params.beta);
        view.peel(alpha, beta);
        self.stats.core_computations += 1;

        for members in view.component_vertex_sets() {
            if self.stats.timed_out {
                return;
            }
            let h = SubgraphView::induced(self.graph, &members);
            self.offer(&h);
            match self.strategy {
                Strategy::Basic => {
                    for &x in &members {
                        if self.stats.timed_out {
                            return;
                        }
                        let mut child = h.clone();
                        child.remove_vertex(x).expect("member is active");
                        self.find(child);
                    }
                }
                Strategy::SlimTree | Strategy::UpperBound => {
                    let split = members.partition_point(|&v| self.graph.layer(v) == Layer::Upper);
                    self.slim_layer(&h, &members[..split]);
                    self.slim_layer(&h, &members[split..]);
                }
            }
        }
    }

    /// Candidate loop over one layer of component `h`, ascending id.
    fn slim_layer(&mut self, h: &SubgraphView<'g>, candidates: &[VertexId]) {
        let (alpha, beta) = (self.params.alpha, self.params.beta);
        let mut dropped = vec![false; candidates.len()];
        for i in 0..candidates.len() {
            if dropped[i] {
                continue;
            }
            if self.stats.timed_out {
                return;
            }
            let x = candidates[i];
            let mut child = h.clone();
            let peeled = child
                .remove_and_peel(x, alpha, beta)
                .expect("candidate is active");
            self.stats.core_computations += 1;
            for p in peeled {
                // Candidates are one layer, so a hit is a later same-layer vertex.
                if let Ok(j) = candidates.binary_search(&p) {
                    if j > i && !dropped[j] {
                        dropped[j] = true;
                        self.stats.slim_skips += 1;
                    }
                }
            }
            if self.strategy == Strategy::UpperBound && !self.passes_bounds(&child) {
                continue;
            }
            self.find(child);
        }
    }

    fn passes_bounds(&mut self, child: &SubgraphView<'g>) -> bool {
        if child.has_empty_layer() {
            // No community can live here; nothing to bound.
            return false;
        }
        let config = self.params.bounds;
        let mut bounds = Vec::with_capacity(3);
        for kind in BoundKind::ALL {
            if !config.enabled(kind) {
                continue;
            }
            let value = match kind {
                BoundKind::Ub1 => ub1(child),
                BoundKind::Ub2 => ub2(child, self.params.alpha, self.params.beta),
                BoundKind::Ub3 => ub3(child),
            }
            .expect("both layers are nonempty");
            bounds.push((kind, value));
        }
        self.stats.bound_evaluations += 1;
        let h_min = self.top.h_min();
        if let Some(observer) = self.observer.as_deref_mut() {
            observer.observe(child, &bounds, h_min);
        }
        let (kind, ub) = bounds
            .iter()
            .copied()
            .reduce(|best, next| if next.1 < best.1 { next } else { best })
            .expect("at least one bound enabled");
        if ub > h_min {
            true
        } else {
            self.stats.cuts[kind.index()] += 1;
            false
        }
    }

    fn offer(&mut self, h: &SubgraphView<'g>) {
        let Ok(influence) = h.influence() else {
            return;
        };
        if influence > self.top.h_min() {
            let community = Community::from_view(h).expect("influence is defined");
            self.top.insert(community);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k22() -> WeightedBipartiteGraph {
        WeightedBipartiteGraph::from_edges(
            2,
            2,
            [(0, 0), (0, 1), (1, 0), (1, 1)],
            vec![1, 2],
            vec![3, 4],
        )
        .unwrap()
    }

    #[test]
    fn k22_single_community() {
        let g = k22();
        let params = SearchParams::new(2, 2, 1);
        for run in [basic_search, slimtree_search, upperbound_search] {
            let out = run(&g, &params).unwrap();
            assert_eq!(out.top.len(), 1);
            let c = &out.top.entries()[0];
            assert_eq!(c.influence, Influence::integer(5));
            assert_eq!(
                (c.upper_ids.clone(), c.lower_ids.clone()),
                (vec![0, 1], vec![0, 1])
            );
        }
    }

    #[test]
    fn empty_core_yields_nothing() {
        let g = WeightedBipartiteGraph::unweighted(1, 3, [(0, 0), (0, 1), (0, 2)]).unwrap();
        let out = basic_search(&g, &SearchParams::new(2, 2, 3)).unwrap();
        assert!(out.top.is_empty());
        assert_eq!(out.stats.nodes, 1);
    }

    #[test]
    fn invalid_params() {
        let g = k22();
        assert!(basic_search(&g, &SearchParams::new(0, 1, 1)).is_err());
        assert!(basic_search(&g, &SearchParams::new(1, 1, 0)).is_err());
        let none = SearchParams::new(1, 1, 1).with_bounds(crate::exact::BoundConfig::only(&[]));
        assert!(upperbound_search(&g, &none).is_err());
    }

    #[test]
    fn zero_time_limit_flags_timeout() {
        let g = k22();
        let params = SearchParams::new(1, 1, 1).with_time_limit(std::time::Duration::ZERO);
        let out = basic_search(&g, &params).unwrap();
        assert!(out.stats.timed_out);
        assert!(out.top.is_empty());
    }
}
