//! Brute-force ground truth for small instances, community validation, the
//! unipartite-to-bipartite mirror construction and approximation metrics.

use std::cmp::Ordering;

use crate::community::Community;
use crate::error::{Error, Result};
use crate::graph::{Layer, VertexId, WeightedBipartiteGraph};
use crate::influence::Influence;
use crate::topr::TopRSet;
use crate::view::SubgraphView;

/// Largest instance the subset enumeration accepts.
pub const MAX_ORACLE_VERTICES: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeViolation {
    pub layer: Layer,
    /// 0-based id within the layer.
    pub id: u32,
    pub degree: u32,
    pub required: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityDiagnostics {
    pub both_layers_nonempty: bool,
    pub connected: bool,
    pub violations: Vec<DegreeViolation>,
    /// Smallest `degree - required` over all members.
    pub min_slack: Option<i64>,
    pub recomputed: Option<Influence>,
    pub influence_matches: bool,
}

impl CommunityDiagnostics {
    pub fn is_valid(&self) -> bool {
        self.both_layers_nonempty
            && self.connected
            && self.violations.is_empty()
            && self.influence_matches
    }
}

/// Checks connectivity, cohesiveness and the stored influence of
/// `candidate` against `graph`. Pure; never mutates.
pub fn validate_community(
    graph: &WeightedBipartiteGraph,
    candidate: &Community,
    alpha: u32,
    beta: u32,
) -> Result<CommunityDiagnostics> {
    if let Some(&u) = candidate
        .upper_ids
        .iter()
        .find(|&&u| u as usize >= graph.upper_count())
    {
        return Err(Error::Validation(format!("upper id {u} out of range")));
    }
    if let Some(&v) = candidate
        .lower_ids
        .iter()
        .find(|&&v| v as usize >= graph.lower_count())
    {
        return Err(Error::Validation(format!("lower id {v} out of range")));
    }
    let members = candidate.vertices(graph);
    let view = SubgraphView::induced(graph, &members);
    let mut violations = Vec::new();
    let mut min_slack: Option<i64> = None;
    for &v in &members {
        let layer = graph.layer(v);
        let required = match layer {
            Layer::Upper => alpha,
            Layer::Lower => beta,
        };
        let degree = view.live_degree(v);
        let slack = degree as i64 - required as i64;
        min_slack = Some(min_slack.map_or(slack, |m| m.min(slack)));
        if degree < required {
            violations.push(DegreeViolation {
                layer,
                id: graph.local_id(v),
                degree,
                required,
            });
        }
    }
    let recomputed = view.influence().ok();
    Ok(CommunityDiagnostics {
        both_layers_nonempty: !view.has_empty_layer(),
        connected: !members.is_empty() && view.is_connected(),
        violations,
        min_slack,
        recomputed,
        influence_matches: recomputed == Some(candidate.influence),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceInfo {
    pub upper_count: usize,
    pub lower_count: usize,
    pub edge_count: usize,
    pub alpha: u32,
    pub beta: u32,
}

/// Every (alpha, beta)-influential community of a small graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub instance: InstanceInfo,
    /// Influence descending, then size descending, then ids ascending.
    pub communities: Vec<Community>,
    pub diagnostics: Vec<CommunityDiagnostics>,
    /// Connected cores dropped because an equal-influence strict superset
    /// is also a connected core.
    pub non_maximal_discarded: usize,
}

impl EnumerationReport {
    pub fn top(&self, r: usize) -> &[Community] {
        &self.communities[..r.min(self.communities.len())]
    }

    pub fn contains(&self, community: &Community) -> bool {
        self.communities
            .iter()
            .any(|c| c.same_vertices(community) && c.influence == community.influence)
    }
}

pub fn enumerate_influential_communities(
    graph: &WeightedBipartiteGraph,
    alpha: u32,
    beta: u32,
) -> Result<EnumerationReport> {
    let n = graph.vertex_count();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            limit: MAX_ORACLE_VERTICES,
        });
    }
    let adj: Vec<u32> = (0..n as VertexId)
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &x| m | (1 << x)))
        .collect();
    let need: Vec<u32> = (0..n as VertexId)
        .map(|v| match graph.layer(v) {
            Layer::Upper => alpha,
            Layer::Lower => beta,
        })
        .collect();
    let upper_mask: u32 = (1u32 << graph.upper_count()) - 1;
    let all: u32 = if n == 0 { 0 } else { ((1u64 << n) - 1) as u32 };

    let mut kept: Vec<(u32, Influence)> = Vec::new();
    for mask in 1..=all {
        if mask & upper_mask == 0 || mask & !upper_mask == 0 {
            continue;
        }
        let cohesive = bits(mask).all(|v| (adj[v] & mask).count_ones() >= need[v]);
        if !cohesive || !mask_connected(mask, &adj) {
            continue;
        }
        kept.push((mask, mask_influence(graph, mask)));
    }

    // Maximality: drop any mask with an equal-influence strict superset.
    kept.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut maximal = Vec::new();
    let mut discarded = 0;
    let mut start = 0;
    while start < kept.len() {
        let mut end = start;
        while end < kept.len() && kept[end].1 == kept[start].1 {
            end += 1;
        }
        let group = &kept[start..end];
        for &(s, f) in group {
            if group.iter().any(|&(t, _)| t != s && t & s == s) {
                discarded += 1;
            } else {
                maximal.push((s, f));
            }
        }
        start = end;
    }

    let mut communities: Vec<Community> = maximal
        .iter()
        .map(|&(mask, _)| {
            let members: Vec<VertexId> = bits(mask).map(|v| v as VertexId).collect();
            Community::from_vertices(graph, &members).expect("both layers nonempty")
        })
        .collect();
    communities.sort_by(canonical_order);
    let diagnostics = communities
        .iter()
        .map(|c| validate_community(graph, c, alpha, beta).expect("ids in range"))
        .collect();

    Ok(EnumerationReport {
        instance: InstanceInfo {
            upper_count: graph.upper_count(),
            lower_count: graph.lower_count(),
            edge_count: graph.edge_count(),
            alpha,
            beta,
        },
        communities,
        diagnostics,
        non_maximal_discarded: discarded,
    })
}

/// Influence descending, size descending, then ids lexicographically.
pub fn canonical_order(a: &Community, b: &Community) -> Ordering {
    b.influence
        .cmp(&a.influence)
        .then(b.len().cmp(&a.len()))
        .then_with(|| a.upper_ids.cmp(&b.upper_ids))
        .then_with(|| a.lower_ids.cmp(&b.lower_ids))
}

/// The first `r` communities of the enumeration order.
pub fn brute_force_topr(
    graph: &WeightedBipartiteGraph,
    alpha: u32,
    beta: u32,
    r: usize,
) -> Result<TopRSet> {
    let report = enumerate_influential_communities(graph, alpha, beta)?;
    Ok(topr_from_report(&report, r))
}

pub fn topr_from_report(report: &EnumerationReport, r: usize) -> TopRSet {
    let mut set = TopRSet::new(r.max(1));
    for c in report.top(r) {
        set.insert(c.clone());
    }
    set
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask & (1 << i) != 0)
}

fn mask_connected(mask: u32, adj: &[u32]) -> bool {
    let first = mask.trailing_zeros();
    let mut reached = 1u32 << first;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v] & mask;
        }
        frontier = next & !reached;
        reached |= next;
    }
    reached == mask
}

fn mask_influence(graph: &WeightedBipartiteGraph, mask: u32) -> Influence {
    let (mut su, mut nu, mut sv, mut nv) = (0u128, 0u64, 0u128, 0u64);
    for v in bits(mask) {
        let w = graph.weight(v as VertexId) as u128;
        match graph.layer(v as VertexId) {
            Layer::Upper => {
                su += w;
                nu += 1;
            }
            Layer::Lower => {
                sv += w;
                nv += 1;
            }
        }
    }
    Influence::from_layers(su, nu, sv, nv).expect("both layers nonempty")
}

/// Simple undirected vertex-weighted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipartiteGraph {
    pub weights: Vec<u64>,
    pub edges: Vec<(u32, u32)>,
}

/// Each vertex `x` becomes an upper mirror and a lower mirror of equal
/// weight; each edge `{x, y}` becomes `(upper x, lower y)` and
/// `(upper y, lower x)`.
pub fn mirror_transform(graph: &UnipartiteGraph) -> Result<WeightedBipartiteGraph> {
    let n = graph.weights.len();
    let mut edges = Vec::with_capacity(2 * graph.edges.len());
    for &(x, y) in &graph.edges {
        if x == y {
            return Err(Error::Validation(format!("self-loop on vertex {x}")));
        }
        if x as usize >= n || y as usize >= n {
            return Err(Error::Validation(format!("edge ({x}, {y}) out of range")));
        }
        edges.push((x, y));
        edges.push((y, x));
    }
    WeightedBipartiteGraph::from_edges(n, n, edges, graph.weights.clone(), graph.weights.clone())
}

/// Influence ratio of the approximate entry at one rank to the exact one.
#[derive(Debug, Clone, PartialEq)]
pub struct RankRatio {
    pub rank: usize,
    pub exact: Influence,
    pub approx: Option<Influence>,
    /// Reduced `approx / exact` when it fits in 128 bits.
    pub ratio: Option<(u128, u128)>,
    pub decimal: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproximationMetrics {
    pub ranks: Vec<RankRatio>,
    /// Fraction of exact ranks that have an approximate entry.
    pub coverage: f64,
}

impl ApproximationMetrics {
    /// True when the top approximate influence equals the top exact one.
    pub fn top1_exact(&self) -> bool {
        self.ranks
            .first()
            .is_some_and(|r| r.approx.is_some_and(|a| a == r.exact))
    }
}

pub fn approximation_ratio(approx: &TopRSet, exact: &TopRSet) -> ApproximationMetrics {
    let ranks: Vec<RankRatio> = exact
        .entries()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let a = approx.entries().get(i).map(|c| c.influence);
            let (ratio, decimal) = match a {
                None => (None, 0.0),
                Some(a) => rational_ratio(a, e.influence),
            };
            RankRatio {
                rank: i + 1,
                exact: e.influence,
                approx: a,
                ratio,
                decimal,
            }
        })
        .collect();
    let covered = ranks.iter().filter(|r| r.approx.is_some()).count();
    let coverage = if ranks.is_empty() {
        1.0
    } else {
        covered as f64 / ranks.len() as f64
    };
    ApproximationMetrics { ranks, coverage }
}

fn rational_ratio(a: Influence, e: Influence) -> (Option<(u128, u128)>, f64) {
    let (Some((an, ad)), Some((en, ed))) = (a.reduced(), e.reduced()) else {
        return (None, 0.0);
    };
    if en == 0 {
        return if an == 0 {
            (Some((1, 1)), 1.0)
        } else {
            (None, f64::INFINITY)
        };
    }
    let exact = an
        .checked_mul(ed)
        .zip(ad.checked_mul(en))
        .and_then(|(n, d)| Influence::ratio(n, d).ok())
        .and_then(|r| r.reduced());
    let decimal = match exact {
        Some((n, d)) => n as f64 / d as f64,
        None => a.to_f64() / e.to_f64(),
    };
    (exact, decimal)
}
