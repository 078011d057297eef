//! JSON-lines records shared by the CLI and the oracle report.
//!
//! Ids in records are 1-based, matching the edge and weight file formats.

use serde::Serialize;

use crate::community::Community;
use crate::exact::SearchStats;
use crate::oracle::{CommunityDiagnostics, EnumerationReport};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommunityRecord {
    pub rank: usize,
    /// Exact value in lowest terms, `"n"` or `"n/d"`.
    pub influence: String,
    pub influence_decimal: f64,
    pub upper: Vec<u32>,
    pub lower: Vec<u32>,
}

impl CommunityRecord {
    pub fn new(rank: usize, community: &Community) -> Self {
        CommunityRecord {
            rank,
            influence: community.influence.to_string(),
            influence_decimal: community.influence.to_f64(),
            upper: community.upper_ids.iter().map(|&u| u + 1).collect(),
            lower: community.lower_ids.iter().map(|&v| v + 1).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsBody {
    pub algo: String,
    pub nodes: u64,
    pub core_computations: u64,
    pub bound_evaluations: u64,
    pub cuts_ub1: u64,
    pub cuts_ub2: u64,
    pub cuts_ub3: u64,
    pub slim_skips: u64,
    pub vertices_expanded: u64,
    pub early_breaks: u64,
    pub communities: usize,
    pub timed_out: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsRecord {
    pub stats: StatsBody,
}

impl StatsRecord {
    /// Wall time is left out so that records are reproducible.
    pub fn new(algo: &str, stats: &SearchStats, communities: usize) -> Self {
        StatsRecord {
            stats: StatsBody {
                algo: algo.to_string(),
                nodes: stats.nodes,
                core_computations: stats.core_computations,
                bound_evaluations: stats.bound_evaluations,
                cuts_ub1: stats.cuts[0],
                cuts_ub2: stats.cuts[1],
                cuts_ub3: stats.cuts[2],
                slim_skips: stats.slim_skips,
                vertices_expanded: stats.vertices_expanded,
                early_breaks: stats.early_breaks,
                communities,
                timed_out: stats.timed_out,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagnosticsRecord {
    pub connected: bool,
    pub cohesive: bool,
    pub maximal: bool,
    pub min_slack: Option<i64>,
    pub influence_matches: bool,
}

impl DiagnosticsRecord {
    fn new(d: &CommunityDiagnostics) -> Self {
        DiagnosticsRecord {
            connected: d.connected,
            cohesive: d.violations.is_empty() && d.both_layers_nonempty,
            // Non-maximal candidates never reach the report.
            maximal: true,
            min_slack: d.min_slack,
            influence_matches: d.influence_matches,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleCommunityRecord {
    #[serde(flatten)]
    pub community: CommunityRecord,
    pub diagnostics: DiagnosticsRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub n_u: usize,
    pub n_v: usize,
    pub m: usize,
    pub alpha: u32,
    pub beta: u32,
    pub communities: usize,
    pub non_maximal_discarded: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummaryRecord {
    pub oracle: OracleSummary,
}

/// One record per community followed by a summary record.
pub fn enumeration_lines(report: &EnumerationReport) -> Vec<String> {
    let mut lines: Vec<String> = report
        .communities
        .iter()
        .zip(&report.diagnostics)
        .enumerate()
        .map(|(i, (c, d))| {
            let record = OracleCommunityRecord {
                community: CommunityRecord::new(i + 1, c),
                diagnostics: DiagnosticsRecord::new(d),
            };
            serde_json::to_string(&record).expect("records serialize")
        })
        .collect();
    let summary = OracleSummaryRecord {
        oracle: OracleSummary {
            n_u: report.instance.upper_count,
            n_v: report.instance.lower_count,
            m: report.instance.edge_count,
            alpha: report.instance.alpha,
            beta: report.instance.beta,
            communities: report.communities.len(),
            non_maximal_discarded: report.non_maximal_discarded,
        },
    };
    lines.push(serde_json::to_string(&summary).expect("records serialize"));
    lines
}
