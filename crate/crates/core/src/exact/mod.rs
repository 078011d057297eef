//! Exact top-r search: the recursive baseline, the slim-tree variant and
//! the bound-pruned variant.

mod bounds;
mod search;

pub use bounds::{
    double_greedy_avg, double_greedy_trace, ub1, ub2, ub3, BoundKind, Delta, DoubleGreedyState,
    DoubleGreedyStep,
};
pub use search::{
    basic_search, slimtree_search, upperbound_search, upperbound_search_observed, BoundObserver,
};

use std::time::Duration;

use crate::error::{Error, Result};
use crate::topr::TopRSet;

/// Which bounds take part in the minimum used by the bound-pruned search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundConfig {
    pub ub1: bool,
    pub ub2: bool,
    pub ub3: bool,
}

impl Default for BoundConfig {
    fn default() -> Self {
        BoundConfig {
            ub1: true,
            ub2: true,
            ub3: true,
        }
    }
}

impl BoundConfig {
    pub fn only(kinds: &[BoundKind]) -> Self {
        BoundConfig {
            ub1: kinds.contains(&BoundKind::Ub1),
            ub2: kinds.contains(&BoundKind::Ub2),
            ub3: kinds.contains(&BoundKind::Ub3),
        }
    }

    pub fn enabled(&self, kind: BoundKind) -> bool {
        match kind {
            BoundKind::Ub1 => self.ub1,
            BoundKind::Ub2 => self.ub2,
            BoundKind::Ub3 => self.ub3,
        }
    }

    pub fn any(&self) -> bool {
        self.ub1 || self.ub2 || self.ub3
    }

    /// Parses a comma list such as `ub1,ub3`.
    pub fn parse_list(list: &str) -> Result<Self> {
        let kinds = list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<BoundKind>>>()?;
        let config = BoundConfig::only(&kinds);
        if !config.any() {
            return Err(Error::Validation(
                "at least one bound must be enabled".into(),
            ));
        }
        Ok(config)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchParams {
    pub alpha: u32,
    pub beta: u32,
    pub r: usize,
    pub bounds: BoundConfig,
    pub time_limit: Option<Duration>,
}

impl SearchParams {
    pub fn new(alpha: u32, beta: u32, r: usize) -> Self {
        SearchParams {
            alpha,
            beta,
            r,
            bounds: BoundConfig::default(),
            time_limit: None,
        }
    }

    pub fn with_bounds(mut self, bounds: BoundConfig) -> Self {
        self.bounds = bounds;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha == 0 || self.beta == 0 {
            return Err(Error::Validation(
                "alpha and beta must be at least 1".into(),
            ));
        }
        if self.r == 0 {
            return Err(Error::Validation("r must be at least 1".into()));
        }
        Ok(())
    }
}

/// Counters for one search run. Exact searches fill the recursion
/// counters, the greedy searches fill the expansion counters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Recursive `Find` invocations.
    pub nodes: u64,
    pub core_computations: u64,
    pub bound_evaluations: u64,
    /// Branches cut, attributed to the bound that attained the minimum.
    pub cuts: [u64; 3],
    /// Candidates dropped because an earlier sibling deletion peeled them.
    pub slim_skips: u64,
    /// Vertices added to a growing community by the greedy searches.
    pub vertices_expanded: u64,
    /// Expansions stopped early by the influence check.
    pub early_breaks: u64,
    pub elapsed: Duration,
    pub timed_out: bool,
}

impl SearchStats {
    pub fn total_cuts(&self) -> u64 {
        self.cuts.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub top: TopRSet,
    pub stats: SearchStats,
}
