use std::fmt;
use std::str::FromStr;

use crate::approx::{newfra_search, pruning_search};
use crate::error::{Error, Result};
use crate::exact::{basic_search, slimtree_search, upperbound_search, SearchOutcome, SearchParams};
use crate::graph::WeightedBipartiteGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Basic,
    SlimTree,
    UpperBound,
    NewFra,
    Pruning,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Basic,
        Algorithm::SlimTree,
        Algorithm::UpperBound,
        Algorithm::NewFra,
        Algorithm::Pruning,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Basic => "basic",
            Algorithm::SlimTree => "slimtree",
            Algorithm::UpperBound => "upperbound",
            Algorithm::NewFra => "newfra",
            Algorithm::Pruning => "pruning",
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(
            self,
            Algorithm::Basic | Algorithm::SlimTree | Algorithm::UpperBound
        )
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown algorithm {s:?}")))
    }
}

pub fn run_algorithm(
    graph: &WeightedBipartiteGraph,
    algorithm: Algorithm,
    params: &SearchParams,
) -> Result<SearchOutcome> {
    match algorithm {
        Algorithm::Basic => basic_search(graph, params),
        Algorithm::SlimTree => slimtree_search(graph, params),
        Algorithm::UpperBound => upperbound_search(graph, params),
        Algorithm::NewFra => newfra_search(graph, params),
        Algorithm::Pruning => pruning_search(graph, params),
    }
}
