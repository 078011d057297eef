use crate::error::{Error, Result};
use crate::graph::{Layer, VertexId, WeightedBipartiteGraph};
use crate::influence::Influence;
use crate::view::SubgraphView;

/// A candidate community: 0-based layer-local ids, both lists sorted and
/// duplicate-free, plus its influence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Community {
    pub upper_ids: Vec<u32>,
    pub lower_ids: Vec<u32>,
    pub influence: Influence,
}

impl Community {
    /// Snapshot of every active vertex of `view`.
    pub fn from_view(view: &SubgraphView<'_>) -> Result<Self> {
        let g = view.graph();
        let influence = view.influence()?;
        Ok(Community {
            upper_ids: view
                .layer_vertices(Layer::Upper)
                .map(|v| g.local_id(v))
                .collect(),
            lower_ids: view
                .layer_vertices(Layer::Lower)
                .map(|v| g.local_id(v))
                .collect(),
            influence,
        })
    }

    /// Builds from global vertex ids, computing the influence.
    pub fn from_vertices(graph: &WeightedBipartiteGraph, vertices: &[VertexId]) -> Result<Self> {
        let mut upper_ids = Vec::new();
        let mut lower_ids = Vec::new();
        let (mut su, mut sv) = (0u128, 0u128);
        for &v in vertices {
            if v as usize >= graph.vertex_count() {
                return Err(Error::Validation(format!("vertex {v} out of range")));
            }
            match graph.layer(v) {
                Layer::Upper => {
                    upper_ids.push(graph.local_id(v));
                    su += graph.weight(v) as u128;
                }
                Layer::Lower => {
                    lower_ids.push(graph.local_id(v));
                    sv += graph.weight(v) as u128;
                }
            }
        }
        upper_ids.sort_unstable();
        lower_ids.sort_unstable();
        if upper_ids.windows(2).any(|w| w[0] == w[1]) || lower_ids.windows(2).any(|w| w[0] == w[1])
        {
            return Err(Error::Validation("duplicate vertex in community".into()));
        }
        let influence =
            Influence::from_layers(su, upper_ids.len() as u64, sv, lower_ids.len() as u64)?;
        Ok(Community {
            upper_ids,
            lower_ids,
            influence,
        })
    }

    pub fn len(&self) -> usize {
        self.upper_ids.len() + self.lower_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Global ids, ascending.
    pub fn vertices(&self, graph: &WeightedBipartiteGraph) -> Vec<VertexId> {
        self.upper_ids
            .iter()
            .map(|&u| graph.upper(u))
            .chain(self.lower_ids.iter().map(|&v| graph.lower(v)))
            .collect()
    }

    /// Vertex-set containment, layer by layer.
    pub fn is_subset_of(&self, other: &Community) -> bool {
        is_sorted_subset(&self.upper_ids, &other.upper_ids)
            && is_sorted_subset(&self.lower_ids, &other.lower_ids)
    }

    pub fn same_vertices(&self, other: &Community) -> bool {
        self.upper_ids == other.upper_ids && self.lower_ids == other.lower_ids
    }
}

/// Linear merge over two ascending lists.
fn is_sorted_subset(small: &[u32], large: &[u32]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut j = 0;
    for &x in small {
        while j < large.len() && large[j] < x {
            j += 1;
        }
        if j == large.len() || large[j] != x {
            return false;
        }
        j += 1;
    }
    true
}
