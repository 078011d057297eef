//! Upper bounds on the influence of any connected core inside a view.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Layer, WeightedBipartiteGraph};
use crate::influence::Influence;
use crate::view::SubgraphView;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Ub1,
    Ub2,
    Ub3,
}

impl BoundKind {
    pub const ALL: [BoundKind; 3] = [BoundKind::Ub1, BoundKind::Ub2, BoundKind::Ub3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Ub1 => "ub1",
            BoundKind::Ub2 => "ub2",
            BoundKind::Ub3 => "ub3",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "ub1" => Ok(BoundKind::Ub1),
            "ub2" => Ok(BoundKind::Ub2),
            "ub3" => Ok(BoundKind::Ub3),
            other => Err(Error::Validation(format!("unknown bound {other:?}"))),
        }
    }
}

/// Largest upper weight plus largest lower weight.
pub fn ub1(view: &SubgraphView<'_>) -> Result<Influence> {
    match (view.layer_max(Layer::Upper), view.layer_max(Layer::Lower)) {
        (Some(a), Some(b)) => Ok(Influence::integer(a as u128 + b as u128)),
        _ => Err(Error::UndefinedInfluence),
    }
}

/// `sum_U / beta + sum_V / alpha`: every core has at least `beta` upper and
/// `alpha` lower vertices, and weights are non-negative.
pub fn ub2(view: &SubgraphView<'_>, alpha: u32, beta: u32) -> Result<Influence> {
    if view.has_empty_layer() {
        return Err(Error::UndefinedInfluence);
    }
    Influence::from_layers(
        view.layer_sum(Layer::Upper),
        beta as u64,
        view.layer_sum(Layer::Lower),
        alpha as u64,
    )
}

/// Twice the double-greedy subset average of each layer, weights taken in
/// ascending vertex id order.
pub fn ub3(view: &SubgraphView<'_>) -> Result<Influence> {
    if view.has_empty_layer() {
        return Err(Error::UndefinedInfluence);
    }
    let g = view.graph();
    let upper = layer_greedy(view, g, Layer::Upper);
    let lower = layer_greedy(view, g, Layer::Lower);
    Influence::from_layers(
        2 * upper.x_sum,
        upper.x_count,
        2 * lower.x_sum,
        lower.x_count,
    )
}

fn layer_greedy(
    view: &SubgraphView<'_>,
    g: &WeightedBipartiteGraph,
    layer: Layer,
) -> DoubleGreedyState {
    let mut state = DoubleGreedyState::new(view.layer_sum(layer), view.layer_count(layer));
    for v in view.layer_vertices(layer) {
        state.step(g.weight(v));
    }
    state
}

/// Average of the set the double-greedy pass keeps; 0 for no input.
pub fn double_greedy_avg(weights: &[u64]) -> Influence {
    let total = weights.iter().map(|&w| w as u128).sum();
    let mut state = DoubleGreedyState::new(total, weights.len() as u64);
    for &w in weights {
        state.step(w);
    }
    state.average()
}

/// Signed rational change in a running average.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Delta {
    pub num: i128,
    pub den: u128,
}

impl Delta {
    /// `max(self, 0)`.
    pub fn clamped(self) -> Influence {
        Influence::Finite {
            num: self.num.max(0) as u128,
            den: self.den,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleGreedyStep {
    pub weight: u64,
    pub add_gain: Delta,
    pub drop_gain: Delta,
    pub accepted: bool,
}

/// Running state of one double-greedy pass: `X` grows from empty, `Y`
/// shrinks from the full multiset, and `X ⊆ Y` throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleGreedyState {
    pub x_sum: u128,
    pub x_count: u64,
    pub y_sum: u128,
    pub y_count: u64,
}

impl DoubleGreedyState {
    pub fn new(total: u128, count: u64) -> Self {
        DoubleGreedyState {
            x_sum: 0,
            x_count: 0,
            y_sum: total,
            y_count: count,
        }
    }

    /// Decides the next element. Ties between the clamped gains accept.
    pub fn step(&mut self, weight: u64) -> DoubleGreedyStep {
        let w = weight as i128;
        // avg(X + w) - avg(X)
        let add_gain = if self.x_count == 0 {
            Delta { num: w, den: 1 }
        } else {
            let c = self.x_count as i128;
            Delta {
                num: c * w - self.x_sum as i128,
                den: (c * (c + 1)) as u128,
            }
        };
        // avg(Y - w) - avg(Y)
        let drop_gain = match self.y_count {
            0 => panic!("double greedy stepped past the end of its input"),
            1 => Delta { num: -w, den: 1 },
            d => {
                let d = d as i128;
                Delta {
                    num: self.y_sum as i128 - d * w,
                    den: (d * (d - 1)) as u128,
                }
            }
        };
        let accepted = add_gain.clamped() >= drop_gain.clamped();
        if accepted {
            self.x_sum += weight as u128;
            self.x_count += 1;
        } else {
            self.y_sum -= weight as u128;
            self.y_count -= 1;
        }
        DoubleGreedyStep {
            weight,
            add_gain,
            drop_gain,
            accepted,
        }
    }

    pub fn average(&self) -> Influence {
        if self.x_count == 0 {
            Influence::integer(0)
        } else {
            Influence::Finite {
                num: self.x_sum,
                den: self.x_count as u128,
            }
        }
    }
}

/// Full per-step trace, for inspection and tests.
pub fn double_greedy_trace(weights: &[u64]) -> (Vec<DoubleGreedyStep>, DoubleGreedyState) {
    let total = weights.iter().map(|&w| w as u128).sum();
    let mut state = DoubleGreedyState::new(total, weights.len() as u64);
    let steps = weights.iter().map(|&w| state.step(w)).collect();
    (steps, state)
}
