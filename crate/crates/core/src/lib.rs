//! Top-r (alpha, beta)-influential community search in vertex-weighted
//! bipartite graphs.
//!
//! A community is a connected induced subgraph in which every upper vertex
//! has at least `alpha` neighbors and every lower vertex at least `beta`.
//! Its influence is the mean upper-layer weight plus the mean lower-layer
//! weight. The crate provides three exact searches ([`exact`]), two greedy
//! searches ([`approx`]) and a brute-force [`oracle`] for small instances.

pub mod algorithm;
pub mod approx;
pub mod community;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod influence;
pub mod io;
pub mod oracle;
pub mod report;
pub mod topr;
pub mod view;

pub use algorithm::{run_algorithm, Algorithm};
pub use community::Community;
pub use error::{Error, Result};
pub use exact::{BoundConfig, BoundKind, SearchOutcome, SearchParams, SearchStats};
pub use graph::{Layer, VertexId, WeightedBipartiteGraph};
pub use influence::{compare_influence, Influence};
pub use topr::{InsertOutcome, TopRSet};
pub use view::SubgraphView;
