//! Discrete Hodge calculus on finite weighted graphs with boundary.

pub mod error;
pub mod forms;
pub mod graph;
pub mod linalg;

pub use error::Error;
pub use graph::{
    boundary_structure, enumerate_cliques, induced_weight, subgraph_tilde, BoundaryClique,
    BoundaryStructure, Clique, Graph, VertexId, WeightMode, WeightSpec, WeightedGraph,
};
