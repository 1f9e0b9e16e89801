//! Core data model: vertices, edges, hypergraphs, the derived system `H^(m)`,
//! structural predicates and graph builders.

mod derived;
mod edge;
mod graph;
mod hypergraph;
mod partite;
mod pattern;
mod predicates;
pub mod textfmt;
mod vertex;

pub use derived::{derive, derived_max_degree, DerivedSystem};
pub use edge::Edge;
pub use graph::{triangle_hypergraph, SimpleGraph};
pub use hypergraph::Hypergraph;
pub use partite::PartiteStructure;
pub use pattern::{contains_copy, is_embedding};
pub use predicates::{is_linear, is_m_cover, is_m_matching, uncovered_edges};
pub use textfmt::Instance;
pub use vertex::VertexId;
