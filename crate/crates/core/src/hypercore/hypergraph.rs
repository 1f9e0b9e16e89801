use std::collections::BTreeSet;

use super::{Edge, VertexId};
use crate::error::{Error, Result};

/// k-uniform hypergraph with a canonical (sorted, duplicate-free) edge list.
///
/// Equality is set equality of vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    uniformity: usize,
    vertices: BTreeSet<VertexId>,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Builds a k-uniform hypergraph. Edge vertices are added to the vertex
    /// set; duplicate edges are rejected, as are edges of the wrong size.
    pub fn new<V, E>(uniformity: usize, vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = Edge>,
    {
        if uniformity == 0 {
            return Err(Error::MalformedHypergraph("uniformity must be at least 1".into()));
        }
        let mut vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            if e.len() != uniformity {
                return Err(Error::MalformedHypergraph(format!(
                    "edge {{{e}}} has size {} in a {uniformity}-uniform hypergraph",
                    e.len()
                )));
            }
            vertices.extend(e.iter().cloned());
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedHypergraph(format!("duplicate edge {{{}}}", w[0])));
        }
        Ok(Hypergraph {
            uniformity,
            vertices,
            edges,
        })
    }

    /// Vertex set is the union of the edges.
    pub fn from_edges<E: IntoIterator<Item = Edge>>(uniformity: usize, edges: E) -> Result<Self> {
        Self::new(uniformity, std::iter::empty(), edges)
    }

    /// Parses edges written as whitespace-separated tokens; uniformity is
    /// taken from the first edge.
    pub fn parse_edges(lines: &[&str]) -> Result<Self> {
        let edges = lines.iter().map(|l| Edge::parse(l)).collect::<Result<Vec<_>>>()?;
        let k = edges
            .first()
            .map(Edge::len)
            .ok_or_else(|| Error::MalformedHypergraph("no edges to infer uniformity from".into()))?;
        Self::from_edges(k, edges)
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn index_of(&self, e: &Edge) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.index_of(e).is_some()
    }

    /// Vertices lying in at least one edge.
    pub fn covered_vertices(&self) -> BTreeSet<VertexId> {
        self.edges.iter().flat_map(|e| e.iter().cloned()).collect()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: &VertexId) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Same vertex set, edges restricted to those accepted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> Hypergraph {
        Hypergraph {
            uniformity: self.uniformity,
            vertices: self.vertices.clone(),
            edges: self.edges.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    /// Adds an edge, returning a new hypergraph.
    pub fn with_edge(&self, e: Edge) -> Result<Hypergraph> {
        Hypergraph::new(
            self.uniformity,
            self.vertices.iter().cloned(),
            self.edges.iter().cloned().chain(std::iter::once(e)),
        )
    }

    /// True iff every two distinct edges share at least `m` vertices, i.e.
    /// no two edges form an m-matching.
    pub fn is_m_intersecting(&self, m: usize) -> bool {
        self.edges.iter().enumerate().all(|(i, e)| {
            self.edges[i + 1..]
                .iter()
                .all(|f| e.intersection_len(f) >= m)
        })
    }
}
