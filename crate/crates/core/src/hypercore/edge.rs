use std::fmt;

use itertools::Itertools;

use super::VertexId;
use crate::error::{Error, Result};

/// Strictly sorted, duplicate-free vertex set.
///
/// Used both for hyperedges and for the m-sets of a derived system.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge(Vec<VertexId>);

impl Edge {
    /// Sorts the vertices; rejects repeated vertices.
    pub fn new<I, V>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<VertexId>,
    {
        let mut v: Vec<VertexId> = vertices.into_iter().map(Into::into).collect();
        v.sort();
        if let Some((a, _)) = v.iter().tuple_windows().find(|(a, b)| a == b) {
            return Err(Error::MalformedHypergraph(format!(
                "vertex {a} repeated in an edge"
            )));
        }
        Ok(Edge(v))
    }

    /// Whitespace-separated tokens, e.g. `Edge::parse("1 2 3")`.
    pub fn parse(s: &str) -> Result<Self> {
        Edge::new(s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()))
    }

    pub(crate) fn from_sorted(v: Vec<VertexId>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Edge(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexId> {
        self.0.iter()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &Edge) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn intersection(&self, other: &Edge) -> Edge {
        Edge(self.0.iter().filter(|v| other.contains(v)).cloned().collect())
    }

    pub fn intersection_len(&self, other: &Edge) -> usize {
        let (mut i, mut j, mut n) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    n += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        n
    }

    pub fn union(&self, other: &Edge) -> Edge {
        Edge(self.0.iter().chain(other.0.iter()).cloned().sorted().dedup().collect())
    }

    pub fn difference(&self, other: &Edge) -> Edge {
        Edge(self.0.iter().filter(|v| !other.contains(v)).cloned().collect())
    }

    /// All m-subsets in lexicographic order.
    pub fn subsets(&self, m: usize) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().cloned().combinations(m).map(Edge)
    }

    /// Comma-joined canonical key, as used by the weight text format.
    pub fn key(&self) -> String {
        self.0.iter().join(",")
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(" "))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

impl<'a> IntoIterator for &'a Edge {
    type Item = &'a VertexId;
    type IntoIter = std::slice::Iter<'a, VertexId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}
