use std::collections::{BTreeMap, BTreeSet};

use super::{Edge, Hypergraph, VertexId};
use crate::error::{Error, Result};

/// Simple undirected graph with an optional bipartition `(B, C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<(VertexId, VertexId)>,
    bipartition: Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)>,
}

impl SimpleGraph {
    /// Edges are stored with the smaller endpoint first. Loops and repeated
    /// edges are rejected; with a bipartition, every edge must cross it.
    pub fn new<V, E>(
        vertices: V,
        edges: E,
        bipartition: Option<(BTreeSet<VertexId>, BTreeSet<VertexId>)>,
    ) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Structure(format!("loop at {a}")));
            }
            let e = if a < b { (a, b) } else { (b, a) };
            vertices.insert(e.0.clone());
            vertices.insert(e.1.clone());
            if !set.insert(e.clone()) {
                return Err(Error::Structure(format!("repeated edge {}-{}", e.0, e.1)));
            }
        }
        if let Some((b, c)) = &bipartition {
            if let Some(v) = b.intersection(c).next() {
                return Err(Error::Structure(format!("{v} lies on both sides of the bipartition")));
            }
            vertices.extend(b.iter().cloned());
            vertices.extend(c.iter().cloned());
            if let Some(v) = vertices.iter().find(|v| !b.contains(v) && !c.contains(v)) {
                return Err(Error::Structure(format!("{v} is outside the bipartition")));
            }
            if let Some((x, y)) = set
                .iter()
                .find(|(x, y)| b.contains(x) == b.contains(y))
            {
                return Err(Error::Structure(format!("edge {x}-{y} does not cross the bipartition")));
            }
        }
        Ok(SimpleGraph {
            vertices,
            edges: set,
            bipartition,
        })
    }

    /// Complete graph on tokens `1..=n`.
    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|a| ((a + 1)..=n).map(move |b| (a.into(), b.into())));
        Self::new((1..=n).map(VertexId::from), edges, None).expect("complete graph is simple")
    }

    /// Cycle `1-2-...-n-1`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parameter(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges = (1..=n).map(|a| (a.into(), (a % n + 1).into()));
        Self::new((1..=n).map(VertexId::from), edges, None)
    }

    /// `K_{a,b}` with sides `b1..ba` and `c1..cb`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let left: BTreeSet<VertexId> = (1..=a).map(|i| format!("b{i}").into()).collect();
        let right: BTreeSet<VertexId> = (1..=b).map(|i| format!("c{i}").into()).collect();
        let edges: Vec<(VertexId, VertexId)> = left
            .iter()
            .flat_map(|x| right.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        Self::new(std::iter::empty(), edges, Some((left, right))).expect("complete bipartite graph")
    }

    /// Bipartite graph from `(b, c)` pairs over explicit sides.
    pub fn bipartite(
        left: BTreeSet<VertexId>,
        right: BTreeSet<VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        Self::new(std::iter::empty(), edges, Some((left, right)))
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn bipartition(&self) -> Option<&(BTreeSet<VertexId>, BTreeSet<VertexId>)> {
        self.bipartition.as_ref()
    }

    pub fn has_edge(&self, a: &VertexId, b: &VertexId) -> bool {
        let key = if a < b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        self.edges.contains(&key)
    }

    pub fn neighbors(&self) -> BTreeMap<VertexId, BTreeSet<VertexId>> {
        let mut nb: BTreeMap<VertexId, BTreeSet<VertexId>> =
            self.vertices.iter().map(|v| (v.clone(), BTreeSet::new())).collect();
        for (a, b) in &self.edges {
            nb.get_mut(a).expect("endpoint").insert(b.clone());
            nb.get_mut(b).expect("endpoint").insert(a.clone());
        }
        nb
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors().values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Edges oriented as `(left, right)` according to the bipartition.
    pub fn oriented_edges(&self) -> Result<Vec<(VertexId, VertexId)>> {
        let (left, _) = self
            .bipartition
            .as_ref()
            .ok_or_else(|| Error::Structure("graph has no bipartition".into()))?;
        Ok(self
            .edges
            .iter()
            .map(|(a, b)| {
                if left.contains(a) {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect())
    }

    /// Same vertices and bipartition, edges restricted by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(&(VertexId, VertexId)) -> bool) -> SimpleGraph {
        SimpleGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().filter(|e| keep(e)).cloned().collect(),
            bipartition: self.bipartition.clone(),
        }
    }
}

/// 3-uniform hypergraph of the triangles of `g`, on the vertex set of `g`.
pub fn triangle_hypergraph(g: &SimpleGraph) -> Hypergraph {
    let nb = g.neighbors();
    let mut triangles = Vec::new();
    for (a, b) in g.edges() {
        for c in nb[a].intersection(&nb[b]) {
            if c > b {
                triangles.push(Edge::from_sorted(vec![a.clone(), b.clone(), c.clone()]));
            }
        }
    }
    Hypergraph::new(3, g.vertices().iter().cloned(), triangles).expect("triangles are distinct triples")
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn brute_triangles(g: &SimpleGraph) -> usize {
        g.vertices()
            .iter()
            .combinations(3)
            .filter(|t| g.has_edge(t[0], t[1]) && g.has_edge(t[0], t[2]) && g.has_edge(t[1], t[2]))
            .count()
    }

    #[test]
    fn complete_graph_triangles() {
        let t4 = triangle_hypergraph(&SimpleGraph::complete(4));
        assert_eq!(t4.edge_count(), 4);
        let t5 = triangle_hypergraph(&SimpleGraph::complete(5));
        assert_eq!(t5.edge_count(), brute_triangles(&SimpleGraph::complete(5)));
        assert_eq!(t5.edge_count(), 10);
    }

    #[test]
    fn cycle_is_triangle_free() {
        let t = triangle_hypergraph(&SimpleGraph::cycle(5).unwrap());
        assert!(t.is_empty());
        assert_eq!(t.vertices().len(), 5);
    }

    #[test]
    fn structure_errors() {
        let v = |s: &str| VertexId::from(s);
        assert!(SimpleGraph::new(vec![], vec![(v("1"), v("1"))], None).is_err());
        assert!(SimpleGraph::new(vec![], vec![(v("1"), v("2")), (v("2"), v("1"))], None).is_err());
        let left: BTreeSet<VertexId> = [v("1"), v("2")].into();
        let right: BTreeSet<VertexId> = [v("3")].into();
        assert!(SimpleGraph::bipartite(left.clone(), right.clone(), vec![(v("1"), v("2"))]).is_err());
        assert!(SimpleGraph::bipartite(left, right, vec![(v("1"), v("3"))]).is_ok());
        assert!(SimpleGraph::cycle(2).is_err());
    }
}
