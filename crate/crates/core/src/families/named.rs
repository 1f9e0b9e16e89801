use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, PartiteStructure, VertexId};

/// All triples of `[n]` through vertex 1, for even `n >= 4`.
pub fn gen_star(n: usize) -> Result<Hypergraph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Parameter(format!("star needs an even n >= 4, got {n}")));
    }
    let edges = (2..=n)
        .tuple_combinations()
        .map(|(a, b)| Edge::new([1, a, b].map(VertexId::from)))
        .collect::<Result<Vec<_>>>()?;
    Hypergraph::new(3, (1..=n).map(VertexId::from), edges)
}

/// All k-subsets of `[n]` except the listed ones.
pub fn gen_complete_subsets(n: usize, k: usize, removed: &[Edge]) -> Result<Hypergraph> {
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let ground: BTreeSet<VertexId> = (1..=n).map(VertexId::from).collect();
    for e in removed {
        if e.len() != k || !e.iter().all(|v| ground.contains(v)) {
            return Err(Error::Parameter(format!("removed set {{{e}}} is not a {k}-subset of [{n}]")));
        }
    }
    let edges = (1..=n)
        .combinations(k)
        .map(|c| Edge::new(c.into_iter().map(VertexId::from)))
        .filter_ok(|e| !removed.contains(e))
        .collect::<Result<Vec<_>>>()?;
    Hypergraph::new(k, ground, edges)
}

/// Seven 4-edges on `a..g`, pairwise meeting in exactly two vertices.
pub fn gen_g42_witness() -> Hypergraph {
    Hypergraph::parse_edges(&[
        "a b c d", "a b e f", "c d e f", "a c e g", "b d e g", "a d f g", "b c f g",
    ])
    .expect("fixed edge list")
}

/// Tripartite hypergraph whose derived pair system is a 7-cycle.
pub fn gen_tripartite_7cycle() -> (Hypergraph, PartiteStructure) {
    let h = Hypergraph::parse_edges(&[
        "a1 b1 c1", "a1 b1 c2", "a1 b2 c2", "a2 b2 c2", "a2 b2 c1", "a2 b3 c1", "a1 b3 c1",
    ])
    .expect("fixed edge list");
    let class = |name: &str, toks: &[&str]| (name.to_string(), toks.iter().map(|t| VertexId::from(*t)).collect());
    let p = PartiteStructure::new(vec![
        class("A", &["a1", "a2"]),
        class("B", &["b1", "b2", "b3"]),
        class("C", &["c1", "c2"]),
    ])
    .expect("disjoint classes");
    (h, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_counts() {
        assert_eq!(gen_star(4).unwrap().edge_count(), 3);
        assert_eq!(gen_star(6).unwrap().edge_count(), 10);
        assert_eq!(gen_star(8).unwrap().edge_count(), 21);
        assert!(gen_star(5).is_err());
        assert!(gen_star(2).is_err());
        let s = gen_star(6).unwrap();
        assert!(s.edges().iter().all(|e| e.contains(&VertexId::from(1))));
    }

    #[test]
    fn complete_subsets() {
        let h = gen_complete_subsets(5, 3, &[Edge::parse("1 2 3").unwrap()]).unwrap();
        assert_eq!(h.edge_count(), 9);
        assert_eq!(h.vertices().len(), 5);
        assert_eq!(gen_complete_subsets(5, 4, &[]).unwrap().edge_count(), 5);
        assert!(gen_complete_subsets(5, 3, &[Edge::parse("1 2").unwrap()]).is_err());
        assert!(gen_complete_subsets(5, 3, &[Edge::parse("1 2 9").unwrap()]).is_err());
        assert!(gen_complete_subsets(3, 4, &[]).is_err());
    }

    #[test]
    fn g42_pairwise_two() {
        let h = gen_g42_witness();
        assert_eq!(h.edge_count(), 7);
        for (e, f) in h.edges().iter().tuple_combinations() {
            assert_eq!(e.intersection_len(f), 2);
        }
    }

    #[test]
    fn seven_cycle_is_tripartite() {
        let (h, p) = gen_tripartite_7cycle();
        p.validate(&h).unwrap();
        assert_eq!(h.edge_count(), 7);
    }
}
