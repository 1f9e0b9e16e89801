use std::collections::BTreeSet;

use super::{Edge, Hypergraph};
use crate::error::{Error, Result};

/// The derived system `H^(m)`: ground elements are the m-subsets occurring in
/// some edge, and each edge contributes the block of all its m-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSystem {
    m: usize,
    ground: Vec<Edge>,
    blocks: Vec<Vec<usize>>,
    source: Vec<Edge>,
}

/// Derives `H^(m)` for `1 <= m <= k`.
pub fn derive(h: &Hypergraph, m: usize) -> Result<DerivedSystem> {
    let k = h.uniformity();
    if m == 0 || m > k {
        return Err(Error::OrderOutOfRange { m, k });
    }
    let ground: Vec<Edge> = h
        .edges()
        .iter()
        .flat_map(|e| e.subsets(m))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let blocks = h
        .edges()
        .iter()
        .map(|e| {
            e.subsets(m)
                .map(|s| ground.binary_search(&s).expect("subset is in ground"))
                .collect()
        })
        .collect();
    Ok(DerivedSystem {
        m,
        ground,
        blocks,
        source: h.edges().to_vec(),
    })
}

impl DerivedSystem {
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted m-sets.
    pub fn ground(&self) -> &[Edge] {
        &self.ground
    }

    /// Block `i` lists indices into [`ground`](Self::ground) for edge `i`.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Source edge of each block.
    pub fn source(&self) -> &[Edge] {
        &self.source
    }

    pub fn ground_index(&self, s: &Edge) -> Option<usize> {
        self.ground.binary_search(s).ok()
    }

    /// For each ground element, the blocks containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.ground.len()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &g in block {
                inc[g].push(b);
            }
        }
        inc
    }

    pub fn nonzeros(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Maximum number of blocks through one ground element.
    pub fn max_degree(&self) -> usize {
        self.incidence().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Block-intersection graph: `adj[i]` lists the blocks sharing a ground
    /// element with block `i`.
    pub fn block_adjacency(&self) -> Vec<BTreeSet<usize>> {
        let inc = self.incidence();
        let mut adj = vec![BTreeSet::new(); self.blocks.len()];
        for blocks in &inc {
            for &a in blocks {
                for &b in blocks {
                    if a != b {
                        adj[a].insert(b);
                    }
                }
            }
        }
        adj
    }
}

/// `max` over m-sets of the number of edges containing it (0 for an empty
/// hypergraph).
pub fn derived_max_degree(h: &Hypergraph, m: usize) -> Result<usize> {
    Ok(derive(h, m)?.max_degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(lines: &[&str]) -> Hypergraph {
        Hypergraph::parse_edges(lines).unwrap()
    }

    #[test]
    fn two_triples_pairs() {
        let d = derive(&hg(&["1 2 3", "1 4 5"]), 2).unwrap();
        let ground: Vec<String> = d.ground().iter().map(Edge::key).collect();
        assert_eq!(ground, ["1,2", "1,3", "1,4", "1,5", "2,3", "4,5"]);
        let blocks: Vec<Vec<String>> = d
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&i| d.ground()[i].key()).collect())
            .collect();
        assert_eq!(blocks, vec![vec!["1,2", "1,3", "2,3"], vec!["1,4", "1,5", "4,5"]]);
    }

    #[test]
    fn identity_order() {
        let d = derive(&hg(&["1 2 3"]), 3).unwrap();
        assert_eq!(d.ground().len(), 1);
        assert_eq!(d.blocks(), &[vec![0]]);
    }

    #[test]
    fn order_out_of_range() {
        let h = hg(&["1 2 3"]);
        assert_eq!(derive(&h, 4), Err(Error::OrderOutOfRange { m: 4, k: 3 }));
        assert!(derive(&h, 0).is_err());
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(derived_max_degree(&hg(&["1 2 3", "1 2 4"]), 2).unwrap(), 2);
        for m in 1..=4 {
            assert_eq!(derived_max_degree(&hg(&["1 2 3 4"]), m).unwrap(), 1);
        }
    }
}
