use std::collections::BTreeSet;

use crate::error::Result;
use crate::hypercore::{SimpleGraph, VertexId};

/// Maximum matching of a bipartite graph with a Kőnig vertex cover of the
/// same size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMatching {
    /// Oriented `(left, right)`.
    pub matching: BTreeSet<(VertexId, VertexId)>,
    pub cover: BTreeSet<VertexId>,
}

/// Augmenting paths in canonical order; the cover comes from alternating
/// reachability out of the unmatched left vertices.
pub fn bip_matching_cover(g: &SimpleGraph) -> Result<BipartiteMatching> {
    let edges = g.oriented_edges()?;
    Ok(pair_matching(edges.iter()))
}

/// Same as [`bip_matching_cover`] for a bare set of `(left, right)` pairs;
/// sides are read off the pairs.
pub fn pair_matching<'a>(pairs: impl IntoIterator<Item = &'a (VertexId, VertexId)>) -> BipartiteMatching {
    let pairs: Vec<&(VertexId, VertexId)> = pairs.into_iter().collect();
    let left: Vec<VertexId> = pairs.iter().map(|p| p.0.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let right: Vec<VertexId> = pairs.iter().map(|p| p.1.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut adj = vec![Vec::new(); left.len()];
    for (a, b) in pairs {
        let i = left.binary_search(a).expect("left");
        let j = right.binary_search(b).expect("right");
        adj[i].push(j);
    }
    for list in adj.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    let (match_left, match_right) = kuhn(&adj, right.len());

    // Kőnig: Z = alternating reach from unmatched left vertices.
    let mut left_seen = vec![false; left.len()];
    let mut right_seen = vec![false; right.len()];
    let mut stack: Vec<usize> = (0..left.len()).filter(|&i| match_left[i].is_none()).collect();
    for &i in &stack {
        left_seen[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if match_left[i] == Some(j) || right_seen[j] {
                continue;
            }
            right_seen[j] = true;
            if let Some(i2) = match_right[j] {
                if !left_seen[i2] {
                    left_seen[i2] = true;
                    stack.push(i2);
                }
            }
        }
    }
    let mut cover = BTreeSet::new();
    for (i, v) in left.iter().enumerate() {
        if !left_seen[i] {
            cover.insert(v.clone());
        }
    }
    for (j, v) in right.iter().enumerate() {
        if right_seen[j] {
            cover.insert(v.clone());
        }
    }
    let matching = match_left
        .iter()
        .enumerate()
        .filter_map(|(i, m)| m.map(|j| (left[i].clone(), right[j].clone())))
        .collect();
    BipartiteMatching { matching, cover }
}

/// Size of a maximum matching in a bipartite adjacency list.
pub(crate) fn matching_size(adj: &[Vec<usize>], right: usize) -> usize {
    kuhn(adj, right).0.iter().filter(|m| m.is_some()).count()
}

fn kuhn(adj: &[Vec<usize>], right: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let mut match_left = vec![None; adj.len()];
    let mut match_right = vec![None; right];
    for u in 0..adj.len() {
        let mut seen = vec![false; right];
        augment(u, adj, &mut seen, &mut match_left, &mut match_right);
    }
    (match_left, match_right)
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    seen: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for &v in &adj[u] {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let free = match match_right[v] {
            None => true,
            Some(w) => augment(w, adj, seen, match_left, match_right),
        };
        if free {
            match_left[u] = Some(v);
            match_right[v] = Some(u);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn covers(g: &SimpleGraph, cover: &BTreeSet<VertexId>) -> bool {
        g.edges().iter().all(|(a, b)| cover.contains(a) || cover.contains(b))
    }

    #[test]
    fn four_cycle() {
        let g = SimpleGraph::complete_bipartite(2, 2);
        let r = bip_matching_cover(&g).unwrap();
        assert_eq!(r.matching.len(), 2);
        assert_eq!(r.cover.len(), 2);
        assert!(covers(&g, &r.cover));
    }

    #[test]
    fn star() {
        let g = SimpleGraph::complete_bipartite(1, 3);
        let r = bip_matching_cover(&g).unwrap();
        assert_eq!((r.matching.len(), r.cover.len()), (1, 1));
        assert!(covers(&g, &r.cover));
    }

    #[test]
    fn needs_bipartition() {
        let g = SimpleGraph::cycle(4).unwrap();
        assert!(matches!(bip_matching_cover(&g), Err(Error::Structure(_))));
    }

    #[test]
    fn empty_graph() {
        let r = pair_matching(std::iter::empty());
        assert!(r.matching.is_empty() && r.cover.is_empty());
    }
}
