use std::collections::BTreeSet;

use super::bipartite::matching_size;
use super::flow::FlowNetwork;
use crate::error::{Error, Result};
use crate::hypercore::{SimpleGraph, VertexId};
use crate::limits::Limits;

/// Maximum p-factor (edge set of maximum degree at most `p`) of a bipartite
/// graph, via max-flow with capacity `p` on every vertex. Edges are oriented
/// `(left, right)`.
pub fn p_factor_max(g: &SimpleGraph, p: usize) -> Result<BTreeSet<(VertexId, VertexId)>> {
    if p == 0 {
        return Err(Error::Parameter("degree bound p must be at least 1".into()));
    }
    let edges = g.oriented_edges()?;
    let (left, right) = g.bipartition().expect("oriented_edges checked it");
    let left: Vec<&VertexId> = left.iter().collect();
    let right: Vec<&VertexId> = right.iter().collect();
    let source = 0;
    let sink = 1 + left.len() + right.len();
    let mut net = FlowNetwork::new(sink + 1);
    for i in 0..left.len() {
        net.add_arc(source, 1 + i, p as i64);
    }
    for j in 0..right.len() {
        net.add_arc(1 + left.len() + j, sink, p as i64);
    }
    let arcs: Vec<usize> = edges
        .iter()
        .map(|(a, b)| {
            let i = left.binary_search(&a).expect("left vertex");
            let j = right.binary_search(&b).expect("right vertex");
            net.add_arc(1 + i, 1 + left.len() + j, 1)
        })
        .collect();
    net.max_flow(source, sink);
    Ok(edges
        .into_iter()
        .zip(arcs)
        .filter(|(_, a)| net.flow(*a) == 1)
        .map(|(e, _)| e)
        .collect())
}

/// `min over Z ⊆ E(G) of |Z| + p * tau(G - Z)` by enumerating every `Z`,
/// with `tau` from Kőnig's theorem. Returns the value and the first
/// minimizing `Z` in subset-mask order.
pub fn min_z_value(g: &SimpleGraph, p: usize, limits: &Limits) -> Result<(usize, BTreeSet<(VertexId, VertexId)>)> {
    let edges = g.oriented_edges()?;
    if edges.len() > limits.brute_force_edges {
        return Err(Error::SizeLimitExceeded {
            what: "edges for subset enumeration",
            actual: edges.len(),
            limit: limits.brute_force_edges,
        });
    }
    let (left, right) = g.bipartition().expect("oriented_edges checked it");
    let left: Vec<&VertexId> = left.iter().collect();
    let right: Vec<&VertexId> = right.iter().collect();
    let idx: Vec<(usize, usize)> = edges
        .iter()
        .map(|(a, b)| {
            (
                left.binary_search(&a).expect("left"),
                right.binary_search(&b).expect("right"),
            )
        })
        .collect();
    let mut best: Option<(usize, u64)> = None;
    for mask in 0u64..(1u64 << edges.len()) {
        let z = mask.count_ones() as usize;
        if let Some((b, _)) = best {
            if z >= b {
                continue;
            }
        }
        let mut adj = vec![Vec::new(); left.len()];
        for (e, &(i, j)) in idx.iter().enumerate() {
            if mask >> e & 1 == 0 {
                adj[i].push(j);
            }
        }
        let value = z + p * matching_size(&adj, right.len());
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, mask));
        }
    }
    let (value, mask) = best.expect("the empty set is always a candidate");
    let witness = edges
        .into_iter()
        .enumerate()
        .filter(|(e, _)| mask >> e & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Ok((value, witness))
}
