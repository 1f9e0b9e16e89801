use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::index;
use rand::SeedableRng;
use rand_xorshift::XorShiftRng;

use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, PartiteStructure, SimpleGraph, VertexId};

/// Every random family draws from this generator seeded with `seed_from_u64`.
pub type FamilyRng = XorShiftRng;

pub fn rng(seed: u64) -> FamilyRng {
    XorShiftRng::seed_from_u64(seed)
}

const CANDIDATE_LIMIT: usize = 5_000_000;

fn sample_indices(total: usize, count: usize, seed: u64) -> Result<Vec<usize>> {
    if count > total {
        return Err(Error::Parameter(format!("{count} edges requested but only {total} exist")));
    }
    if total > CANDIDATE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "candidate edges for sampling",
            actual: total,
            limit: CANDIDATE_LIMIT,
        });
    }
    let mut picked = index::sample(&mut rng(seed), total, count).into_vec();
    picked.sort_unstable();
    Ok(picked)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// `count` distinct k-subsets of `[n]`, sampled uniformly without replacement.
pub fn gen_random(k: usize, n: usize, count: usize, seed: u64) -> Result<Hypergraph> {
    if k == 0 || k > n {
        return Err(Error::Parameter(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let picked = sample_indices(binomial(n, k), count, seed)?;
    let combos: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    let edges = picked
        .into_iter()
        .map(|i| Edge::new(combos[i].iter().map(|&v| VertexId::from(v))))
        .collect::<Result<Vec<_>>>()?;
    Hypergraph::new(k, (1..=n).map(VertexId::from), edges)
}

fn class_name(i: usize) -> Result<char> {
    if i >= 26 {
        return Err(Error::Parameter("at most 26 partite classes".into()));
    }
    Ok((b'a' + i as u8) as char)
}

/// Classes named `A, B, ...` with vertices `a1.., b1..`; `count` distinct
/// transversal edges sampled uniformly.
pub fn gen_random_partite(sizes: &[usize], count: usize, seed: u64) -> Result<(Hypergraph, PartiteStructure)> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::Parameter("every partite class needs at least one vertex".into()));
    }
    let classes = sizes
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let c = class_name(i)?;
            Ok((
                c.to_ascii_uppercase().to_string(),
                (1..=s).map(|j| VertexId::new(format!("{c}{j}"))).collect::<BTreeSet<_>>(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let total = sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s)).unwrap_or(usize::MAX);
    let picked = sample_indices(total, count, seed)?;
    let combos: Vec<Vec<&VertexId>> = classes.iter().map(|(_, c)| c.iter()).multi_cartesian_product().collect();
    let edges = picked
        .into_iter()
        .map(|i| Edge::new(combos[i].iter().map(|v| (*v).clone())))
        .collect::<Result<Vec<_>>>()?;
    let vertices: Vec<VertexId> = classes.iter().flat_map(|(_, c)| c.iter().cloned()).collect();
    let h = Hypergraph::new(sizes.len(), vertices, edges)?;
    let p = PartiteStructure::new(classes)?;
    p.validate(&h)?;
    Ok((h, p))
}

/// Bipartite graph with sides `b1..` and `c1..` and `count` distinct
/// crossing edges.
pub fn gen_random_bipartite(left: usize, right: usize, count: usize, seed: u64) -> Result<SimpleGraph> {
    let l: BTreeSet<VertexId> = (1..=left).map(|i| VertexId::new(format!("b{i}"))).collect();
    let r: BTreeSet<VertexId> = (1..=right).map(|i| VertexId::new(format!("c{i}"))).collect();
    let picked = sample_indices(left * right, count, seed)?;
    let ls: Vec<&VertexId> = l.iter().collect();
    let rs: Vec<&VertexId> = r.iter().collect();
    let edges: Vec<(VertexId, VertexId)> = picked
        .into_iter()
        .map(|i| (ls[i / right].clone(), rs[i % right].clone()))
        .collect();
    SimpleGraph::bipartite(l, r, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        assert_eq!(gen_random(3, 7, 10, 1).unwrap(), gen_random(3, 7, 10, 1).unwrap());
        assert_eq!(gen_random(3, 7, 10, 1).unwrap().edge_count(), 10);
        assert_ne!(gen_random(3, 7, 10, 1).unwrap(), gen_random(3, 7, 10, 2).unwrap());
    }

    #[test]
    fn full_sample_is_complete() {
        assert_eq!(gen_random(3, 7, 35, 9).unwrap().edge_count(), 35);
        assert!(matches!(gen_random(3, 7, 36, 9), Err(Error::Parameter(_))));
    }

    #[test]
    fn partite_edges_cross_all_classes() {
        let (h, p) = gen_random_partite(&[2, 3, 2], 7, 3).unwrap();
        assert_eq!(h.edge_count(), 7);
        p.validate(&h).unwrap();
        assert!(gen_random_partite(&[2, 3, 2], 13, 3).is_err());
        assert!(gen_random_partite(&[2, 0], 1, 3).is_err());
    }

    #[test]
    fn bipartite_graphs() {
        let g = gen_random_bipartite(5, 5, 12, 7).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert!(g.oriented_edges().is_ok());
        assert_eq!(g, gen_random_bipartite(5, 5, 12, 7).unwrap());
    }
}
