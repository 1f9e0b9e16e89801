use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use super::{join_edges, require_nu_one};
use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, VertexId};
use crate::intsolve::bitset::BitSet;
use crate::intsolve::maximum_independent_set;
use crate::limits::Limits;

/// At least `k + 1` edges whose pairwise intersections all equal `core`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunflowerWitness {
    pub m: usize,
    pub core: Edge,
    pub petals: Vec<Edge>,
}

impl SunflowerWitness {
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        if self.petals.len() < h.uniformity() + 1 {
            return Err(Error::InvalidCertificate(format!(
                "{} petals, need at least {}",
                self.petals.len(),
                h.uniformity() + 1
            )));
        }
        if let Some(e) = self.petals.iter().find(|e| !h.contains_edge(e)) {
            return Err(Error::InvalidCertificateReference(e.to_string()));
        }
        for (e, f) in self.petals.iter().tuple_combinations() {
            if e.intersection(f) != self.core {
                return Err(Error::InvalidCertificate(format!(
                    "{{{e}}} and {{{f}}} do not meet exactly in the core {{{}}}",
                    self.core
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for SunflowerWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sunflower (m = {})", self.m)?;
        writeln!(f, "  core = {{{}}}", self.core)?;
        writeln!(f, "  petals: {}", join_edges(&self.petals))
    }
}

/// Searches for a sunflower with at least `k + 1` petals.
///
/// Candidate cores are the distinct pairwise intersections of edges, tried
/// by decreasing size and then canonical order. For each core, the edges
/// containing it with pairwise disjoint remainders form an independent set,
/// found exactly; the first core reaching `k + 1` is returned with its
/// largest petal set.
pub fn sunflower_find(h: &Hypergraph, m: usize, limits: &Limits) -> Result<Option<SunflowerWitness>> {
    let k = h.uniformity();
    if m == 0 || m > k {
        return Err(Error::OrderOutOfRange { m, k });
    }
    if h.edge_count() > limits.sunflower_edges {
        return Err(Error::SizeLimitExceeded {
            what: "edges for sunflower search",
            actual: h.edge_count(),
            limit: limits.sunflower_edges,
        });
    }
    let mut cores: Vec<Edge> = h
        .edges()
        .iter()
        .tuple_combinations()
        .map(|(e, f)| e.intersection(f))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    cores.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    for core in cores {
        let holders: Vec<&Edge> = h.edges().iter().filter(|e| core.is_subset(e)).collect();
        if holders.len() < k + 1 {
            continue;
        }
        let petals: Vec<Edge> = holders.iter().map(|e| e.difference(&core)).collect();
        let mut conflicts = vec![BitSet::new(holders.len()); holders.len()];
        for i in 0..holders.len() {
            for j in (i + 1)..holders.len() {
                if petals[i].intersection_len(&petals[j]) > 0 {
                    conflicts[i].insert(j);
                    conflicts[j].insert(i);
                }
            }
        }
        let (chosen, _) = maximum_independent_set(&conflicts, limits.search_nodes)?;
        if chosen.len() > k {
            return Ok(Some(SunflowerWitness {
                m,
                core,
                petals: chosen.into_iter().map(|i| holders[i].clone()).collect(),
            }));
        }
    }
    Ok(None)
}

/// Replaces the petals by the single edge `core ∪ T` with `k - |core|`
/// fresh vertices `T` (tokens `t1, t2, ...` not already in use). Requires
/// `nu^(m)(H) = 1` for the witness order `m`.
pub fn sunflower_compress(h: &Hypergraph, w: &SunflowerWitness, limits: &Limits) -> Result<Hypergraph> {
    w.validate(h)?;
    require_nu_one(h, w.m, limits)?;
    if w.core.len() < w.m {
        return Err(Error::InternalContradiction(format!(
            "core {{{}}} is smaller than m = {} although nu^(m) = 1",
            w.core, w.m
        )));
    }
    let k = h.uniformity();
    let fresh: Vec<VertexId> = (1..)
        .map(|i| VertexId::new(format!("t{i}")))
        .filter(|v| !h.vertices().contains(v))
        .take(k - w.core.len())
        .collect();
    let new_edge = w.core.union(&Edge::new(fresh)?);
    let petals: BTreeSet<&Edge> = w.petals.iter().collect();
    let edges = h
        .edges()
        .iter()
        .filter(|e| !petals.contains(e))
        .cloned()
        .chain(std::iter::once(new_edge));
    Hypergraph::from_edges(k, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_and_compresses() {
        let h = Hypergraph::parse_edges(&["1 2 3", "1 2 4", "1 2 5", "1 2 6"]).unwrap();
        let l = Limits::default();
        let w = sunflower_find(&h, 2, &l).unwrap().unwrap();
        assert_eq!(w.core, Edge::parse("1 2").unwrap());
        assert_eq!(w.petals.len(), 4);
        let k = sunflower_compress(&h, &w, &l).unwrap();
        assert_eq!(k.edge_count(), 1);
        assert_eq!(k.edges()[0], Edge::parse("1 2 t1").unwrap());
    }

    #[test]
    fn none_when_too_few() {
        let h = Hypergraph::parse_edges(&["1 2 3", "1 2 4", "1 2 5"]).unwrap();
        assert!(sunflower_find(&h, 2, &Limits::default()).unwrap().is_none());
    }

    #[test]
    fn invalid_witness() {
        let h = Hypergraph::parse_edges(&["1 2 3", "1 2 4", "1 2 5", "1 2 6"]).unwrap();
        let mut w = sunflower_find(&h, 2, &Limits::default()).unwrap().unwrap();
        w.core = Edge::parse("1").unwrap();
        assert!(sunflower_compress(&h, &w, &Limits::default()).is_err());
    }
}
