use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::plane::plane_order;
use crate::error::{Error, Result};
use crate::hypercore::{derive, DerivedSystem, Edge, Hypergraph, VertexId};
use crate::ratlp::{WeightKind, Weights};
use crate::{Rat, WeightFn};

/// Join `P_1 * ... * P_m` with its (renamed) parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Join {
    pub hypergraph: Hypergraph,
    /// Part `i` with vertex `v` renamed to `"{i}.{v}"`, parts numbered from 1.
    pub parts: Vec<Hypergraph>,
}

fn rename(h: &Hypergraph, i: usize) -> Result<Hypergraph> {
    let tag = |v: &VertexId| VertexId::new(format!("{i}.{v}"));
    Hypergraph::new(
        h.uniformity(),
        h.vertices().iter().map(tag),
        h.edges()
            .iter()
            .map(|e| Edge::new(e.iter().map(tag)))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// All unions `e_1 ∪ ... ∪ e_m` with `e_i` an edge of part `i`. Parts are
/// made disjoint by prefixing every vertex with its part index.
pub fn join(parts: &[Hypergraph]) -> Result<Join> {
    if parts.is_empty() {
        return Err(Error::Parameter("join of no parts".into()));
    }
    if let Some(i) = parts.iter().position(Hypergraph::is_empty) {
        return Err(Error::Parameter(format!("part {} of the join has no edges", i + 1)));
    }
    let parts = parts
        .iter()
        .enumerate()
        .map(|(i, h)| rename(h, i + 1))
        .collect::<Result<Vec<_>>>()?;
    let k = parts.iter().map(Hypergraph::uniformity).sum();
    let vertices: BTreeSet<VertexId> = parts.iter().flat_map(|p| p.vertices().iter().cloned()).collect();
    let edges = parts
        .iter()
        .map(|p| p.edges().iter())
        .multi_cartesian_product()
        .map(|choice| choice.into_iter().fold(Edge::from_sorted(Vec::new()), |acc, e| acc.union(e)))
        .collect::<Vec<_>>();
    let hypergraph = Hypergraph::new(k, vertices, edges)?;
    Ok(Join { hypergraph, parts })
}

/// Constant weight `1/r^m` on every edge of a join of `m` projective planes
/// of common line size `r`, checked to be a fractional m-matching.
pub fn join_fractional_matching(j: &Join) -> Result<WeightFn> {
    let orders = j.parts.iter().map(plane_order).collect::<Option<Vec<_>>>();
    let q = match orders.as_deref() {
        Some([q, rest @ ..]) if rest.iter().all(|o| o == q) => *q,
        _ => {
            return Err(Error::Structure(
                "join parts are not projective planes of one common order".into(),
            ))
        }
    };
    let m = j.parts.len();
    let w = Rat::new(BigInt::one(), BigInt::from(q + 1).pow(m as u32));
    let weights = Weights::new(
        WeightKind::Matching,
        m,
        j.hypergraph.edges().iter().map(|e| (e.clone(), w.clone())),
    )?;
    let d = derive(&j.hypergraph, m)?;
    if !weights.is_fractional_matching(&d) {
        let (set, degree) = heaviest_mset(&d);
        return Err(Error::BoundViolated(format!(
            "{{{set}}} lies in {degree} edges, more than {}; constant weight {w} is not a fractional {m}-matching",
            (q + 1).pow(m as u32)
        )));
    }
    Ok(weights)
}

fn heaviest_mset(d: &DerivedSystem) -> (Edge, usize) {
    let degrees = d.incidence();
    let (i, blocks) = degrees
        .iter()
        .enumerate()
        .max_by_key(|(i, b)| (b.len(), std::cmp::Reverse(*i)))
        .expect("a join has edges");
    (d.ground()[i].clone(), blocks.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_projective_plane;
    use crate::rat;

    fn fano() -> Hypergraph {
        gen_projective_plane(2).unwrap().hypergraph
    }

    #[test]
    fn fano_join_shape() {
        let j = join(&[fano(), fano()]).unwrap();
        assert_eq!(j.hypergraph.edge_count(), 49);
        assert_eq!(j.hypergraph.uniformity(), 6);
        assert_eq!(j.hypergraph.vertices().len(), 14);
        assert!(j.hypergraph.is_m_intersecting(2));
    }

    #[test]
    fn single_edges() {
        let a = Hypergraph::parse_edges(&["1 2"]).unwrap();
        let b = Hypergraph::parse_edges(&["1 2 3"]).unwrap();
        let j = join(&[a, b]).unwrap();
        assert_eq!(j.hypergraph.edge_count(), 1);
        assert_eq!(j.hypergraph.uniformity(), 5);
    }

    #[test]
    fn empty_part_rejected() {
        let a = Hypergraph::parse_edges(&["1 2"]).unwrap();
        let empty = a.filter_edges(|_| false);
        assert!(matches!(join(&[a, empty]), Err(Error::Parameter(_))));
        assert!(matches!(join(&[]), Err(Error::Parameter(_))));
    }

    #[test]
    fn constant_matching_totals() {
        let one = join(&[fano()]).unwrap();
        assert_eq!(join_fractional_matching(&one).unwrap().total(), rat(7, 3));
        let two = join(&[fano(), fano()]).unwrap();
        assert_eq!(join_fractional_matching(&two).unwrap().total(), rat(49, 9));
        let p3 = gen_projective_plane(3).unwrap().hypergraph;
        let j = join(&[p3.clone(), p3]).unwrap();
        assert_eq!(join_fractional_matching(&j).unwrap().total(), rat(169, 16));
    }

    #[test]
    fn three_fano_copies() {
        let j = join(&[fano(), fano(), fano()]).unwrap();
        assert_eq!(j.hypergraph.edge_count(), 343);
        assert_eq!(j.hypergraph.uniformity(), 9);
        // Three collinear points of one copy lie in 1 * 7 * 7 = 49 > 27 edges.
        let err = join_fractional_matching(&j).unwrap_err();
        assert!(matches!(&err, Error::BoundViolated(msg) if msg.contains("49 edges")), "{err}");
        assert_eq!(crate::hypercore::derived_max_degree(&j.hypergraph, 3).unwrap(), 49);
        assert!(j.hypergraph.is_m_intersecting(3));
    }

    #[test]
    fn mixed_orders_rejected() {
        let p3 = gen_projective_plane(3).unwrap().hypergraph;
        let j = join(&[fano(), p3]).unwrap();
        assert!(matches!(join_fractional_matching(&j), Err(Error::Structure(_))));
        let k4 = Hypergraph::parse_edges(&["1 2 3", "1 2 4"]).unwrap();
        let j = join(&[k4.clone(), k4]).unwrap();
        assert!(matches!(join_fractional_matching(&j), Err(Error::Structure(_))));
    }
}
