use std::fmt;

use itertools::Itertools;

use super::{binomial, join_edges, pairs_of, require_nu_one};
use crate::error::{Error, Result};
use crate::hypercore::{is_m_cover, Edge, Hypergraph, VertexId};
use crate::intsolve::CoverCert;
use crate::limits::Limits;

/// How [`two_edge_cover`] built its cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEdgeTrace {
    pub e: Edge,
    pub f: Edge,
    /// Largest intersection of two distinct edges.
    pub r: usize,
    pub t: usize,
    pub a_e: Edge,
    pub a_f: Edge,
    pub b_e: Edge,
    pub b_f: Edge,
    /// Pairs removed as redundant after the construction.
    pub pruned: Vec<Edge>,
    pub bound: usize,
}

impl fmt::Display for TwoEdgeTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "two-edge cover")?;
        writeln!(f, "  e = {{{}}}, f = {{{}}}", self.e, self.f)?;
        writeln!(f, "  r = {}, t = {}", self.r, self.t)?;
        writeln!(f, "  A_e = {{{}}}, B_e = {{{}}}", self.a_e, self.b_e)?;
        writeln!(f, "  A_f = {{{}}}, B_f = {{{}}}", self.a_f, self.b_f)?;
        if !self.pruned.is_empty() {
            writeln!(f, "  pruned: {}", join_edges(&self.pruned))?;
        }
        writeln!(f, "  bound C(k,2) - C(t,2) = {}", self.bound)
    }
}

/// Splits `e` and `f` into halves with `|A_e ∩ A_f|` as large as possible
/// and `B_e ∩ B_f = ∅`. Returns `(A_e, A_f, overlap)`.
fn halves(e: &Edge, f: &Edge, h: usize) -> (Vec<VertexId>, Vec<VertexId>, usize) {
    let common = e.intersection(f);
    let a_e: Vec<VertexId> = common.iter().chain(e.difference(f).iter()).take(h).cloned().collect();
    let (kept, spill): (Vec<&VertexId>, Vec<&VertexId>) = common.iter().partition(|v| a_e.contains(v));
    let a_f: Vec<VertexId> = spill
        .into_iter()
        .chain(kept)
        .chain(f.difference(e).iter())
        .take(h)
        .cloned()
        .collect();
    let overlap = a_f.iter().filter(|v| a_e.contains(v)).count();
    (a_e, a_f, overlap)
}

/// A 2-cover of size at most `C(k,2) - C(t,2)` for a k-uniform `H` with
/// `nu^(2)(H) = 1`, where `t = min(r, ceil(k/2))` and `r` is the largest
/// intersection of two distinct edges.
///
/// With `h = ceil(k/2)`, `A_e` and `A_f` are `h`-subsets of `e` and `f`
/// sharing as many common vertices as possible, and the cover is
/// `C(A_e,2) ∪ C(A_f,2) ∪ (B_e × B_f)`. Common vertices that do not fit in
/// `A_e` are placed in `A_f`, so `B_e` and `B_f` are disjoint. Among pairs of
/// edges meeting in at least `t` vertices the one allowing the largest
/// overlap is used; if the bound still fails, redundant pairs are dropped
/// in canonical order before checking again. A single edge gets one pair.
pub fn two_edge_cover(h: &Hypergraph, limits: &Limits) -> Result<(CoverCert, TwoEdgeTrace)> {
    let k = h.uniformity();
    if k < 2 {
        return Err(Error::OrderOutOfRange { m: 2, k });
    }
    require_nu_one(h, 2, limits)?;
    let half = k.div_ceil(2);
    let edges = h.edges();
    if edges.len() == 1 {
        let e = edges[0].clone();
        let pair = pairs_of(&e).swap_remove(0);
        let trace = TwoEdgeTrace {
            f: e.clone(),
            r: k,
            t: half,
            a_e: e.clone(),
            a_f: e.clone(),
            b_e: Edge::from_sorted(Vec::new()),
            b_f: Edge::from_sorted(Vec::new()),
            pruned: Vec::new(),
            bound: binomial(k, 2) - binomial(half, 2),
            e,
        };
        return Ok((CoverCert::new(2, vec![pair]), trace));
    }
    let r = edges
        .iter()
        .tuple_combinations()
        .map(|(e, f)| e.intersection_len(f))
        .max()
        .expect("at least two edges");
    let t = r.min(half);
    let bound = binomial(k, 2) - binomial(t, 2);
    let (e, f, (a_e, a_f, _)) = edges
        .iter()
        .tuple_combinations()
        .filter(|(e, f)| e.intersection_len(f) >= t)
        .map(|(e, f)| (e, f, halves(e, f, half)))
        .max_by_key(|(_, _, (_, _, overlap))| *overlap)
        .expect("r is attained");
    let a_e = Edge::new(a_e)?;
    let a_f = Edge::new(a_f)?;
    let b_e = e.difference(&a_e);
    let b_f = f.difference(&a_f);
    let mut cover: Vec<Edge> = pairs_of(&a_e).into_iter().chain(pairs_of(&a_f)).collect();
    for x in b_e.iter() {
        for y in b_f.iter() {
            cover.push(Edge::new([x.clone(), y.clone()])?);
        }
    }
    cover.sort();
    cover.dedup();
    if !is_m_cover(h, &cover, 2)? {
        return Err(Error::InternalContradiction(format!(
            "halves of {{{e}}} and {{{f}}} do not give a 2-cover"
        )));
    }
    let mut pruned = Vec::new();
    if cover.len() > bound {
        let mut i = 0;
        while i < cover.len() {
            let p = cover.remove(i);
            if is_m_cover(h, &cover, 2)? {
                pruned.push(p);
            } else {
                cover.insert(i, p);
                i += 1;
            }
        }
    }
    let trace = TwoEdgeTrace {
        e: e.clone(),
        f: f.clone(),
        r,
        t,
        a_e,
        a_f,
        b_e,
        b_f,
        pruned,
        bound,
    };
    if cover.len() > bound {
        return Err(Error::BoundViolated(format!(
            "2-cover of size {} exceeds C({k},2) - C({t},2) = {bound}\n{trace}",
            cover.len()
        )));
    }
    Ok((CoverCert::new(2, cover), trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_g42_witness;

    #[test]
    fn g42_within_five() {
        let h = gen_g42_witness();
        let (c, tr) = two_edge_cover(&h, &Limits::default()).unwrap();
        assert!(c.validate(&h).unwrap());
        assert!(c.size() <= 5);
        assert_eq!((tr.r, tr.t, tr.bound), (2, 2, 5));
    }

    #[test]
    fn two_edges_sharing_two() {
        let h = Hypergraph::parse_edges(&["1 2 3 4", "1 2 5 6"]).unwrap();
        let (c, _) = two_edge_cover(&h, &Limits::default()).unwrap();
        assert!(c.validate(&h).unwrap());
        assert!(c.size() <= 5);
    }

    #[test]
    fn single_edge() {
        let h = Hypergraph::parse_edges(&["1 2 3 4"]).unwrap();
        let (c, _) = two_edge_cover(&h, &Limits::default()).unwrap();
        assert_eq!(c.size(), 1);
        assert!(c.validate(&h).unwrap());
    }

    #[test]
    fn large_intersections_keep_halves_apart() {
        // |e ∩ f| = 3 > ceil(6/2) would put common vertices in both B sets.
        let h = Hypergraph::parse_edges(&["1 2 3 5", "1 2 3 6", "1 3 7 8"]).unwrap();
        let (c, tr) = two_edge_cover(&h, &Limits::default()).unwrap();
        assert!(c.validate(&h).unwrap());
        assert!(c.size() <= tr.bound);
        assert!(tr.b_e.intersection_len(&tr.b_f) == 0);
    }

    #[test]
    fn precondition() {
        let h = Hypergraph::parse_edges(&["1 2 3", "4 5 6"]).unwrap();
        assert!(matches!(
            two_edge_cover(&h, &Limits::default()),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
