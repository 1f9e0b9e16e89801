use std::collections::BTreeSet;
use std::fmt;

use super::{join_edges, require_nu_one};
use crate::error::{Error, Result};
use crate::hypercore::{is_m_cover, Edge, Hypergraph, VertexId};
use crate::intsolve::CoverCert;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kk1Trace {
    /// Every other edge is `e - u + v(f)` for one common `u`.
    CommonVertex { e: Edge, u: VertexId },
    /// The union has `k + 1` vertices; complements of the cover sets pair
    /// them up.
    Union { union: Edge, complements: Vec<Edge> },
}

impl fmt::Display for Kk1Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "(k-1)-cover for nu^(k-1) = 1")?;
        match self {
            Kk1Trace::CommonVertex { e, u } => writeln!(f, "  e = {{{e}}}, common removed vertex u = {u}"),
            Kk1Trace::Union { union, complements } => {
                writeln!(f, "  union = {{{union}}}")?;
                writeln!(f, "  complement pairs: {}", join_edges(complements))
            }
        }
    }
}

/// `(k-1)`-cover for a k-uniform `H` with `nu^(k-1)(H) = 1`.
///
/// Every edge `f != e` is `e - u(f) + v(f)`. If all `u(f)` agree the single
/// set `e \ {u}` covers `H`. Otherwise the union of `H` has `k + 1`
/// vertices and the `(k-1)`-sets whose complements are consecutive pairs of
/// the union (the last pair wrapping to the first vertex when `k + 1` is
/// odd) form a cover of size `ceil((k+1)/2)`.
pub fn kk1_cover(h: &Hypergraph, limits: &Limits) -> Result<(CoverCert, Kk1Trace)> {
    let k = h.uniformity();
    if k < 2 {
        return Err(Error::OrderOutOfRange { m: 0, k });
    }
    require_nu_one(h, k - 1, limits)?;
    let e = h.edges()[0].clone();
    let removed: BTreeSet<VertexId> = h.edges()[1..]
        .iter()
        .map(|f| {
            let u = e.difference(f);
            match u.vertices() {
                [v] => Ok(v.clone()),
                _ => Err(Error::InternalContradiction(format!("{{{f}}} does not meet {{{e}}} in k-1 vertices"))),
            }
        })
        .collect::<Result<_>>()?;
    let (cover, trace) = if removed.len() <= 1 {
        let u = removed
            .into_iter()
            .next()
            .unwrap_or_else(|| e.vertices().last().expect("k >= 2").clone());
        let set = e.difference(&Edge::new([u.clone()])?);
        (vec![set], Kk1Trace::CommonVertex { e, u })
    } else {
        let union = Edge::new(h.covered_vertices())?;
        if union.len() != k + 1 {
            return Err(Error::InternalContradiction(format!(
                "union of H has {} vertices, expected {}",
                union.len(),
                k + 1
            )));
        }
        let verts = union.vertices();
        let complements = (0..verts.len().div_ceil(2))
            .map(|i| Edge::new([verts[2 * i].clone(), verts[(2 * i + 1) % verts.len()].clone()]))
            .collect::<Result<Vec<_>>>()?;
        let cover = complements.iter().map(|c| union.difference(c)).collect();
        (cover, Kk1Trace::Union { union, complements })
    };
    let cert = CoverCert::new(k - 1, cover);
    if !is_m_cover(h, &cert.msets, k - 1)? {
        return Err(Error::InternalContradiction(format!("constructed sets are not a cover\n{trace}")));
    }
    let bound = (k + 1).div_ceil(2);
    if cert.size() > bound {
        return Err(Error::BoundViolated(format!("cover of size {} > {bound}\n{trace}", cert.size())));
    }
    Ok((cert, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_complete_subsets;

    #[test]
    fn complete_k_plus_one() {
        for k in 3..=5 {
            let h = gen_complete_subsets(k + 1, k, &[]).unwrap();
            let (c, tr) = kk1_cover(&h, &Limits::default()).unwrap();
            assert_eq!(c.size(), (k + 1).div_ceil(2));
            assert!(matches!(tr, Kk1Trace::Union { .. }));
        }
    }

    #[test]
    fn shifted_edge() {
        let h = Hypergraph::parse_edges(&["1 2 3 4", "1 2 3 5"]).unwrap();
        let (c, _) = kk1_cover(&h, &Limits::default()).unwrap();
        assert_eq!(c.size(), 1);
        assert_eq!(c.msets[0], Edge::parse("1 2 3").unwrap());
    }

    #[test]
    fn single_edge() {
        let h = Hypergraph::parse_edges(&["1 2 3"]).unwrap();
        let (c, _) = kk1_cover(&h, &Limits::default()).unwrap();
        assert_eq!(c.size(), 1);
        assert!(c.validate(&h).unwrap());
    }
}
