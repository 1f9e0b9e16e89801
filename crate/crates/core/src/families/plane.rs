use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph, VertexId};

/// Desarguesian projective plane `PG(2, q)` for a prime `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePlane {
    pub order: usize,
    pub hypergraph: Hypergraph,
}

impl ProjectivePlane {
    /// Line size `r = q + 1`.
    pub fn uniformity(&self) -> usize {
        self.order + 1
    }
}

pub fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Nonzero vectors of `F_q^3` whose first nonzero coordinate is 1.
fn normalized_vectors(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            out.push([1, a, b]);
        }
    }
    for b in 0..q {
        out.push([0, 1, b]);
    }
    out.push([0, 0, 1]);
    out
}

/// Points are the one-dimensional subspaces of `F_q^3`, labelled `1..=q²+q+1`
/// in the order of their normalized representatives; lines are the
/// two-dimensional subspaces, found as kernels of the same representatives.
pub fn gen_projective_plane(q: usize) -> Result<ProjectivePlane> {
    if !is_prime(q) {
        return Err(Error::Parameter(format!("plane order {q} is not prime")));
    }
    let vectors = normalized_vectors(q);
    let lines = vectors.iter().map(|l| {
        Edge::new(
            vectors
                .iter()
                .enumerate()
                .filter(|(_, p)| (0..3).map(|i| p[i] * l[i]).sum::<usize>() % q == 0)
                .map(|(i, _)| VertexId::from(i + 1)),
        )
    });
    let hypergraph = Hypergraph::from_edges(q + 1, lines.collect::<Result<Vec<_>>>()?)?;
    if plane_order(&hypergraph) != Some(q) {
        return Err(Error::InternalContradiction(format!(
            "construction over F_{q} failed the projective plane axioms"
        )));
    }
    Ok(ProjectivePlane { order: q, hypergraph })
}

/// Order `q` if `h` is a projective plane: `q²+q+1` points and lines, every
/// line of size `q+1`, two lines meet in exactly one point and two points
/// lie on exactly one line.
pub fn plane_order(h: &Hypergraph) -> Option<usize> {
    let r = h.uniformity();
    if r < 3 {
        return None;
    }
    let q = r - 1;
    let n = q * q + q + 1;
    if h.vertices().len() != n || h.edge_count() != n {
        return None;
    }
    let edges = h.edges();
    for (i, e) in edges.iter().enumerate() {
        if edges[i + 1..].iter().any(|f| e.intersection_len(f) != 1) {
            return None;
        }
    }
    let points: Vec<&VertexId> = h.vertices().iter().collect();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if edges.iter().filter(|e| e.contains(a) && e.contains(b)).count() != 1 {
                return None;
            }
        }
    }
    Some(q)
}

/// Vertex sets of the lines through each point; used by axiom tests.
pub fn pencils(h: &Hypergraph) -> Vec<BTreeSet<usize>> {
    h.vertices()
        .iter()
        .map(|v| {
            h.edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.contains(v))
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_axioms() {
        for q in [2, 3, 5] {
            let p = gen_projective_plane(q).unwrap();
            let n = q * q + q + 1;
            assert_eq!(p.hypergraph.vertices().len(), n);
            assert_eq!(p.hypergraph.edge_count(), n);
            assert_eq!(p.uniformity(), q + 1);
            assert_eq!(plane_order(&p.hypergraph), Some(q));
            assert!(pencils(&p.hypergraph).iter().all(|s| s.len() == q + 1));
        }
    }

    #[test]
    fn rejects_non_prime() {
        for q in [0, 1, 4, 6, 9] {
            assert!(matches!(gen_projective_plane(q), Err(Error::Parameter(_))));
        }
    }

    #[test]
    fn non_planes_detected() {
        let fano = gen_projective_plane(2).unwrap().hypergraph;
        let minus = fano.filter_edges(|e| e != &fano.edges()[0]);
        assert_eq!(plane_order(&minus), None);
        let k4 = Hypergraph::parse_edges(&["1 2 3", "1 2 4", "1 3 4", "2 3 4"]).unwrap();
        assert_eq!(plane_order(&k4), None);
    }
}
