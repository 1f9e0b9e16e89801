use super::{Edge, Hypergraph};
use crate::error::{Error, Result};

/// True iff every two distinct edges of `s` share fewer than `m` vertices.
///
/// Every member of `s` must be an edge of `h`.
pub fn is_m_matching(h: &Hypergraph, s: &[Edge], m: usize) -> Result<bool> {
    if let Some(e) = s.iter().find(|e| !h.contains_edge(e)) {
        return Err(Error::InvalidCertificateReference(e.to_string()));
    }
    Ok(s.iter().enumerate().all(|(i, e)| {
        s[i + 1..]
            .iter()
            .all(|f| e == f || e.intersection_len(f) < m)
    }))
}

/// True iff every edge of `h` contains some member of `c`.
///
/// Every member of `c` must have exactly `m` vertices.
pub fn is_m_cover(h: &Hypergraph, c: &[Edge], m: usize) -> Result<bool> {
    if let Some(s) = c.iter().find(|s| s.len() != m) {
        return Err(Error::MalformedCover(format!(
            "member {{{s}}} has size {} instead of {m}",
            s.len()
        )));
    }
    Ok(h.edges().iter().all(|e| c.iter().any(|s| s.is_subset(e))))
}

/// Edges of `h` not containing any member of `c`.
pub fn uncovered_edges<'a>(h: &'a Hypergraph, c: &[Edge]) -> Vec<&'a Edge> {
    h.edges()
        .iter()
        .filter(|e| !c.iter().any(|s| s.is_subset(e)))
        .collect()
}

/// No two edges share more than one vertex.
pub fn is_linear(h: &Hypergraph) -> bool {
    let edges = h.edges();
    edges
        .iter()
        .enumerate()
        .all(|(i, e)| edges[i + 1..].iter().all(|f| e.intersection_len(f) <= 1))
}
