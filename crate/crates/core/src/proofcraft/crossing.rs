use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypercore::{is_m_cover, Edge, Hypergraph, VertexId};
use crate::intsolve::CoverCert;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingTrace {
    pub a: BTreeSet<VertexId>,
    pub b: BTreeSet<VertexId>,
    pub u_size: usize,
    pub crossing: usize,
    /// Vertices moved by the local search, in order.
    pub moves: Vec<VertexId>,
}

impl fmt::Display for CrossingTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "crossing partition")?;
        writeln!(f, "  A = {{{}}}", self.a.iter().join(" "))?;
        writeln!(f, "  B = {{{}}}", self.b.iter().join(" "))?;
        writeln!(f, "  moves: {}", self.moves.iter().join(" "))?;
        writeln!(f, "  |U| = {}, crossing = {}", self.u_size, self.crossing)
    }
}

/// 2-cover of size at most `|U|/2` from a set `U` of pairs such that every
/// edge of a 4-uniform `H` contains at least five of them.
///
/// Vertices (of `H` and `U`) start in `A` or `B` by the parity of their
/// canonical position; a vertex with more `U`-neighbours on its own side
/// than across moves, scanning in canonical order and restarting after each
/// move. At the resulting local optimum at least half of `U` crosses, and
/// the non-crossing pairs form the cover since an edge holds at most four
/// crossing pairs.
pub fn crossing_partition_cover(h: &Hypergraph, u: &[Edge]) -> Result<(CoverCert, CrossingTrace)> {
    if h.uniformity() != 4 {
        return Err(Error::Parameter("crossing partition needs a 4-uniform hypergraph".into()));
    }
    let u: BTreeSet<Edge> = u.iter().cloned().collect();
    if let Some(p) = u.iter().find(|p| p.len() != 2) {
        return Err(Error::MalformedCover(format!("{{{p}}} is not a pair")));
    }
    for e in h.edges() {
        let inside = u.iter().filter(|p| p.is_subset(e)).count();
        if inside < 5 {
            return Err(Error::PreconditionViolated(format!(
                "edge {{{e}}} contains only {inside} pairs of U"
            )));
        }
    }
    let vertices: Vec<VertexId> = h
        .vertices()
        .iter()
        .chain(u.iter().flat_map(|p| p.iter()))
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut nbrs: BTreeMap<&VertexId, Vec<&VertexId>> = BTreeMap::new();
    for p in &u {
        let [x, y] = p.vertices() else { unreachable!() };
        nbrs.entry(x).or_default().push(y);
        nbrs.entry(y).or_default().push(x);
    }
    let mut side: BTreeMap<&VertexId, bool> = vertices.iter().enumerate().map(|(i, v)| (v, i % 2 == 1)).collect();
    let mut moves = Vec::new();
    'search: loop {
        for v in &vertices {
            let own = side[v];
            let list = nbrs.get(v).map(Vec::as_slice).unwrap_or(&[]);
            let same = list.iter().filter(|w| side[*w] == own).count();
            if 2 * same > list.len() {
                side.insert(v, !own);
                moves.push(v.clone());
                continue 'search;
            }
        }
        break;
    }
    let (b, a): (BTreeSet<VertexId>, BTreeSet<VertexId>) =
        vertices.iter().cloned().partition(|v| side[v]);
    let cover: Vec<Edge> = u
        .iter()
        .filter(|p| side[&p.vertices()[0]] == side[&p.vertices()[1]])
        .cloned()
        .collect();
    let trace = CrossingTrace {
        a,
        b,
        u_size: u.len(),
        crossing: u.len() - cover.len(),
        moves,
    };
    if !is_m_cover(h, &cover, 2)? {
        return Err(Error::InternalContradiction(format!("non-crossing pairs do not cover H\n{trace}")));
    }
    if 2 * cover.len() > u.len() {
        return Err(Error::BoundViolated(format!(
            "cover of size {} > |U|/2\n{trace}",
            cover.len()
        )));
    }
    Ok((CoverCert::new(2, cover), trace))
}
