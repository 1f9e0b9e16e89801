use std::fmt;

use super::{join_edges, pairs_of, require_nu_one};
use crate::error::{Error, Result};
use crate::hypercore::{is_m_cover, Edge, Hypergraph};
use crate::intsolve::CoverCert;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum G42Case {
    /// Two dispensable pairs of `e` are dropped from `C(e,2)`.
    Dispensable { dropped: [Edge; 2] },
    /// Complementary indispensable couples `a, a'` and `b, b'` with
    /// witnesses `f, f', g, g'`; `x = f ∩ f'` and `y = g ∩ g'` replace them.
    Witnesses {
        couples: [[Edge; 2]; 2],
        witnesses: [Edge; 4],
        x: Edge,
        y: Edge,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct G42Trace {
    pub e: Edge,
    pub indispensable: Vec<Edge>,
    pub case: G42Case,
}

impl fmt::Display for G42Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "g(4,2) cover")?;
        writeln!(f, "  e = {{{}}}", self.e)?;
        writeln!(f, "  indispensable pairs: {}", join_edges(&self.indispensable))?;
        match &self.case {
            G42Case::Dispensable { dropped } => writeln!(f, "  dropped dispensable pairs: {}", join_edges(dropped)),
            G42Case::Witnesses {
                couples,
                witnesses,
                x,
                y,
            } => {
                writeln!(
                    f,
                    "  couples: {} | {}",
                    join_edges(&couples[0]),
                    join_edges(&couples[1])
                )?;
                writeln!(f, "  witnesses f f' g g': {}", join_edges(witnesses))?;
                writeln!(f, "  x = {{{x}}}, y = {{{y}}}")
            }
        }
    }
}

/// 2-cover of size at most 4 for a 4-uniform `H` with `nu^(2)(H) = 1`.
///
/// A pair `a ⊂ e` (for the first edge `e`) is indispensable when some edge
/// meets `e` in exactly `a`. With two dispensable pairs the rest of `C(e,2)`
/// is a cover. Otherwise two of the three complementary couples of `C(e,2)`
/// are fully indispensable; their first witnesses in canonical order give
/// the replacement pairs `x` and `y`.
pub fn g42_cover(h: &Hypergraph, limits: &Limits) -> Result<(CoverCert, G42Trace)> {
    if h.uniformity() != 4 {
        return Err(Error::Parameter(format!(
            "g42_cover needs a 4-uniform hypergraph, got {}-uniform",
            h.uniformity()
        )));
    }
    require_nu_one(h, 2, limits)?;
    let e = h.edges()[0].clone();
    let witness = |a: &Edge| h.edges().iter().find(|f| f.intersection(&e) == *a).cloned();
    let pairs = pairs_of(&e);
    let (indispensable, dispensable): (Vec<Edge>, Vec<Edge>) = pairs.iter().cloned().partition(|a| witness(a).is_some());
    let (cover, case) = if dispensable.len() >= 2 {
        let dropped = [dispensable[0].clone(), dispensable[1].clone()];
        let cover = pairs.iter().filter(|p| !dropped.contains(p)).cloned().collect();
        (cover, G42Case::Dispensable { dropped })
    } else {
        let couples: Vec<[Edge; 2]> = pairs
            .iter()
            .map(|a| [a.clone(), e.difference(a)])
            .filter(|[a, b]| a < b && indispensable.contains(a) && indispensable.contains(b))
            .take(2)
            .collect();
        let [c1, c2] = <[[Edge; 2]; 2]>::try_from(couples).map_err(|_| {
            Error::InternalContradiction("fewer than two indispensable complementary couples".into())
        })?;
        let wit = |a: &Edge| witness(a).expect("indispensable");
        let witnesses = [wit(&c1[0]), wit(&c1[1]), wit(&c2[0]), wit(&c2[1])];
        let x = witnesses[0].intersection(&witnesses[1]);
        let y = witnesses[2].intersection(&witnesses[3]);
        if x.len() != 2 || y.len() != 2 {
            return Err(Error::InternalContradiction(format!(
                "witness intersections {{{x}}} and {{{y}}} are not pairs"
            )));
        }
        let removed = [&c1[0], &c1[1], &c2[0], &c2[1]];
        let mut cover: Vec<Edge> = pairs.iter().filter(|p| !removed.contains(p)).cloned().collect();
        cover.push(x.clone());
        cover.push(y.clone());
        (
            cover,
            G42Case::Witnesses {
                couples: [c1, c2],
                witnesses,
                x,
                y,
            },
        )
    };
    let trace = G42Trace {
        e,
        indispensable,
        case,
    };
    let cert = CoverCert::new(2, cover);
    if !is_m_cover(h, &cert.msets, 2)? {
        return Err(Error::InternalContradiction(format!("constructed pairs are not a 2-cover\n{trace}")));
    }
    if cert.size() > 4 {
        return Err(Error::BoundViolated(format!("cover of size {} > 4\n{trace}", cert.size())));
    }
    Ok((cert, trace))
}
