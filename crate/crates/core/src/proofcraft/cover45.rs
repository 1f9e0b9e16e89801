use std::fmt;

use super::pairs_of;
use crate::error::{Error, Result};
use crate::hypercore::{derive, is_m_matching, Edge, Hypergraph};
use crate::intsolve::nu_int;
use crate::limits::Limits;
use crate::ratlp::{format_ratio, WeightKind, Weights};
use crate::{rat, Rat, WeightFn};

/// One complementary couple `{p, q(p)}` of a matching edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoupleRecord {
    pub edge: Edge,
    pub p: Edge,
    pub q: Edge,
    /// `|H(p)|` and `|H(q)|`.
    pub h_p: usize,
    pub h_q: usize,
    /// The extra half weight goes here.
    pub r: Edge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cover45Trace {
    pub couples: Vec<CoupleRecord>,
    pub total: Rat,
    pub bound: Rat,
}

impl fmt::Display for Cover45Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fractional 2-cover of total <= 4.5 nu")?;
        for c in &self.couples {
            writeln!(
                f,
                "  m = {{{}}}: p = {{{}}} |H(p)| = {}, q = {{{}}} |H(q)| = {}, r = {{{}}}",
                c.edge, c.p, c.h_p, c.q, c.h_q, c.r
            )?;
        }
        writeln!(f, "  total = {}, bound = {}", format_ratio(&self.total), format_ratio(&self.bound))
    }
}

/// Fractional 2-cover of total at most `4.5 |M|` for a 4-uniform `H` and a
/// maximum 2-matching `M`.
///
/// Every pair inside an edge of `M` gets `1/2`. For each edge `m_i` and
/// each complementary couple `p, q = m_i \ p`, `H(p)` holds the edges
/// meeting `m_i` exactly in `p` and every other `m_j` in fewer than two
/// vertices. Another `1/2` goes to `r(p)`: `q` when `H(p)` is empty, `p`
/// when `H(q)` is empty, and otherwise the pair outside `m_i` shared by all
/// of `H(p) ∪ H(q)`.
pub fn cover45(h: &Hypergraph, matching: &[Edge], limits: &Limits) -> Result<(WeightFn, Cover45Trace)> {
    if h.uniformity() != 4 {
        return Err(Error::Parameter(format!(
            "cover45 needs a 4-uniform hypergraph, got {}-uniform",
            h.uniformity()
        )));
    }
    if !is_m_matching(h, matching, 2)? {
        return Err(Error::PreconditionViolated("M is not a 2-matching".into()));
    }
    let (nu, _, _) = nu_int(h, 2, limits)?;
    if matching.len() != nu {
        return Err(Error::PreconditionViolated(format!(
            "M has size {} but nu^(2) = {nu}",
            matching.len()
        )));
    }
    let half = rat(1, 2);
    let mut w = Weights::empty(WeightKind::Cover, 2);
    let mut couples = Vec::new();
    for (i, m) in matching.iter().enumerate() {
        for p in pairs_of(m) {
            w.add(p, half.clone())?;
        }
        let only = |p: &Edge| -> Vec<&Edge> {
            h.edges()
                .iter()
                .filter(|e| {
                    e.intersection(m) == *p
                        && matching
                            .iter()
                            .enumerate()
                            .all(|(j, mj)| j == i || e.intersection_len(mj) < 2)
                })
                .collect()
        };
        for p in pairs_of(m) {
            let q = m.difference(&p);
            if q < p {
                continue;
            }
            let (hp, hq) = (only(&p), only(&q));
            let r = if hp.is_empty() {
                q.clone()
            } else if hq.is_empty() {
                p.clone()
            } else {
                let outside = hp[0].difference(m);
                if let Some(bad) = hp.iter().chain(&hq).find(|e| !outside.is_subset(e)) {
                    return Err(Error::InternalContradiction(format!(
                        "{{{bad}}} misses {{{outside}}}, so M is not maximum"
                    )));
                }
                outside
            };
            w.add(r.clone(), half.clone())?;
            couples.push(CoupleRecord {
                edge: m.clone(),
                p,
                q,
                h_p: hp.len(),
                h_q: hq.len(),
                r,
            });
        }
    }
    let bound = rat(9, 2) * Rat::from_integer(matching.len().into());
    let trace = Cover45Trace {
        couples,
        total: w.total(),
        bound: bound.clone(),
    };
    if !w.is_fractional_cover(&derive(h, 2)?) {
        return Err(Error::InternalContradiction(format!("weights are not a fractional 2-cover\n{trace}")));
    }
    if trace.total > bound {
        return Err(Error::BoundViolated(trace.to_string()));
    }
    Ok((w, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_g42_witness, gen_random};

    #[test]
    fn single_edge() {
        let h = Hypergraph::parse_edges(&["1 2 3 4"]).unwrap();
        let (w, tr) = cover45(&h, h.edges(), &Limits::default()).unwrap();
        assert_eq!(w.total(), rat(9, 2));
        assert_eq!(tr.couples.len(), 3);
    }

    #[test]
    fn g42_witness() {
        let h = gen_g42_witness();
        let m = vec![Edge::parse("a b c d").unwrap()];
        let (w, _) = cover45(&h, &m, &Limits::default()).unwrap();
        assert!(w.total() <= rat(9, 2));
    }

    #[test]
    fn random_instances() {
        let l = Limits::default();
        for seed in 0..20 {
            let h = gen_random(4, 7, 12, seed).unwrap();
            let (_, cert, _) = nu_int(&h, 2, &l).unwrap();
            let (w, tr) = cover45(&h, &cert.edges, &l).unwrap();
            assert!(w.total() <= tr.bound);
        }
    }

    #[test]
    fn non_maximum_rejected() {
        let h = Hypergraph::parse_edges(&["1 2 3 4", "5 6 7 8"]).unwrap();
        let m = vec![h.edges()[0].clone()];
        assert!(matches!(cover45(&h, &m, &Limits::default()), Err(Error::PreconditionViolated(_))));
    }
}
