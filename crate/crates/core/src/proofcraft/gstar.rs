use std::fmt;

use itertools::Itertools;

use super::{pairs_of, require_nu_one};
use crate::error::{Error, Result};
use crate::hypercore::{derive, Edge, Hypergraph};
use crate::limits::Limits;
use crate::ratlp::{format_ratio, WeightKind, Weights};
use crate::{rat, rat_int, Rat, WeightFn};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GstarCase {
    /// Every two edges share at least three vertices: `1/3` on the pairs of `e`.
    WideIntersections { e: Edge },
    /// `e ∩ f = {w1, w2}`.
    TwoEdges { e: Edge, f: Edge },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GstarTrace {
    pub case: GstarCase,
    pub total: Rat,
    /// `k²/4 + k - 2`.
    pub bound: Rat,
}

impl fmt::Display for GstarTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fractional 2-cover for nu^(2) = 1")?;
        match &self.case {
            GstarCase::WideIntersections { e } => {
                writeln!(f, "  all intersections >= 3; weight 1/3 on the pairs of {{{e}}}")?
            }
            GstarCase::TwoEdges { e, f: g } => {
                writeln!(f, "  e = {{{e}}}, f = {{{g}}} meet in {{{}}}", e.intersection(g))?
            }
        }
        writeln!(f, "  total = {}", format_ratio(&self.total))?;
        writeln!(f, "  bound k^2/4 + k - 2 = {}", format_ratio(&self.bound))
    }
}

/// Fractional 2-cover of total at most `k²/4 + k - 2` for a k-uniform `H`
/// with `nu^(2)(H) = 1`.
///
/// If every two edges share three or more vertices, `1/3` goes on each pair
/// of one edge (total `k(k-1)/6`). Otherwise, for the first edges `e, f` in
/// canonical order meeting in exactly `{w1, w2}`, with `v_i ∈ e \ f` and
/// `u_j ∈ f \ e`: `c(w1w2) = 1`, `c(w_i v_j) = 1`, `c(v_i u_j) = 1/4`. A
/// single edge of size 2 gets weight 1 on itself.
pub fn gstar_upper_cover(h: &Hypergraph, limits: &Limits) -> Result<(WeightFn, GstarTrace)> {
    let k = h.uniformity();
    if k < 2 {
        return Err(Error::OrderOutOfRange { m: 2, k });
    }
    require_nu_one(h, 2, limits)?;
    let edges = h.edges();
    let mut w = Weights::empty(WeightKind::Cover, 2);
    let narrow = edges
        .iter()
        .tuple_combinations()
        .find(|(e, f)| e.intersection_len(f) == 2);
    let case = match narrow {
        None => {
            let e = edges[0].clone();
            let share = if k == 2 { rat_int(1) } else { rat(1, 3) };
            for p in pairs_of(&e) {
                w.add(p, share.clone())?;
            }
            GstarCase::WideIntersections { e }
        }
        Some((e, f)) => {
            let ws = e.intersection(f);
            let vs = e.difference(f);
            let us = f.difference(e);
            w.add(ws.clone(), rat_int(1))?;
            for a in ws.iter() {
                for v in vs.iter() {
                    w.add(Edge::new([a.clone(), v.clone()])?, rat_int(1))?;
                }
            }
            for v in vs.iter() {
                for u in us.iter() {
                    w.add(Edge::new([v.clone(), u.clone()])?, rat(1, 4))?;
                }
            }
            GstarCase::TwoEdges {
                e: e.clone(),
                f: f.clone(),
            }
        }
    };
    let k = k as i64;
    let bound = rat(k * k, 4) + rat_int(k - 2);
    let trace = GstarTrace {
        case,
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
    use crate::families::gen_g42_witness;

    #[test]
    fn two_edges_case() {
        let h = Hypergraph::parse_edges(&["1 2 3 4", "1 2 5 6"]).unwrap();
        let (w, tr) = gstar_upper_cover(&h, &Limits::default()).unwrap();
        assert_eq!(w.total(), rat(6, 1));
        assert_eq!(tr.bound, rat(6, 1));
    }

    #[test]
    fn wide_case() {
        let h = Hypergraph::parse_edges(&["1 2 3 4", "1 2 3 5", "1 2 4 5"]).unwrap();
        let (w, tr) = gstar_upper_cover(&h, &Limits::default()).unwrap();
        assert_eq!(w.total(), rat(2, 1));
        assert!(matches!(tr.case, GstarCase::WideIntersections { .. }));
    }

    #[test]
    fn g42_feasible() {
        let h = gen_g42_witness();
        let (w, _) = gstar_upper_cover(&h, &Limits::default()).unwrap();
        let d = derive(&h, 2).unwrap();
        assert!(w.is_fractional_cover(&d));
        assert!(w.total() <= rat(6, 1));
    }
}
