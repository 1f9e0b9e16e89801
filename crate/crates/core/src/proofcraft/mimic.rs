use std::fmt;

use super::join_edges;
use crate::error::{Error, Result};
use crate::hypercore::{derive, Edge, Hypergraph, PartiteStructure};
use crate::intsolve::nu_int;
use crate::limits::Limits;
use crate::ratlp::{format_ratio, WeightKind, Weights};
use crate::{rat, rat_int, Rat, WeightFn};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MimicChoice {
    /// Half weights on `(k-1)`-subsets of `M`, with `p_i` at 1.
    G1,
    /// `p_i` and every `(k-1)`-subset of an edge of `M_2` at 1.
    G2,
}

/// Mimicking structure of a maximum `(k-1)`-matching `M`.
#[derive(Debug, Clone, PartialEq)]
pub struct MimicAnalysis {
    pub k: usize,
    /// `M_1` (edges with a mimicking edge) followed by `M_2`.
    pub matching: Vec<Edge>,
    pub t: usize,
    /// `F_i` for each edge of `M_1`.
    pub mimickers: Vec<Vec<Edge>>,
    /// `p_i = ∩F_i ∩ m_i`.
    pub cores: Vec<Edge>,
    pub g1_total: Rat,
    pub g2_total: Rat,
    pub choice: MimicChoice,
    /// `k² n / (2k - 1)`.
    pub bound: Rat,
}

impl MimicAnalysis {
    pub fn n(&self) -> usize {
        self.matching.len()
    }
}

impl fmt::Display for MimicAnalysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mimic analysis (k = {}, n = {}, t = {})", self.k, self.n(), self.t)?;
        for (i, m) in self.matching.iter().enumerate() {
            if i < self.t {
                writeln!(
                    f,
                    "  M1 {{{m}}}: mimickers {} ; p = {{{}}}",
                    join_edges(&self.mimickers[i]),
                    self.cores[i]
                )?;
            } else {
                writeln!(f, "  M2 {{{m}}}")?;
            }
        }
        writeln!(f, "  g1 total = {}", format_ratio(&self.g1_total))?;
        writeln!(f, "  g2 total = {}", format_ratio(&self.g2_total))?;
        writeln!(f, "  chosen {:?}, bound k^2 n/(2k-1) = {}", self.choice, format_ratio(&self.bound))
    }
}

/// Fractional `(k-1)`-cover of a k-partite `H` with total at most
/// `k² nu^(k-1) / (2k - 1)`.
///
/// An edge `e ∉ M` mimics `m ∈ M` when it meets `m` in `k-1` vertices and
/// every other edge of `M` in fewer. For each `m_i` with mimickers `F_i`,
/// `p_i = ∩F_i ∩ m_i` must have `k-1` vertices; a smaller intersection is
/// reported as [`Error::AssertionFailure`]. Both `g1` and `g2` are built and
/// checked for feasibility, and the smaller is returned (`g1` on ties).
pub fn mimic_cover(
    h: &Hypergraph,
    partite: &PartiteStructure,
    limits: &Limits,
) -> Result<(WeightFn, MimicAnalysis)> {
    partite.validate(h)?;
    let k = h.uniformity();
    if k < 2 {
        return Err(Error::OrderOutOfRange { m: 0, k });
    }
    let (_, cert, _) = nu_int(h, k - 1, limits)?;
    let m_edges = cert.edges;
    let mimics = |e: &Edge, i: usize| {
        m_edges[i].intersection_len(e) == k - 1
            && m_edges
                .iter()
                .enumerate()
                .all(|(j, mj)| j == i || mj.intersection_len(e) < k - 1)
    };
    let outside: Vec<&Edge> = h.edges().iter().filter(|e| !m_edges.contains(e)).collect();
    let all_mimickers: Vec<Vec<Edge>> = (0..m_edges.len())
        .map(|i| outside.iter().filter(|e| mimics(e, i)).map(|e| (*e).clone()).collect())
        .collect();
    let (first, second): (Vec<usize>, Vec<usize>) = (0..m_edges.len()).partition(|&i| !all_mimickers[i].is_empty());
    let t = first.len();
    let matching: Vec<Edge> = first.iter().chain(&second).map(|&i| m_edges[i].clone()).collect();
    let mimickers: Vec<Vec<Edge>> = first.iter().map(|&i| all_mimickers[i].clone()).collect();
    let mut cores = Vec::with_capacity(t);
    for (i, fam) in mimickers.iter().enumerate() {
        let p = fam.iter().fold(matching[i].clone(), |acc, e| acc.intersection(e));
        if p.len() != k - 1 {
            return Err(Error::AssertionFailure(format!(
                "mimickers of {{{}}} share only {{{p}}} with it",
                matching[i]
            )));
        }
        cores.push(p);
    }
    let mut g1 = Weights::empty(WeightKind::Cover, k - 1);
    for (i, m) in matching.iter().enumerate() {
        for s in m.subsets(k - 1) {
            let w = if i < t && s == cores[i] { rat_int(1) } else { rat(1, 2) };
            g1.add(s, w)?;
        }
    }
    let mut g2 = Weights::empty(WeightKind::Cover, k - 1);
    for p in &cores {
        g2.add(p.clone(), rat_int(1))?;
    }
    for m in &matching[t..] {
        for s in m.subsets(k - 1) {
            g2.add(s, rat_int(1))?;
        }
    }
    let n = matching.len() as i64;
    let ki = k as i64;
    let bound = rat(ki * ki * n, 2 * ki - 1);
    let (g1_total, g2_total) = (g1.total(), g2.total());
    let choice = if g1_total <= g2_total { MimicChoice::G1 } else { MimicChoice::G2 };
    let analysis = MimicAnalysis {
        k,
        matching,
        t,
        mimickers,
        cores,
        g1_total,
        g2_total,
        choice,
        bound: bound.clone(),
    };
    let d = derive(h, k - 1)?;
    for (name, g) in [("g1", &g1), ("g2", &g2)] {
        if !g.is_fractional_cover(&d) {
            return Err(Error::InternalContradiction(format!("{name} is not a fractional cover\n{analysis}")));
        }
    }
    let chosen = match choice {
        MimicChoice::G1 => g1,
        MimicChoice::G2 => g2,
    };
    if chosen.total() > bound {
        return Err(Error::BoundViolated(analysis.to_string()));
    }
    Ok((chosen, analysis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_random_partite, gen_tripartite_7cycle};
    use crate::ratlp::tau_star;

    #[test]
    fn seven_cycle() {
        let (h, p) = gen_tripartite_7cycle();
        let l = Limits::default();
        let (w, a) = mimic_cover(&h, &p, &l).unwrap();
        assert_eq!(a.n(), 3);
        assert!(w.total() <= rat(27, 5));
        assert!(tau_star(&h, 2, &l).unwrap().value <= w.total());
    }

    #[test]
    fn no_mimickers() {
        let h = Hypergraph::parse_edges(&["a1 b1 c1", "a2 b2 c2"]).unwrap();
        let (_, p) = gen_random_partite(&[2, 2, 2], 1, 0).unwrap();
        let (w, a) = mimic_cover(&h, &p, &Limits::default()).unwrap();
        assert_eq!(a.t, 0);
        assert_eq!(a.g2_total, rat_int(6));
        assert_eq!(w.total(), rat_int(3));
    }

    #[test]
    fn random_tripartite() {
        let l = Limits::default();
        for seed in 0..20 {
            let (h, p) = gen_random_partite(&[3, 3, 3], 10, seed).unwrap();
            let (w, a) = mimic_cover(&h, &p, &l).unwrap();
            assert!(w.total() <= rat(9, 5) * Rat::from_integer((a.n() as i64).into()));
        }
    }
}
