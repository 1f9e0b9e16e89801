//! Exact integral solvers: minimum m-covers and maximum m-matchings, bipartite
//! matching with Kőnig covers, p-factors and the brute-force side of the
//! p-factor min-max identity.

mod bipartite;
pub(crate) mod bitset;
mod cover;
mod flow;
mod packing;
mod pfactor;

use crate::error::Result;
use crate::hypercore::{is_m_cover, is_m_matching, Edge, Hypergraph};

pub use bipartite::{bip_matching_cover, pair_matching, BipartiteMatching};
pub(crate) use bipartite::matching_size;
pub use cover::tau_int;
pub use packing::nu_int;
pub(crate) use packing::maximum_independent_set;
pub use pfactor::{min_z_value, p_factor_max};

/// An integral m-cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCert {
    pub m: usize,
    pub msets: Vec<Edge>,
}

impl CoverCert {
    pub fn new(m: usize, mut msets: Vec<Edge>) -> Self {
        msets.sort();
        msets.dedup();
        CoverCert { m, msets }
    }

    pub fn size(&self) -> usize {
        self.msets.len()
    }

    /// Checks the certificate with [`is_m_cover`], independently of how it was found.
    pub fn validate(&self, h: &Hypergraph) -> Result<bool> {
        is_m_cover(h, &self.msets, self.m)
    }

    /// Weight-file lines with integral values.
    pub fn to_text(&self) -> String {
        self.msets.iter().map(|s| format!("{} 1/1\n", s.key())).collect()
    }
}

/// An integral m-matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCert {
    pub m: usize,
    pub edges: Vec<Edge>,
}

impl MatchingCert {
    pub fn new(m: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort();
        edges.dedup();
        MatchingCert { m, edges }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Checks the certificate with [`is_m_matching`].
    pub fn validate(&self, h: &Hypergraph) -> Result<bool> {
        is_m_matching(h, &self.edges, self.m)
    }

    pub fn to_text(&self) -> String {
        self.edges.iter().map(|e| format!("{} 1/1\n", e.key())).collect()
    }
}

/// Diagnostics from a branch-and-bound run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Best objective after each improvement, starting with the initial heuristic.
    pub bound_trace: Vec<usize>,
    /// Root lower bound (covers only).
    pub lower_bound: usize,
}
