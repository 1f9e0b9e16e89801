//! Constructive covers and matchings taken from the proofs, each returning a
//! certificate, the bound it is expected to meet, and a printable trace.
//!
//! Every construction validates its own output with the hypercore
//! predicates (or the fractional feasibility check) before returning, and a
//! violated bound is reported as [`Error::BoundViolated`] rather than
//! silently accepted.

mod cover45;
mod crossing;
mod family;
mod g42;
mod gstar;
mod kk1;
mod mimic;
mod sunflower;
mod tunu;
mod two_edge;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hypercore::{Edge, Hypergraph};
use crate::intsolve::nu_int;
use crate::limits::Limits;

pub use cover45::{cover45, Cover45Trace, CoupleRecord};
pub use crossing::{crossing_partition_cover, CrossingTrace};
pub use family::{family_nu2, family_tau2, from_family, to_family, EdgeFamilySeq, FamilyCover};
pub use g42::{g42_cover, G42Case, G42Trace};
pub use gstar::{gstar_upper_cover, GstarCase, GstarTrace};
pub use kk1::{kk1_cover, Kk1Trace};
pub use mimic::{mimic_cover, MimicAnalysis, MimicChoice};
pub use sunflower::{sunflower_compress, sunflower_find, SunflowerWitness};
pub use tunu::{tunu_construct, TunuTrace};
pub use two_edge::{two_edge_cover, TwoEdgeTrace};

/// Checks `nu^(m)(H) = 1` with the exact solver.
pub(crate) fn require_nu_one(h: &Hypergraph, m: usize, limits: &Limits) -> Result<()> {
    let (nu, _, _) = nu_int(h, m, limits)?;
    if nu != 1 {
        return Err(Error::PreconditionViolated(format!(
            "construction needs nu^({m}) = 1, found {nu}"
        )));
    }
    Ok(())
}

pub(crate) fn pairs_of(e: &Edge) -> Vec<Edge> {
    e.subsets(2).collect()
}

pub(crate) fn join_edges(edges: &[Edge]) -> String {
    edges.iter().map(|e| e.key()).join(" ")
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
