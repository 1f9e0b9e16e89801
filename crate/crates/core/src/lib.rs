//! m-covers and m-matchings of uniform hypergraphs.
//!
//! For a k-uniform hypergraph `H` and an order `m <= k`, an *m-matching* is a
//! set of edges pairwise sharing fewer than `m` vertices, and an *m-cover* is a
//! family of m-sets such that every edge contains one of them. Both are the
//! ordinary matching and cover of the derived system `H^(m)` whose ground set
//! is the m-subsets of vertices and whose blocks are the m-subset families of
//! the edges.
//!
//! The crate is organised as:
//!
//! * [`hypercore`]: vertices, edges, hypergraphs, the derived system, simple
//!   graphs and the shared text format.
//! * [`ratlp`]: an exact simplex solver, generic over an ordered field, and the
//!   fractional cover/matching LPs (`tau*`, `nu*`) with dual certificates.
//! * [`intsolve`]: exact `tau^(m)` / `nu^(m)` by branch and bound, bipartite
//!   matching with Kőnig covers, p-factors by max-flow.
//! * [`families`]: generators for the named instance families.
//! * [`proofcraft`]: constructive covers and matchings, each returning a
//!   certificate together with its size bound.

pub mod error;
pub mod families;
pub mod hypercore;
pub mod intsolve;
pub mod limits;
pub mod proofcraft;
pub mod ratlp;

pub use error::{Error, Result};
pub use hypercore::{
    DerivedSystem, Edge, Hypergraph, Instance, PartiteStructure, SimpleGraph, VertexId,
};
pub use limits::Limits;
pub use ratlp::{Field, LpProblem, LpSolution, LpStatus, WeightKind, Weights};

/// Exact rational scalar used throughout the fractional solvers.
pub type Rat = num_rational::BigRational;

/// Nonnegative rational weighting of m-sets or edges.
pub type WeightFn = Weights<Rat>;

/// Linear program over [`Rat`].
pub type RatLp = LpProblem<Rat>;

/// Solution of a [`RatLp`].
pub type RatLpSolution = LpSolution<Rat>;

/// Fractional optimum over [`Rat`].
pub type RatOptimum = ratlp::FractionalOptimum<Rat>;

/// Build a [`Rat`] from a numerator and a denominator.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Build an integral [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}
