//! Exact linear programming and the fractional m-cover / m-matching LPs.

mod fractional;
mod scalar;
mod simplex;
mod weights;

pub use fractional::{
    cover_lp, fractional_cover, fractional_matching, matching_lp, nu_star, tau_star, verify_optimum,
    FractionalOptimum,
};
pub use scalar::{ceil_to_usize, format_ratio, parse_ratio, Field};
pub use simplex::{certify, lp_solve, lp_solve_guarded, LpProblem, LpSolution, LpStatus, RowSense, Sense};
pub use weights::{check_slackness, WeightKind, Weights};
