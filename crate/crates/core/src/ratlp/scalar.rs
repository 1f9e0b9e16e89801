use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// Ordered field the simplex runs over.
///
/// Exact fields get every optimum certified (primal feasibility, dual
/// feasibility, equal objectives). `f64` is accepted for quick estimates but
/// its results are not certified.
pub trait Field: Clone + Debug + Display + PartialOrd + Num + Signed {
    /// Arithmetic never rounds.
    const EXACT: bool;
}

impl Field for BigRational {
    const EXACT: bool = true;
}

/// Overflows panic; only for problems with small coefficients.
impl Field for Ratio<i64> {
    const EXACT: bool = true;
}

impl Field for Ratio<i128> {
    const EXACT: bool = true;
}

impl Field for f64 {
    const EXACT: bool = false;
}

/// `p/q` with the denominator always written, as used in weight files.
pub fn format_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parameter(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Smallest integer `>= r`.
pub fn ceil_to_usize(r: &BigRational) -> usize {
    let c = r.ceil().to_integer();
    usize::try_from(c).unwrap_or(0)
}
