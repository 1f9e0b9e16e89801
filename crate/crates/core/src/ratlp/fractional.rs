use super::simplex::{lp_solve_guarded, LpProblem, LpStatus, RowSense, Sense};
use super::{Field, WeightKind, Weights};
use crate::error::{Error, Result};
use crate::hypercore::{derive, DerivedSystem, Hypergraph};
use crate::limits::Limits;
use crate::{Rat, RatOptimum};

/// Optimal fractional m-cover and m-matching of equal total.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalOptimum<T> {
    pub value: T,
    pub cover: Weights<T>,
    pub matching: Weights<T>,
}

/// `min sum x_u` over m-sets subject to every block summing to at least one.
/// Columns follow the canonical ground order, rows the canonical edge order.
pub fn cover_lp<T: Field>(d: &DerivedSystem) -> LpProblem<T> {
    let mut lp = LpProblem::new(Sense::Minimize, vec![T::one(); d.ground().len()]);
    for block in d.blocks() {
        let mut row = vec![T::zero(); d.ground().len()];
        for &g in block {
            row[g] = T::one();
        }
        lp.add_row(row, RowSense::Ge, T::one());
    }
    lp
}

/// `max sum y_e` over edges subject to every m-set carrying at most one.
pub fn matching_lp<T: Field>(d: &DerivedSystem) -> LpProblem<T> {
    let inc = d.incidence();
    let mut lp = LpProblem::new(Sense::Maximize, vec![T::one(); d.blocks().len()]);
    for blocks in &inc {
        let mut row = vec![T::zero(); d.blocks().len()];
        for &b in blocks {
            row[b] = T::one();
        }
        lp.add_row(row, RowSense::Le, T::one());
    }
    lp
}

fn matching_from<T: Field>(d: &DerivedSystem, y: &[T]) -> Result<Weights<T>> {
    Weights::new(
        WeightKind::Matching,
        d.m(),
        d.source().iter().cloned().zip(y.iter().cloned()),
    )
}

fn solved<T: Field>(lp: &LpProblem<T>, limits: &Limits) -> Result<(T, Vec<T>, Vec<T>)> {
    let s = lp_solve_guarded(lp, limits)?;
    match (s.status, s.value) {
        (LpStatus::Optimal, Some(v)) => Ok((v, s.primal, s.dual)),
        (status, _) => Err(Error::InternalContradiction(format!(
            "fractional LP reported {status:?}; it is always feasible and bounded"
        ))),
    }
}

/// `tau*^(m)` from the cover LP; the matching is the LP dual.
pub fn fractional_cover<T: Field>(h: &Hypergraph, m: usize, limits: &Limits) -> Result<FractionalOptimum<T>> {
    let d = derive(h, m)?;
    let (value, x, y) = solved(&cover_lp::<T>(&d), limits)?;
    let cover = Weights::new(WeightKind::Cover, d.m(), d.ground().iter().cloned().zip(x))?;
    let matching = matching_from(&d, &y)?;
    Ok(FractionalOptimum { value, cover, matching })
}

/// `nu*^(m)` from the matching LP; the cover is the LP dual.
pub fn fractional_matching<T: Field>(h: &Hypergraph, m: usize, limits: &Limits) -> Result<FractionalOptimum<T>> {
    let d = derive(h, m)?;
    let (value, y, x) = solved(&matching_lp::<T>(&d), limits)?;
    let matching = matching_from(&d, &y)?;
    let cover = Weights::new(WeightKind::Cover, d.m(), d.ground().iter().cloned().zip(x))?;
    Ok(FractionalOptimum { value, cover, matching })
}

/// Exact `tau*^(m)(H)` with an optimal fractional cover and its dual matching.
pub fn tau_star(h: &Hypergraph, m: usize, limits: &Limits) -> Result<RatOptimum> {
    let opt = fractional_cover::<Rat>(h, m, limits)?;
    let d = derive(h, m)?;
    verify_optimum(&opt, &d)?;
    Ok(opt)
}

/// Exact `nu*^(m)(H)` with an optimal fractional matching and its dual cover.
pub fn nu_star(h: &Hypergraph, m: usize, limits: &Limits) -> Result<RatOptimum> {
    let opt = fractional_matching::<Rat>(h, m, limits)?;
    let d = derive(h, m)?;
    verify_optimum(&opt, &d)?;
    Ok(opt)
}

/// Feasibility of both sides and equal totals.
pub fn verify_optimum(opt: &RatOptimum, d: &DerivedSystem) -> Result<()> {
    if !opt.cover.is_fractional_cover(d) {
        return Err(Error::InternalContradiction("optimal cover is infeasible".into()));
    }
    if !opt.matching.is_fractional_matching(d) {
        return Err(Error::InternalContradiction("optimal matching is infeasible".into()));
    }
    if opt.cover.total() != opt.value || opt.matching.total() != opt.value {
        return Err(Error::InternalContradiction("cover and matching totals differ from the optimum".into()));
    }
    Ok(())
}
