use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use super::family::{family_nu2, EdgeFamilySeq, FamilyCover, Pair};
use crate::error::{Error, Result};
use crate::intsolve::pair_matching;
use crate::limits::Limits;
use crate::ratlp::format_ratio;
use crate::Rat;

#[derive(Debug, Clone, PartialEq)]
pub struct TunuTrace {
    /// Maximum matching of `F_1 ∩ F_2`.
    pub n_matching: BTreeSet<Pair>,
    /// Maximum matchings of `F_i \ N`, after ordering so that `l1 >= l2`.
    pub l1: BTreeSet<Pair>,
    pub l2: BTreeSet<Pair>,
    /// Whether `F_1` and `F_2` were swapped to get `l1 >= l2`.
    pub swapped: bool,
    /// `l_i = (1 + alpha_i) n`; absent when `n = 0`.
    pub alphas: Option<(Rat, Rat)>,
    pub nu: usize,
    pub size: usize,
}

impl TunuTrace {
    pub fn n(&self) -> usize {
        self.n_matching.len()
    }
}

impl fmt::Display for TunuTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &BTreeSet<Pair>| s.iter().map(|(x, y)| format!("{x}{y}")).join(" ");
        writeln!(f, "two-family cover with Z = N")?;
        writeln!(f, "  N = {{{}}} (n = {})", show(&self.n_matching), self.n())?;
        writeln!(f, "  L1 = {{{}}} (l1 = {})", show(&self.l1), self.l1.len())?;
        writeln!(f, "  L2 = {{{}}} (l2 = {})", show(&self.l2), self.l2.len())?;
        if self.swapped {
            writeln!(f, "  families swapped so that l1 >= l2")?;
        }
        if let Some((a1, a2)) = &self.alphas {
            writeln!(f, "  alpha1 = {}, alpha2 = {}", format_ratio(a1), format_ratio(a2))?;
        }
        writeln!(f, "  cover size = {}, nu = {}, 3 size <= 5 nu", self.size, self.nu)
    }
}

/// Family cover with `Z = N` for two families, of size `n + l1 + l2`, and a
/// check that it is at most `5/3 nu^(2)(F_1, F_2)`.
///
/// `N` is a maximum matching of `F_1 ∩ F_2` and `L_i` a maximum matching of
/// `F_i \ N`; each `F_i - N` is then covered by its Kőnig cover of size
/// `l_i`. `nu` comes from the exact [`family_nu2`]. When `n = 0` no `alpha`
/// is defined and only the direct comparison is made.
pub fn tunu_construct(f: &EdgeFamilySeq, limits: &Limits) -> Result<(FamilyCover, TunuTrace)> {
    if f.len() != 2 {
        return Err(Error::Parameter(format!("two families required, got {}", f.len())));
    }
    let both: BTreeSet<Pair> = f.families[0].intersection(&f.families[1]).cloned().collect();
    let n_matching = pair_matching(both.iter()).matching;
    let rest = |i: usize| pair_matching(f.families[i].iter().filter(|p| !n_matching.contains(p))).matching;
    let (mut l1, mut l2) = (rest(0), rest(1));
    let swapped = l1.len() < l2.len();
    if swapped {
        std::mem::swap(&mut l1, &mut l2);
    }
    if l1.intersection(&l2).count() > n_matching.len() {
        return Err(Error::AssertionFailure(format!(
            "|L1 ∩ L2| > n = {} contradicts the maximality of N",
            n_matching.len()
        )));
    }
    let n = n_matching.len();
    let cover = FamilyCover::with_z(f, n_matching.clone());
    let (nu, _) = family_nu2(f, limits)?;
    let alphas = (n > 0).then(|| {
        let alpha = |l: usize| Rat::new((l as i64 - n as i64).into(), (n as i64).into());
        (alpha(l1.len()), alpha(l2.len()))
    });
    let trace = TunuTrace {
        size: cover.size(),
        n_matching,
        l1,
        l2,
        swapped,
        alphas,
        nu,
    };
    if !cover.validate(f) {
        return Err(Error::InternalContradiction(format!("family cover is invalid\n{trace}")));
    }
    let lower = (n + trace.l1.len()).max(trace.l1.union(&trace.l2).count());
    if nu < lower {
        return Err(Error::InternalContradiction(format!("nu = {nu} below the matching bound {lower}")));
    }
    if cover.size() > n + trace.l1.len() + trace.l2.len() || 3 * cover.size() > 5 * nu {
        return Err(Error::BoundViolated(trace.to_string()));
    }
    Ok((cover, trace))
}
