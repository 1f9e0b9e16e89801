//! Two-phase tableau simplex with Bland's rule.
//!
//! All variables are nonnegative. The dual convention is `value = b . y`; for
//! a maximization `y_i >= 0` on `<=` rows, `y_i <= 0` on `>=` rows and
//! `A^T y >= c`; for a minimization the signs flip (`y_i >= 0` on `>=` rows,
//! `A^T y <= c`). Equality rows have free duals.

use super::Field;
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowSense {
    Le,
    Ge,
    Eq,
}

/// `optimize c.x` subject to `A x (<=|>=|=) b`, `x >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem<T> {
    pub sense: Sense,
    pub objective: Vec<T>,
    pub matrix: Vec<Vec<T>>,
    pub row_senses: Vec<RowSense>,
    pub rhs: Vec<T>,
}

impl<T: Field> LpProblem<T> {
    pub fn new(sense: Sense, objective: Vec<T>) -> Self {
        LpProblem {
            sense,
            objective,
            matrix: Vec::new(),
            row_senses: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn add_row(&mut self, coeffs: Vec<T>, sense: RowSense, rhs: T) -> &mut Self {
        self.matrix.push(coeffs);
        self.row_senses.push(sense);
        self.rhs.push(rhs);
        self
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.matrix.len()
    }

    pub fn nonzeros(&self) -> usize {
        self.matrix
            .iter()
            .map(|r| r.iter().filter(|a| !a.is_zero()).count())
            .sum()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.row_senses.len() != self.matrix.len() || self.rhs.len() != self.matrix.len() {
            return Err(Error::MalformedProblem(format!(
                "{} rows, {} senses, {} right-hand sides",
                self.matrix.len(),
                self.row_senses.len(),
                self.rhs.len()
            )));
        }
        if let Some((i, r)) = self.matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::MalformedProblem(format!(
                "row {i} has {} coefficients, expected {n}",
                r.len()
            )));
        }
        Ok(())
    }

    /// Objective value of `x`.
    pub fn evaluate(&self, x: &[T]) -> T {
        dot(&self.objective, x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution<T> {
    pub status: LpStatus,
    /// Present iff `status` is optimal.
    pub value: Option<T>,
    pub primal: Vec<T>,
    pub dual: Vec<T>,
}

fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Solves with the default size guard.
pub fn lp_solve<T: Field>(problem: &LpProblem<T>) -> Result<LpSolution<T>> {
    lp_solve_guarded(problem, &Limits::default())
}

/// Refuses problems with more than `limits.lp_nonzeros` nonzero coefficients.
pub fn lp_solve_guarded<T: Field>(problem: &LpProblem<T>, limits: &Limits) -> Result<LpSolution<T>> {
    problem.validate()?;
    let nz = problem.nonzeros();
    if nz > limits.lp_nonzeros {
        return Err(Error::SizeLimitExceeded {
            what: "LP nonzeros",
            actual: nz,
            limit: limits.lp_nonzeros,
        });
    }
    let solution = Tableau::solve(problem);
    if T::EXACT && solution.status == LpStatus::Optimal {
        certify(problem, &solution)?;
    }
    Ok(solution)
}

/// Checks primal feasibility, dual feasibility and equality of objectives.
pub fn certify<T: Field>(problem: &LpProblem<T>, solution: &LpSolution<T>) -> Result<()> {
    let fail = |msg: String| Err(Error::InternalContradiction(format!("LP certificate: {msg}")));
    let value = match &solution.value {
        Some(v) => v,
        None => return fail("no optimal value".into()),
    };
    let x = &solution.primal;
    let y = &solution.dual;
    if x.len() != problem.num_vars() || y.len() != problem.num_rows() {
        return fail("vector lengths".into());
    }
    if x.iter().any(|v| v.is_negative()) {
        return fail("negative primal entry".into());
    }
    for (i, row) in problem.matrix.iter().enumerate() {
        let lhs = dot(row, x);
        let ok = match problem.row_senses[i] {
            RowSense::Le => lhs <= problem.rhs[i],
            RowSense::Ge => lhs >= problem.rhs[i],
            RowSense::Eq => lhs == problem.rhs[i],
        };
        if !ok {
            return fail(format!("row {i} violated"));
        }
        let max = problem.sense == Sense::Maximize;
        let sign_ok = match problem.row_senses[i] {
            RowSense::Le => (max && !y[i].is_negative()) || (!max && !y[i].is_positive()),
            RowSense::Ge => (max && !y[i].is_positive()) || (!max && !y[i].is_negative()),
            RowSense::Eq => true,
        };
        if !sign_ok {
            return fail(format!("dual {i} has the wrong sign"));
        }
    }
    for j in 0..problem.num_vars() {
        let col: T = problem
            .matrix
            .iter()
            .zip(y)
            .fold(T::zero(), |acc, (row, yi)| acc + row[j].clone() * yi.clone());
        let ok = match problem.sense {
            Sense::Maximize => col >= problem.objective[j],
            Sense::Minimize => col <= problem.objective[j],
        };
        if !ok {
            return fail(format!("dual constraint for column {j} violated"));
        }
    }
    if problem.evaluate(x) != *value || dot(&problem.rhs, y) != *value {
        return fail("primal and dual objectives differ".into());
    }
    Ok(())
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    reduced: Vec<T>,
    objective_value: T,
    basis: Vec<usize>,
    artificial_from: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl<T: Field> Tableau<T> {
    fn solve(problem: &LpProblem<T>) -> LpSolution<T> {
        let n = problem.num_vars();
        let m = problem.num_rows();

        // Normalize to b >= 0.
        let mut sign = vec![T::one(); m];
        let mut senses = problem.row_senses.clone();
        let mut rows: Vec<Vec<T>> = problem.matrix.clone();
        let mut rhs = problem.rhs.clone();
        for i in 0..m {
            if rhs[i].is_negative() {
                sign[i] = -T::one();
                rhs[i] = -rhs[i].clone();
                for a in rows[i].iter_mut() {
                    *a = -a.clone();
                }
                senses[i] = match senses[i] {
                    RowSense::Le => RowSense::Ge,
                    RowSense::Ge => RowSense::Le,
                    RowSense::Eq => RowSense::Eq,
                };
            }
        }

        // Columns: originals, slack/surplus per inequality, artificial per >=/= row.
        let slacks = senses.iter().filter(|s| **s != RowSense::Eq).count();
        let artificial_from = n + slacks;
        let artificials = senses.iter().filter(|s| **s != RowSense::Le).count();
        let width = artificial_from + artificials;
        let mut identity = vec![0; m];
        let (mut next_slack, mut next_art) = (n, artificial_from);
        for i in 0..m {
            rows[i].resize(width, T::zero());
            match senses[i] {
                RowSense::Le => {
                    rows[i][next_slack] = T::one();
                    identity[i] = next_slack;
                    next_slack += 1;
                }
                RowSense::Ge => {
                    rows[i][next_slack] = -T::one();
                    next_slack += 1;
                    rows[i][next_art] = T::one();
                    identity[i] = next_art;
                    next_art += 1;
                }
                RowSense::Eq => {
                    rows[i][next_art] = T::one();
                    identity[i] = next_art;
                    next_art += 1;
                }
            }
        }

        let mut t = Tableau {
            rows,
            rhs,
            reduced: vec![T::zero(); width],
            objective_value: T::zero(),
            basis: identity.clone(),
            artificial_from,
        };

        if artificials > 0 {
            let costs: Vec<T> = (0..width)
                .map(|j| if j >= artificial_from { -T::one() } else { T::zero() })
                .collect();
            t.price(&costs);
            // Phase one is bounded by zero.
            let _ = t.run(|_| true);
            if t.objective_value.is_negative() {
                return LpSolution {
                    status: LpStatus::Infeasible,
                    value: None,
                    primal: Vec::new(),
                    dual: Vec::new(),
                };
            }
            t.drive_out_artificials();
        }

        let max_sign = match problem.sense {
            Sense::Maximize => T::one(),
            Sense::Minimize => -T::one(),
        };
        let costs: Vec<T> = (0..width)
            .map(|j| {
                if j < n {
                    max_sign.clone() * problem.objective[j].clone()
                } else {
                    T::zero()
                }
            })
            .collect();
        t.price(&costs);
        let art = artificial_from;
        if let Outcome::Unbounded = t.run(|j| j < art) {
            return LpSolution {
                status: LpStatus::Unbounded,
                value: None,
                primal: Vec::new(),
                dual: Vec::new(),
            };
        }

        let mut primal = vec![T::zero(); n];
        for (i, &b) in t.basis.iter().enumerate() {
            if b < n {
                primal[b] = t.rhs[i].clone();
            }
        }
        let dual: Vec<T> = (0..m)
            .map(|i| max_sign.clone() * sign[i].clone() * t.reduced[identity[i]].clone())
            .collect();
        let value = problem.evaluate(&primal);
        LpSolution {
            status: LpStatus::Optimal,
            value: Some(value),
            primal,
            dual,
        }
    }

    /// Sets reduced costs `c_B B^-1 A_j - c_j` and the objective value for `costs`.
    fn price(&mut self, costs: &[T]) {
        let width = costs.len();
        let mut reduced: Vec<T> = costs.iter().map(|c| -c.clone()).collect();
        let mut value = T::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (j, r) in reduced.iter_mut().enumerate().take(width) {
                let a = &self.rows[i][j];
                if !a.is_zero() {
                    *r = r.clone() + cb.clone() * a.clone();
                }
            }
            value = value + cb.clone() * self.rhs[i].clone();
        }
        self.reduced = reduced;
        self.objective_value = value;
    }

    /// Bland's rule: lowest-index improving column enters, ties in the ratio
    /// test go to the lowest-index basic variable.
    fn run(&mut self, allowed: impl Fn(usize) -> bool) -> Outcome {
        loop {
            let entering = (0..self.reduced.len()).find(|&j| allowed(j) && self.reduced[j].is_negative());
            let Some(col) = entering else {
                return Outcome::Optimal;
            };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((r, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Outcome::Unbounded,
                Some((row, _)) => self.pivot(row, col),
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        if !p.is_one() {
            for a in self.rows[row].iter_mut() {
                if !a.is_zero() {
                    *a = a.clone() / p.clone();
                }
            }
            self.rhs[row] = self.rhs[row].clone() / p;
        }
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let f = self.rows[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for &j in &nonzero {
                self.rows[i][j] = self.rows[i][j].clone() - f.clone() * pivot_row[j].clone();
            }
            self.rhs[i] = self.rhs[i].clone() - f * pivot_rhs.clone();
        }
        let f = self.reduced[col].clone();
        if !f.is_zero() {
            for &j in &nonzero {
                self.reduced[j] = self.reduced[j].clone() - f.clone() * pivot_row[j].clone();
            }
            self.objective_value = self.objective_value.clone() - f * pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// Pivots zero-level artificials out of the basis where a structural
    /// column allows it; rows with none are redundant and keep the artificial.
    fn drive_out_artificials(&mut self) {
        for i in 0..self.rows.len() {
            if self.basis[i] < self.artificial_from {
                continue;
            }
            if let Some(j) = (0..self.artificial_from).find(|&j| !self.rows[i][j].is_zero()) {
                self.pivot(i, j);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int, Rat};
    use num_rational::Ratio;

    fn r(n: i64) -> Rat {
        rat_int(n)
    }

    #[test]
    fn single_bound() {
        let mut p = LpProblem::new(Sense::Maximize, vec![r(1)]);
        p.add_row(vec![r(1)], RowSense::Le, rat(3, 2));
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        assert_eq!(s.value, Some(rat(3, 2)));
        assert_eq!(s.dual, vec![r(1)]);
    }

    #[test]
    fn two_variables() {
        let mut p = LpProblem::new(Sense::Maximize, vec![r(1), r(1)]);
        p.add_row(vec![r(1), r(1)], RowSense::Le, r(1));
        assert_eq!(lp_solve(&p).unwrap().value, Some(r(1)));
    }

    #[test]
    fn triangle_vertex_cover() {
        // min x1+x2+x3, x_u + x_v >= 1 on each edge of K3.
        let mut p = LpProblem::new(Sense::Minimize, vec![r(1); 3]);
        p.add_row(vec![r(1), r(1), r(0)], RowSense::Ge, r(1));
        p.add_row(vec![r(1), r(0), r(1)], RowSense::Ge, r(1));
        p.add_row(vec![r(0), r(1), r(1)], RowSense::Ge, r(1));
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.value, Some(rat(3, 2)));
        assert_eq!(s.dual, vec![rat(1, 2); 3]);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut p = LpProblem::new(Sense::Maximize, vec![r(1)]);
        p.add_row(vec![r(1)], RowSense::Le, r(1));
        p.add_row(vec![r(1)], RowSense::Ge, r(2));
        assert_eq!(lp_solve(&p).unwrap().status, LpStatus::Infeasible);

        let mut q = LpProblem::new(Sense::Maximize, vec![r(1), r(0)]);
        q.add_row(vec![r(0), r(1)], RowSense::Le, r(1));
        assert_eq!(lp_solve(&q).unwrap().status, LpStatus::Unbounded);
    }

    #[test]
    fn equality_and_negative_rhs() {
        // min x - y, x + y = 2, -x <= -1/2 (x >= 1/2): optimum x = 1/2, y = 3/2.
        let mut p = LpProblem::new(Sense::Minimize, vec![r(1), r(-1)]);
        p.add_row(vec![r(1), r(1)], RowSense::Eq, r(2));
        p.add_row(vec![r(-1), r(0)], RowSense::Le, rat(-1, 2));
        let s = lp_solve(&p).unwrap();
        assert_eq!(s.value, Some(r(-1)));
        assert_eq!(s.primal, vec![rat(1, 2), rat(3, 2)]);
    }

    #[test]
    fn redundant_equalities() {
        let mut p = LpProblem::new(Sense::Maximize, vec![r(1), r(2)]);
        p.add_row(vec![r(1), r(1)], RowSense::Eq, r(1));
        p.add_row(vec![r(2), r(2)], RowSense::Eq, r(2));
        assert_eq!(lp_solve(&p).unwrap().value, Some(r(2)));
    }

    #[test]
    fn generic_scalars() {
        let mut p = LpProblem::new(Sense::Maximize, vec![Ratio::<i64>::from_integer(1); 2]);
        p.add_row(vec![Ratio::from_integer(1); 2], RowSense::Le, Ratio::new(7, 3));
        assert_eq!(lp_solve(&p).unwrap().value, Some(Ratio::new(7, 3)));

        let mut f = LpProblem::new(Sense::Minimize, vec![1.0f64; 3]);
        f.add_row(vec![1.0, 1.0, 0.0], RowSense::Ge, 1.0);
        f.add_row(vec![1.0, 0.0, 1.0], RowSense::Ge, 1.0);
        f.add_row(vec![0.0, 1.0, 1.0], RowSense::Ge, 1.0);
        let v = lp_solve(&f).unwrap().value.unwrap();
        assert!((v - 1.5).abs() < 1e-12);
    }

    #[test]
    fn malformed_and_guarded() {
        let mut p = LpProblem::new(Sense::Maximize, vec![r(1), r(1)]);
        p.add_row(vec![r(1)], RowSense::Le, r(1));
        assert!(matches!(lp_solve(&p), Err(Error::MalformedProblem(_))));

        let mut q = LpProblem::new(Sense::Maximize, vec![r(1), r(1)]);
        q.add_row(vec![r(1), r(1)], RowSense::Le, r(1));
        let tight = Limits {
            lp_nonzeros: 1,
            ..Limits::default()
        };
        assert!(matches!(lp_solve_guarded(&q, &tight), Err(Error::SizeLimitExceeded { .. })));
    }

    #[test]
    fn cycling_prone_problem_terminates() {
        // Beale's example, which cycles under the largest-coefficient rule.
        let mut p = LpProblem::new(Sense::Maximize, vec![rat(3, 4), r(-150), rat(1, 50), r(-6)]);
        p.add_row(vec![rat(1, 4), r(-60), rat(-1, 25), r(9)], RowSense::Le, r(0));
        p.add_row(vec![rat(1, 2), r(-90), rat(-1, 50), r(3)], RowSense::Le, r(0));
        p.add_row(vec![r(0), r(0), r(1), r(0)], RowSense::Le, r(1));
        assert_eq!(lp_solve(&p).unwrap().value, Some(rat(1, 20)));
    }
}
