//! Two-phase dense tableau simplex over exact rationals.
//!
//! Variables are free unless marked nonnegative. Free variables are split
//! into a difference of two nonnegative columns. Pivoting follows Bland's
//! rule (lowest entering index, lowest basic index among ratio ties), which
//! rules out cycling.

use num_traits::{One, Signed, Zero};

use super::rational::dot;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    fn flipped(self) -> Self {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Eq => Relation::Eq,
            Relation::Ge => Relation::Le,
        }
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
struct Objective {
    coeffs: Vec<Rational>,
    sense: Sense,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    num_vars: usize,
    nonneg: Vec<bool>,
    constraints: Vec<Constraint>,
    objective: Option<Objective>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    /// No objective was set and the constraints admit this point.
    Feasible { point: Vec<Rational> },
    Optimal { point: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Feasible { point } | LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn into_point(self) -> Option<Vec<Rational>> {
        match self {
            LpOutcome::Feasible { point } | LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

impl LinearProgram {
    /// An LP over `num_vars` free variables with no constraints or objective.
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            nonneg: vec![false; num_vars],
            constraints: Vec::new(),
            objective: None,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Restricts variable `var` to be nonnegative.
    pub fn nonnegative(&mut self, var: usize) -> &mut Self {
        self.nonneg[var] = true;
        self
    }

    pub fn all_nonnegative(&mut self) -> &mut Self {
        self.nonneg.iter_mut().for_each(|flag| *flag = true);
        self
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }

    pub fn le(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.constrain(coeffs, Relation::Le, rhs)
    }

    pub fn ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.constrain(coeffs, Relation::Ge, rhs)
    }

    pub fn equal(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.constrain(coeffs, Relation::Eq, rhs)
    }

    pub fn maximize(&mut self, coeffs: Vec<Rational>) -> &mut Self {
        self.objective = Some(Objective { coeffs, sense: Sense::Maximize });
        self
    }

    pub fn minimize(&mut self, coeffs: Vec<Rational>) -> &mut Self {
        self.objective = Some(Objective { coeffs, sense: Sense::Minimize });
        self
    }

    /// Checks a point against every constraint and sign restriction exactly.
    pub fn satisfies(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars
            && self.nonneg.iter().zip(point).all(|(&nn, x)| !nn || !x.is_negative())
            && self
                .constraints
                .iter()
                .all(|c| c.relation.holds(&dot(&c.coeffs, point), &c.rhs))
    }

    fn validate(&self) -> Result<()> {
        for c in &self.constraints {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch { expected: self.num_vars, found: c.coeffs.len() });
            }
        }
        if let Some(obj) = &self.objective {
            if obj.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch { expected: self.num_vars, found: obj.coeffs.len() });
            }
        }
        Ok(())
    }
}

/// Solves `lp` exactly.
pub fn lp_solve(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let outcome = Tableau::build(lp).solve(lp);
    debug_assert!(outcome.point().is_none_or(|p| lp.satisfies(p)));
    Ok(outcome)
}

struct Unbounded;

struct Tableau {
    /// Rows of `[A | b]`.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    num_cols: usize,
    /// For each original variable: (positive column, optional negative column).
    var_cols: Vec<(usize, Option<usize>)>,
    artificial_start: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        let mut next = 0;
        for &nn in &lp.nonneg {
            if nn {
                var_cols.push((next, None));
                next += 1;
            } else {
                var_cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
        let structural = next;

        // Normalize to nonnegative right-hand sides.
        let normalized: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    (c.coeffs.iter().map(|x| -x).collect(), c.relation.flipped(), -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let slack_count = normalized.iter().filter(|(_, rel, _)| *rel != Relation::Eq).count();
        let artificial_count = normalized.iter().filter(|(_, rel, _)| *rel != Relation::Le).count();
        let artificial_start = structural + slack_count;
        let num_cols = artificial_start + artificial_count;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let mut slack = structural;
        let mut artificial = artificial_start;
        for (coeffs, relation, rhs) in normalized {
            let mut row = vec![Rational::zero(); num_cols + 1];
            for (j, a) in coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let (pos, neg) = var_cols[j];
                row[pos] = a.clone();
                if let Some(neg) = neg {
                    row[neg] = -a;
                }
            }
            row[num_cols] = rhs;
            match relation {
                Relation::Le => {
                    row[slack] = Rational::one();
                    basis.push(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                    row[artificial] = Rational::one();
                    basis.push(artificial);
                    artificial += 1;
                }
                Relation::Eq => {
                    row[artificial] = Rational::one();
                    basis.push(artificial);
                    artificial += 1;
                }
            }
            rows.push(row);
        }

        Self { rows, basis, num_cols, var_cols, artificial_start }
    }

    fn pivot(&mut self, obj: &mut [Rational], r: usize, c: usize) {
        let width = self.num_cols + 1;
        let inv = Rational::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..width).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut [Rational]| {
            if row[c].is_zero() {
                return;
            }
            let factor = row[c].clone();
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(obj);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Minimizes the objective encoded by the reduced-cost row `obj`
    /// (last entry holds `-z`), pivoting only on `allowed` columns.
    fn optimize(&mut self, obj: &mut [Rational], allowed: usize) -> Result<(), Unbounded> {
        let rhs = self.num_cols;
        loop {
            let Some(enter) = (0..allowed).find(|&j| obj[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((leave, _)) = leave else {
                return Err(Unbounded);
            };
            self.pivot(obj, leave, enter);
        }
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let width = self.num_cols + 1;
        let mut obj: Vec<Rational> = (0..width)
            .map(|j| if j < cost.len() { cost[j].clone() } else { Rational::zero() })
            .collect();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = if b < cost.len() { &cost[b] } else { continue };
            if cb.is_zero() {
                continue;
            }
            for j in 0..width {
                if !row[j].is_zero() {
                    obj[j] -= cb * &row[j];
                }
            }
        }
        obj
    }

    fn solve(mut self, lp: &LinearProgram) -> LpOutcome {
        // Phase 1: minimize the sum of artificials.
        if self.artificial_start < self.num_cols {
            let mut cost = vec![Rational::zero(); self.num_cols];
            for c in cost.iter_mut().skip(self.artificial_start) {
                *c = Rational::one();
            }
            let mut obj = self.reduced_costs(&cost);
            if self.optimize(&mut obj, self.num_cols).is_err() {
                unreachable!("phase one objective is bounded below by zero");
            }
            if !obj[self.num_cols].is_zero() {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials(&mut obj);
        }

        let Some(objective) = &lp.objective else {
            return LpOutcome::Feasible { point: self.extract() };
        };

        // Phase 2 on the structural and slack columns.
        let sign = match objective.sense {
            Sense::Minimize => Rational::one(),
            Sense::Maximize => -Rational::one(),
        };
        let mut cost = vec![Rational::zero(); self.artificial_start];
        for (j, a) in objective.coeffs.iter().enumerate() {
            let (pos, neg) = self.var_cols[j];
            cost[pos] = a * &sign;
            if let Some(neg) = neg {
                cost[neg] = -(a * &sign);
            }
        }
        let mut obj = self.reduced_costs(&cost);
        if self.optimize(&mut obj, self.artificial_start).is_err() {
            return LpOutcome::Unbounded;
        }
        let point = self.extract();
        let value = dot(&objective.coeffs, &point);
        LpOutcome::Optimal { point, value }
    }

    fn drive_out_artificials(&mut self, obj: &mut [Rational]) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < self.artificial_start {
                r += 1;
                continue;
            }
            match (0..self.artificial_start).find(|&j| !self.rows[r][j].is_zero()) {
                Some(c) => {
                    self.pivot(obj, r, c);
                    r += 1;
                }
                None => {
                    // Redundant equality row.
                    self.rows.remove(r);
                    self.basis.remove(r);
                }
            }
        }
    }

    fn extract(&self) -> Vec<Rational> {
        let mut values = vec![Rational::zero(); self.num_cols];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            values[b] = row[self.num_cols].clone();
        }
        self.var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &values[pos] - &values[neg],
                None => values[pos].clone(),
            })
            .collect()
    }
}
