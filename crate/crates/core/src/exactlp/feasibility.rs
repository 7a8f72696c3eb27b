use num_traits::{One, Signed, Zero};

use super::simplex::{lp_solve, LinearProgram, LpOutcome, Relation};
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionKind {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

/// `⟨coeffs, x⟩ (kind) rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearCondition {
    pub coeffs: Vec<Rational>,
    pub kind: ConditionKind,
    pub rhs: Rational,
}

impl LinearCondition {
    pub fn new(coeffs: Vec<Rational>, kind: ConditionKind, rhs: Rational) -> Self {
        Self { coeffs, kind, rhs }
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let lhs = super::dot(&self.coeffs, x);
        match self.kind {
            ConditionKind::Lt => lhs < self.rhs,
            ConditionKind::Le => lhs <= self.rhs,
            ConditionKind::Eq => lhs == self.rhs,
            ConditionKind::Ge => lhs >= self.rhs,
            ConditionKind::Gt => lhs > self.rhs,
        }
    }
}

/// A point satisfying every strict condition with slack at least `margin > 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct StrictSolution {
    pub point: Vec<Rational>,
    pub margin: Rational,
}

/// Finds a point satisfying a mix of strict and non-strict linear conditions.
///
/// Each strict condition `⟨a,x⟩ < b` becomes `⟨a,x⟩ + t ≤ b` with a shared
/// slack `t ≤ 1` that is maximized; a point is returned iff the optimum is
/// positive. Without strict conditions this is plain feasibility and the
/// reported margin is 1.
pub fn strict_feasible(num_vars: usize, conditions: &[LinearCondition]) -> Result<Option<StrictSolution>> {
    for c in conditions {
        if c.coeffs.len() != num_vars {
            return Err(Error::DimensionMismatch { expected: num_vars, found: c.coeffs.len() });
        }
    }
    let has_strict = conditions
        .iter()
        .any(|c| matches!(c.kind, ConditionKind::Lt | ConditionKind::Gt));
    let slack = num_vars;
    let mut lp = LinearProgram::new(num_vars + 1);
    for c in conditions {
        // Orient every condition as `≤`, `=`, or strict `<`.
        let (coeffs, rhs, relation, strict): (Vec<Rational>, Rational, Relation, bool) = match c.kind {
            ConditionKind::Lt => (c.coeffs.clone(), c.rhs.clone(), Relation::Le, true),
            ConditionKind::Le => (c.coeffs.clone(), c.rhs.clone(), Relation::Le, false),
            ConditionKind::Eq => (c.coeffs.clone(), c.rhs.clone(), Relation::Eq, false),
            ConditionKind::Ge => (c.coeffs.iter().map(|x| -x).collect(), -&c.rhs, Relation::Le, false),
            ConditionKind::Gt => (c.coeffs.iter().map(|x| -x).collect(), -&c.rhs, Relation::Le, true),
        };
        let mut row = coeffs;
        row.push(if strict { Rational::one() } else { Rational::zero() });
        lp.constrain(row, relation, rhs);
    }
    let mut cap = vec![Rational::zero(); num_vars + 1];
    cap[slack] = Rational::one();
    lp.le(cap.clone(), Rational::one());
    if has_strict {
        lp.maximize(cap);
    } else {
        lp.equal(cap, Rational::one());
    }
    let outcome = lp_solve(&lp)?;
    let Some(mut point) = outcome.into_point() else {
        return Ok(None);
    };
    let margin = point.pop().expect("slack variable present");
    if !margin.is_positive() {
        return Ok(None);
    }
    debug_assert!(conditions.iter().all(|c| c.holds(&point)));
    Ok(Some(StrictSolution { point, margin }))
}

/// Returns a nonzero point of the cone cut out by homogeneous constraints
/// `⟨a,x⟩ (rel) 0`, or `None` iff the cone is `{0}`.
///
/// Any nonzero cone point can be rescaled so that one coordinate is `±1`,
/// so the search fixes each coordinate to `+1` and then `-1` in turn.
pub fn nonzero_cone_point(num_vars: usize, constraints: &[(Vec<Rational>, Relation)]) -> Result<Option<Vec<Rational>>> {
    for (coeffs, _) in constraints {
        if coeffs.len() != num_vars {
            return Err(Error::DimensionMismatch { expected: num_vars, found: coeffs.len() });
        }
    }
    let mut base = LinearProgram::new(num_vars);
    for (coeffs, rel) in constraints {
        base.constrain(coeffs.clone(), *rel, Rational::zero());
    }
    for coord in 0..num_vars {
        for sign in [Rational::one(), -Rational::one()] {
            let mut lp = base.clone();
            let mut unit = vec![Rational::zero(); num_vars];
            unit[coord] = Rational::one();
            lp.equal(unit, sign);
            if let LpOutcome::Feasible { point } = lp_solve(&lp)? {
                return Ok(Some(point));
            }
        }
    }
    Ok(None)
}
