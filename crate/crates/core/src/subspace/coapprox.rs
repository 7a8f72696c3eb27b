//! Best coapproximation.
//!
//! `y₀ = Σ c_j b_j` is a best coapproximation to `x` iff `Y ⊥_B (x - y₀)`,
//! i.e. for every facet `min_{V_i} f(x - y₀) ≤ 0 ≤ max_{V_i} f(x - y₀)`.
//! Every `f ∈ V_i` satisfies `f(y₀) = g_i(c)`, so this is the polytope
//! `{c : min_{V_i} f(x) ≤ g_i(c) ≤ max_{V_i} f(x)}` in coefficient space,
//! bounded because the `g_i` span the dual of `Y`.

use num_traits::Zero;

use super::Subspace;
use crate::error::Result;
use crate::exactlp::{dot, lp_solve, sub, LinearProgram, LpOutcome, Rational};
use crate::orthogonality::value_range;

#[derive(Clone, Debug, PartialEq)]
pub struct CoapproxSolution {
    pub coefficients: Vec<Rational>,
    pub point: Vec<Rational>,
    /// Per facet, dual vertices `(f⁻, f⁺)` of `V_i` with
    /// `f⁻(x - y₀) ≤ 0 ≤ f⁺(x - y₀)`.
    pub certificates: Vec<(Vec<Rational>, Vec<Rational>)>,
    /// Per coefficient, its exact range over the solution set.
    pub coefficient_ranges: Vec<(Rational, Rational)>,
    pub unique: bool,
}

/// Feasible set of coefficient vectors `c` with `Y ⊥_B (x - Σ c_j b_j)`.
fn solution_polytope(y: &Subspace, x: &[Rational]) -> LinearProgram {
    let space = y.ambient();
    let mut lp = LinearProgram::new(y.dim());
    for facet in &y.facets().facets {
        let (_, lo, _, hi) = value_range(&facet.extensions, |k| dot(space.dual_vertex(k), x));
        lp.ge(facet.functional.clone(), lo);
        lp.le(facet.functional.clone(), hi);
    }
    lp
}

fn optimize_coordinate(lp: &LinearProgram, j: usize, maximize: bool) -> Rational {
    let mut lp = lp.clone();
    let mut objective = vec![Rational::zero(); lp.num_vars()];
    objective[j] = Rational::from_integer(1.into());
    if maximize {
        lp.maximize(objective);
    } else {
        lp.minimize(objective);
    }
    match lp_solve(&lp).expect("well-formed coapproximation LP") {
        LpOutcome::Optimal { value, .. } => value,
        other => unreachable!("solution polytope is nonempty and bounded, got {other:?}"),
    }
}

/// A best coapproximation to `x` out of `Y`, or `None` when `x ∉ dom R_Y`.
pub fn best_coapproximation(y: &Subspace, x: &[Rational]) -> Result<Option<CoapproxSolution>> {
    y.require_proper()?;
    y.ambient().check_dim(x)?;
    let lp = solution_polytope(y, x);
    let Some(coefficients) = lp_solve(&lp)?.into_point() else {
        return Ok(None);
    };
    let point = y.point(&coefficients);
    let residual = sub(x, &point);
    let space = y.ambient();
    let certificates = y
        .facets()
        .facets
        .iter()
        .map(|facet| {
            let (lo, _, hi, _) = value_range(&facet.extensions, |k| dot(space.dual_vertex(k), &residual));
            (space.dual_vertex(lo).to_vec(), space.dual_vertex(hi).to_vec())
        })
        .collect();
    let coefficient_ranges: Vec<(Rational, Rational)> = (0..y.dim())
        .map(|j| (optimize_coordinate(&lp, j, false), optimize_coordinate(&lp, j, true)))
        .collect();
    let unique = coefficient_ranges.iter().all(|(lo, hi)| lo == hi);
    Ok(Some(CoapproxSolution { coefficients, point, certificates, coefficient_ranges, unique }))
}
