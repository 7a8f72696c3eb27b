use std::collections::HashMap;

use num_traits::One;

use super::simplex::{lp_solve, LinearProgram, LpOutcome};
use super::Rational;

/// Whether `target` is a convex combination of `points`.
pub fn in_convex_hull(points: &[&[Rational]], target: &[Rational]) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = points.len();
    let mut lp = LinearProgram::new(n);
    lp.all_nonnegative();
    lp.equal(vec![Rational::one(); n], Rational::one());
    for (d, t) in target.iter().enumerate() {
        lp.equal(points.iter().map(|p| p[d].clone()).collect(), t.clone());
    }
    matches!(lp_solve(&lp).expect("well-formed membership LP"), LpOutcome::Feasible { .. })
}

/// Indices of the points that are vertices of their convex hull.
///
/// A point is kept iff it is not a convex combination of the other distinct
/// points; among duplicates only the first index survives.
pub fn hull_vertices(points: &[Vec<Rational>]) -> Vec<usize> {
    let mut first: HashMap<&[Rational], usize> = HashMap::new();
    let mut unique = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !first.contains_key(p.as_slice()) {
            first.insert(p, i);
            unique.push(i);
        }
    }
    unique
        .iter()
        .copied()
        .filter(|&i| {
            let others: Vec<&[Rational]> = unique
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| points[j].as_slice())
                .collect();
            !in_convex_hull(&others, &points[i])
        })
        .collect()
}
