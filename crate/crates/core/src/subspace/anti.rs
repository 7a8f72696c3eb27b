use num_traits::Zero;

use super::{Limits, Subspace};
use crate::error::{Error, Result};
use crate::exactlp::{dot, nonzero_cone_point, Rational, Relation};
use crate::orthogonality::interpolate;

/// A nonzero `x` with `Y ⊥_B x`, so `Y` is not anti-coproximinal.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalDirection {
    pub direction: Vec<Rational>,
    /// Per facet, the dual vertices `(f⁻, f⁺)` with `f⁻(x) ≤ 0 ≤ f⁺(x)`.
    pub pattern: Vec<(usize, usize)>,
    /// Per facet, an extension of `g_i` vanishing on `x`. Together with their
    /// negatives these are the image of a selection map whose span misses
    /// the functionals not vanishing on `x`.
    pub selection_image: Vec<Vec<Rational>>,
}

struct Search<'a> {
    y: &'a Subspace,
    limit: u64,
    solves: u64,
    constraints: Vec<(Vec<Rational>, Relation)>,
    pattern: Vec<(usize, usize)>,
}

impl Search<'_> {
    /// Depth-first over facets in order, pairs `(f⁻, f⁺)` lexicographic.
    /// A prefix whose cone is `{0}` is pruned with all its extensions.
    fn descend(&mut self, facet: usize) -> Result<Option<Vec<Rational>>> {
        let dim = self.y.ambient().dim();
        let extensions = self.y.facets().facets[facet].extensions.clone();
        let last = facet + 1 == self.y.facets().r();
        for &lo in &extensions {
            for &hi in &extensions {
                if self.solves >= self.limit {
                    return Err(Error::Capacity { explored: self.solves, limit: self.limit });
                }
                self.solves += 1;
                let space = self.y.ambient();
                let added = if lo == hi {
                    self.constraints.push((space.dual_vertex(lo).to_vec(), Relation::Eq));
                    1
                } else {
                    self.constraints.push((space.dual_vertex(lo).to_vec(), Relation::Le));
                    self.constraints.push((space.dual_vertex(hi).to_vec(), Relation::Ge));
                    2
                };
                self.pattern.push((lo, hi));
                if let Some(point) = nonzero_cone_point(dim, &self.constraints)? {
                    if last {
                        return Ok(Some(point));
                    }
                    if let Some(found) = self.descend(facet + 1)? {
                        return Ok(Some(found));
                    }
                }
                self.pattern.pop();
                self.constraints.truncate(self.constraints.len() - added);
            }
        }
        Ok(None)
    }
}

/// Searches for a nonzero `x` with `Y ⊥_B x`.
///
/// Returns `None` iff `Y` is anti-coproximinal. Enumerates per facet the
/// ordered pairs `(f⁻, f⁺) ∈ V_i × V_i` and asks for a nonzero point of the
/// cone `{f⁻_i(x) ≤ 0 ≤ f⁺_i(x) ∀i}`; the first pattern in lexicographic
/// order wins.
pub fn find_orthogonal_direction(y: &Subspace, limits: &Limits) -> Result<Option<OrthogonalDirection>> {
    y.require_proper()?;
    let mut search = Search {
        y,
        limit: limits.max_patterns,
        solves: 0,
        constraints: Vec::new(),
        pattern: Vec::new(),
    };
    let Some(direction) = search.descend(0)? else {
        return Ok(None);
    };
    let space = y.ambient();
    let selection_image = search
        .pattern
        .iter()
        .map(|&(lo, hi)| {
            let (f_lo, f_hi) = (space.dual_vertex(lo), space.dual_vertex(hi));
            let (a, b) = (dot(f_lo, &direction), dot(f_hi, &direction));
            interpolate(f_lo, &a, f_hi, &b, &Rational::zero())
        })
        .collect();
    Ok(Some(OrthogonalDirection { direction, pattern: search.pattern, selection_image }))
}
