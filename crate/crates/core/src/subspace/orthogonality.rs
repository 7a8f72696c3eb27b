use num_traits::{Signed, Zero};

use super::Subspace;
use crate::error::{Error, Result};
use crate::exactlp::{dot, is_zero_vector, Rational};
use crate::orthogonality::{check_epsilon, closest_to_zero, interpolate, value_range};

/// Range of `⟨f, x⟩` over the extension set `V_i` of one facet.
#[derive(Clone, Debug, PartialEq)]
pub struct FacetBracket {
    pub lower_vertex: usize,
    pub lower: Rational,
    pub upper_vertex: usize,
    pub upper: Rational,
}

impl FacetBracket {
    pub fn contains_zero(&self) -> bool {
        !self.lower.is_positive() && !self.upper.is_negative()
    }

    /// `min_{f ∈ conv(V_i)} |⟨f, x⟩|`.
    pub fn distance_to_zero(&self) -> Rational {
        closest_to_zero(&self.lower, &self.upper).abs()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubspaceOrthogonality {
    pub orthogonal: bool,
    pub brackets: Vec<FacetBracket>,
    /// Per facet, a norm-preserving extension of `g_i` vanishing on `x`.
    pub certificates: Option<Vec<Vec<Rational>>>,
}

pub(crate) fn brackets(y: &Subspace, x: &[Rational]) -> Vec<FacetBracket> {
    let space = y.ambient();
    y.facets()
        .facets
        .iter()
        .map(|facet| {
            let (lower_vertex, lower, upper_vertex, upper) =
                value_range(&facet.extensions, |k| dot(space.dual_vertex(k), x));
            FacetBracket { lower_vertex, lower, upper_vertex, upper }
        })
        .collect()
}

/// Decides `Y ⊥_B x`: every facet's extension range brackets zero.
pub fn subspace_bj_orthogonal(y: &Subspace, x: &[Rational]) -> Result<SubspaceOrthogonality> {
    y.ambient().check_dim(x)?;
    let brackets = brackets(y, x);
    let orthogonal = brackets.iter().all(FacetBracket::contains_zero);
    let certificates = orthogonal.then(|| {
        let space = y.ambient();
        brackets
            .iter()
            .map(|b| {
                interpolate(
                    space.dual_vertex(b.lower_vertex),
                    &b.lower,
                    space.dual_vertex(b.upper_vertex),
                    &b.upper,
                    &Rational::zero(),
                )
            })
            .collect()
    });
    Ok(SubspaceOrthogonality { orthogonal, brackets, certificates })
}

/// Decides `Y ⊥_B^ε x` for nonzero `x`.
pub fn subspace_eps_orthogonal(y: &Subspace, x: &[Rational], eps: &Rational) -> Result<bool> {
    check_epsilon(eps)?;
    Ok(rho(y, x)? <= *eps)
}

/// `ρ(x) = max_i min_{f ∈ conv(V_i)} |⟨f, x⟩| / ‖x‖`, the smallest `ε` with
/// `Y ⊥_B^ε x`. Always in `[0, 1]`.
pub fn rho(y: &Subspace, x: &[Rational]) -> Result<Rational> {
    y.ambient().check_dim(x)?;
    if is_zero_vector(x) {
        return Err(Error::ZeroVector);
    }
    let norm = y.ambient().norm_unchecked(x);
    let worst = brackets(y, x)
        .iter()
        .map(FacetBracket::distance_to_zero)
        .max()
        .expect("at least one facet");
    Ok(worst / norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::{int, rat};
    use crate::space::PolyhedralNormSpace;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn diagonal_examples() {
        let y = Subspace::new(PolyhedralNormSpace::linf(2).unwrap(), vec![v(&[1, 1])]).unwrap();
        let out = subspace_bj_orthogonal(&y, &v(&[1, -1])).unwrap();
        assert!(out.orthogonal);
        assert_eq!(out.certificates.unwrap(), vec![vec![rat(1, 2), rat(1, 2)]]);
    }

    #[test]
    fn l1_axis_examples() {
        let y = Subspace::new(PolyhedralNormSpace::l1(2).unwrap(), vec![v(&[1, 0])]).unwrap();
        assert!(subspace_bj_orthogonal(&y, &v(&[0, 1])).unwrap().orthogonal);
        assert!(!subspace_bj_orthogonal(&y, &v(&[1, 0])).unwrap().orthogonal);
        // interval {1} against [-1/2, 1/2]
        assert!(!subspace_eps_orthogonal(&y, &v(&[1, 0]), &rat(1, 2)).unwrap());
        // values {3, 1} against [-3/2, 3/2]
        assert!(subspace_eps_orthogonal(&y, &v(&[2, 1]), &rat(1, 2)).unwrap());
        assert_eq!(rho(&y, &v(&[2, 1])).unwrap(), rat(1, 3));
        assert_eq!(rho(&y, &v(&[0, 1])).unwrap(), int(0));
    }

    #[test]
    fn orthogonal_implies_eps_orthogonal() {
        let y = Subspace::new(PolyhedralNormSpace::linf(2).unwrap(), vec![v(&[1, 1])]).unwrap();
        for eps in [int(0), rat(1, 3), rat(99, 100)] {
            assert!(subspace_eps_orthogonal(&y, &v(&[1, -1]), &eps).unwrap());
        }
        assert_eq!(
            subspace_eps_orthogonal(&y, &v(&[1, -1]), &int(1)).unwrap_err(),
            Error::EpsilonOutOfRange
        );
    }
}
