//! Selection maps restricted to dual-ball vertices and the isometric
//! embedding `ζ : Y → ℓ∞^r`.
//!
//! A selection map picks `f_y ∈ J_X(y)` homogeneously. On the interior of the
//! facet of `g_i`, `J_X(y) = conv(V_i)`, so a vertex-valued selection picks
//! one member of each `V_i`; a dual vertex is forced into every image exactly
//! when it is the whole support face of some `y ∈ Y`. Any one extension per
//! facet gives `ζ(y) = (f_1(y), …, f_r(y))`, isometric because the `g_i` norm
//! `Y`.

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exactlp::{dot, hull_vertices, lp_solve, LinearProgram, LpOutcome, Rational};
use crate::sampling::RationalSampler;
use crate::subspace::{coverage, sufficient_selection, Limits, Subspace};

#[derive(Clone, Debug, PartialEq)]
pub struct SelectionReport {
    /// Dual vertices `x*` with `J_X(y) = {x*}` for some `y ∈ Y`.
    pub forced_vertices: Vec<usize>,
    pub facet_pairs: usize,
    /// Per facet, whether `|V_i| = 1`.
    pub extension_unique: Vec<bool>,
    pub minimal_exists: bool,
    /// `2r` when a minimal vertex-valued selection exists.
    pub minimal_image_size: Option<usize>,
    /// Per facet, the lexicographically least member of `V_i`.
    pub chosen_image: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingReport {
    /// Rows `f_1, …, f_r`, the chosen extensions.
    pub zeta: Vec<Vec<Rational>>,
    pub facet_count: usize,
    /// `Y ≅ ℓ∞^{dim Y}`, i.e. `r = dim Y`.
    pub isometric_linf_n: bool,
}

impl EmbeddingReport {
    pub fn r(&self) -> usize {
        self.zeta.len()
    }

    /// `ζ(y)`.
    pub fn apply(&self, y: &[Rational]) -> Vec<Rational> {
        self.zeta.iter().map(|f| dot(f, y)).collect()
    }

    /// `‖ζ(y)‖∞`.
    pub fn image_norm(&self, y: &[Rational]) -> Rational {
        self.apply(y).into_iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremGeneralCheck {
    pub r: usize,
    pub facet_count: usize,
    pub facet_count_ok: bool,
    pub isometric_on_witnesses: bool,
    pub samples: usize,
    pub isometric_on_samples: bool,
    /// Each facet witness is normed by exactly its own row of `ζ`, so any
    /// isometric `ℓ∞^m` embedding needs `m ≥ r` coordinates.
    pub distinct_norming_rows: bool,
    /// Outcome of the sufficient coproximinality test when `r = dim Y`.
    pub coproximinal_certified: Option<bool>,
    pub consistent: bool,
}

fn chosen_extension(y: &Subspace, facet: usize) -> usize {
    let space = y.ambient();
    *y.facets().facets[facet]
        .extensions
        .iter()
        .min_by(|&&a, &&b| space.dual_vertex(a).cmp(space.dual_vertex(b)))
        .expect("nonempty extension set")
}

/// Forced vertices, extension uniqueness and the deterministic chosen image.
pub fn selection_report(y: &Subspace) -> Result<SelectionReport> {
    let forced_vertices = coverage(y)?
        .into_iter()
        .filter(|c| c.witness.is_some())
        .map(|c| c.vertex)
        .collect();
    let facets = &y.facets().facets;
    let extension_unique: Vec<bool> = facets.iter().map(|f| f.extensions.len() == 1).collect();
    let minimal_exists = extension_unique.iter().all(|&u| u);
    Ok(SelectionReport {
        forced_vertices,
        facet_pairs: facets.len(),
        extension_unique,
        minimal_exists,
        minimal_image_size: minimal_exists.then_some(2 * facets.len()),
        chosen_image: (0..facets.len()).map(|i| chosen_extension(y, i)).collect(),
    })
}

/// Whether `vertex` is the only norm-preserving extension of the facet
/// functional: the largest weight a convex combination of dual vertices
/// restricting to `g_i` can put off `vertex` is zero.
pub fn extension_is_unique(y: &Subspace, facet: usize, vertex: usize) -> Result<bool> {
    let space = y.ambient();
    let restrictions = &y.facets().restrictions;
    let g = &y.facets().facets[facet].functional;
    let count = space.num_dual_vertices();
    let mut lp = LinearProgram::new(count);
    lp.all_nonnegative();
    lp.equal(vec![Rational::one(); count], Rational::one());
    for (j, target) in g.iter().enumerate() {
        lp.equal(restrictions.iter().map(|r| r[j].clone()).collect(), target.clone());
    }
    lp.maximize((0..count).map(|k| if k == vertex { Rational::zero() } else { Rational::one() }).collect());
    match lp_solve(&lp)? {
        LpOutcome::Optimal { value, .. } => Ok(value.is_zero()),
        other => unreachable!("extension LP is feasible and bounded, got {other:?}"),
    }
}

/// `ζ` built from the chosen extensions.
pub fn embed_linf(y: &Subspace) -> EmbeddingReport {
    let r = y.facets().r();
    let zeta = (0..r).map(|i| y.ambient().dual_vertex(chosen_extension(y, i)).to_vec()).collect();
    EmbeddingReport { zeta, facet_count: 2 * r, isometric_linf_n: r == y.dim() }
}

/// Re-verifies the embedding statements on `Y`: facet count, isometry on all
/// facet witnesses and `samples` seeded points, the `m ≥ r` lower bound, and
/// the coproximinality certificate when `r = dim Y`.
pub fn check_theorem_general(y: &Subspace, samples: usize, seed: u64, limits: &Limits) -> TheoremGeneralCheck {
    let embedding = embed_linf(y);
    let space = y.ambient();
    let r = embedding.r();
    // B_Y has one facet per vertex of the restricted dual ball.
    let facet_count_ok = embedding.facet_count == hull_vertices(&y.facets().restrictions).len() && r >= y.dim();

    let witnesses: Vec<&Vec<Rational>> = y.facets().facets.iter().map(|f| &f.witness_point).collect();
    let isometric_on_witnesses = witnesses.iter().all(|w| embedding.image_norm(w) == space.norm_unchecked(w));

    let mut sampler = RationalSampler::new(seed);
    let isometric_on_samples = (0..samples).all(|_| {
        let point = y.point(&sampler.vector(y.dim()));
        embedding.image_norm(&point) == space.norm_unchecked(&point)
    });

    let distinct_norming_rows = witnesses.iter().enumerate().all(|(i, w)| {
        let norm = space.norm_unchecked(w);
        let norming: Vec<usize> = embedding
            .apply(w)
            .iter()
            .enumerate()
            .filter(|(_, v)| v.abs() == norm)
            .map(|(k, _)| k)
            .collect();
        norming == [i]
    });

    let coproximinal_certified =
        embedding.isometric_linf_n.then(|| matches!(sufficient_selection(y, limits), Some(Some(_))));

    let consistent = facet_count_ok
        && isometric_on_witnesses
        && isometric_on_samples
        && distinct_norming_rows
        && coproximinal_certified != Some(false);
    TheoremGeneralCheck {
        r,
        facet_count: embedding.facet_count,
        facet_count_ok,
        isometric_on_witnesses,
        samples,
        isometric_on_samples,
        distinct_norming_rows,
        coproximinal_certified,
        consistent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::int;
    use crate::space::PolyhedralNormSpace;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn diagonal_of_linf2() {
        let y = Subspace::new(PolyhedralNormSpace::linf(2).unwrap(), vec![v(&[1, 1])]).unwrap();
        let report = selection_report(&y).unwrap();
        assert!(!report.minimal_exists);
        assert!(report.forced_vertices.is_empty());
        assert_eq!(report.minimal_image_size, None);
        let embedding = embed_linf(&y);
        assert_eq!(embedding.r(), 1);
        assert!(embedding.isometric_linf_n);
        assert_eq!(embedding.apply(&v(&[3, 3])), v(&[3]));
        let check = check_theorem_general(&y, 200, 0, &Limits::default());
        assert!(check.consistent);
        assert_eq!(check.coproximinal_certified, Some(true));
    }

    #[test]
    fn l1_line_through_a_sign_vector() {
        let l1 = PolyhedralNormSpace::l1(3).unwrap();
        let y = Subspace::new(l1.clone(), vec![v(&[1, 1, 1])]).unwrap();
        let report = selection_report(&y).unwrap();
        let forced: Vec<_> = report.forced_vertices.iter().map(|&k| l1.dual_vertex(k).to_vec()).collect();
        assert!(forced.contains(&v(&[1, 1, 1])) && forced.contains(&v(&[-1, -1, -1])));
        assert!(report.minimal_exists);
        assert_eq!(report.minimal_image_size, Some(2));
        assert!(extension_is_unique(&y, 0, report.chosen_image[0]).unwrap());
        let embedding = embed_linf(&y);
        assert_eq!(embedding.apply(&v(&[2, 2, 2])), v(&[6]));
    }

    #[test]
    fn non_unique_extension_is_detected() {
        let y = Subspace::new(PolyhedralNormSpace::l1(2).unwrap(), vec![v(&[1, 0])]).unwrap();
        let report = selection_report(&y).unwrap();
        assert!(!extension_is_unique(&y, 0, report.chosen_image[0]).unwrap());
    }

    #[test]
    fn whole_space_forces_every_vertex() {
        let linf = PolyhedralNormSpace::linf(3).unwrap();
        let y = Subspace::new(linf.clone(), vec![v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let report = selection_report(&y).unwrap();
        assert_eq!(report.forced_vertices.len(), linf.num_dual_vertices());
        assert_eq!(report.minimal_image_size, Some(linf.num_dual_vertices()));
    }

    #[test]
    fn random_l1_plane_is_consistent() {
        let y = Subspace::new(PolyhedralNormSpace::l1(3).unwrap(), vec![v(&[1, 2, -1]), v(&[0, 3, 1])]).unwrap();
        let check = check_theorem_general(&y, 300, 5, &Limits::default());
        assert!(check.consistent, "{check:?}");
        assert!(check.r >= 2);
    }
}
