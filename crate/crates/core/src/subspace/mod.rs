//! Subspaces of a polyhedral space and the decision procedures built on their
//! facet structure.
//!
//! The induced ball `B_Y` is polyhedral: its dual ball is the restriction of
//! `B_{X*}` to `Y`, i.e. the convex hull of the restricted dual vertices. Each
//! antipodal pair `±g_i` of vertices of that hull is a facet pair of `B_Y`,
//! and the ambient dual vertices restricting to `g_i` (the set `V_i`) span
//! exactly the face of norm-preserving extensions of `g_i`. On the interior
//! of the facet of `g_i`, `J_X(y) = conv(V_i)`; on lower-dimensional faces the
//! support face only grows. Every subspace-level question therefore reduces
//! to a finite condition per facet.

mod anti;
mod coapprox;
mod orthogonality;
mod probe;
mod strong;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exactlp::{
    dot, hull_vertices, independent_subset, is_zero_vector, lex_positive, rank, strict_feasible, ConditionKind,
    LinearCondition, Rational,
};
use crate::space::PolyhedralNormSpace;

pub use anti::{find_orthogonal_direction, OrthogonalDirection};
pub use coapprox::{best_coapproximation, CoapproxSolution};
pub use orthogonality::{rho, subspace_bj_orthogonal, subspace_eps_orthogonal, FacetBracket, SubspaceOrthogonality};
pub use probe::{coproximinal_probe, sufficient_selection, ProbeReport, ProbeStatus};
pub use strong::{coverage, epsilon_threshold, strong_report, CoverageEntry, CoverageWitness, StrongReport, Threshold};

/// Exact threshold search is attempted only up to this ambient dimension.
pub const THRESHOLD_MAX_DIM: usize = 6;
/// Exact threshold search is attempted only up to this many dual vertices.
pub const THRESHOLD_MAX_VERTICES: usize = 64;

/// Work caps for the enumerating procedures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum pattern solves in direction searches and selection enumeration.
    pub max_patterns: u64,
    /// Maximum LP nodes in the exact threshold search before falling back to sampling.
    pub max_threshold_nodes: u64,
    /// Directions sampled when the threshold falls back.
    pub fallback_samples: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_patterns: 1_000_000, max_threshold_nodes: 50_000, fallback_samples: 256 }
    }
}

/// One facet pair `±F_i` of `B_Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Facet {
    /// `g_i` in subspace coordinates (acts on basis coefficients).
    pub functional: Vec<Rational>,
    /// Ambient dual vertices `f` with `f ∘ basis = g_i`.
    pub extensions: Vec<usize>,
    /// Coefficients `c` with `J_Y(Σ c_j b_j) = {g_i}` and `g_i(c) = 1`.
    pub witness: Vec<Rational>,
    /// The witness as an ambient vector.
    pub witness_point: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FacetDecomposition {
    pub facets: Vec<Facet>,
    /// Restriction of every ambient dual vertex to subspace coordinates.
    pub restrictions: Vec<Vec<Rational>>,
}

impl FacetDecomposition {
    /// Number of facet pairs `r`; `B_Y` has `2r` facets.
    pub fn r(&self) -> usize {
        self.facets.len()
    }

    /// All vertices `±g_i` of the restricted dual ball.
    pub fn signed_functionals(&self) -> impl Iterator<Item = Vec<Rational>> + '_ {
        self.facets
            .iter()
            .flat_map(|f| [f.functional.clone(), f.functional.iter().map(|x| -x).collect()])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    ambient: PolyhedralNormSpace,
    basis: Vec<Vec<Rational>>,
    facets: FacetDecomposition,
}

impl Subspace {
    /// Subspace with the given linearly independent basis.
    pub fn new(ambient: PolyhedralNormSpace, basis: Vec<Vec<Rational>>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::EmptyInput("subspace basis"));
        }
        for b in &basis {
            ambient.check_dim(b)?;
        }
        if rank(&basis) < basis.len() {
            return Err(Error::LinearlyDependent);
        }
        let facets = decompose(&ambient, &basis);
        Ok(Self { ambient, basis, facets })
    }

    /// Subspace spanned by `vectors`, keeping a greedy independent subset as basis.
    pub fn spanned_by(ambient: PolyhedralNormSpace, vectors: &[Vec<Rational>]) -> Result<Self> {
        for v in vectors {
            ambient.check_dim(v)?;
        }
        let keep = independent_subset(vectors);
        if keep.is_empty() {
            return Err(Error::EmptyInput("nonzero spanning vectors"));
        }
        let basis = keep.into_iter().map(|i| vectors[i].clone()).collect();
        Self::new(ambient, basis)
    }

    pub fn ambient(&self) -> &PolyhedralNormSpace {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn facets(&self) -> &FacetDecomposition {
        &self.facets
    }

    pub fn is_proper(&self) -> bool {
        self.dim() < self.ambient.dim()
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::ImproperSubspace { dim: self.dim() })
        }
    }

    /// `Σ c_j b_j`.
    pub fn point(&self, coefficients: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::from_integer(0.into()); self.ambient.dim()];
        for (c, b) in coefficients.iter().zip(&self.basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += c * x;
            }
        }
        out
    }

    /// `f ∘ basis`.
    pub fn restrict(&self, f: &[Rational]) -> Vec<Rational> {
        self.basis.iter().map(|b| dot(f, b)).collect()
    }

    /// Whether `x` lies in the subspace.
    pub fn contains(&self, x: &[Rational]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(x.to_vec());
        rank(&rows) == self.dim()
    }

    /// The norm of `Σ c_j b_j`, computed through the facet functionals:
    /// `max_i |g_i(c)|`.
    pub fn induced_norm(&self, coefficients: &[Rational]) -> Rational {
        self.facets
            .facets
            .iter()
            .map(|f| {
                let v = dot(&f.functional, coefficients);
                if v < Rational::from_integer(0.into()) {
                    -v
                } else {
                    v
                }
            })
            .max()
            .expect("at least one facet")
    }
}

fn decompose(ambient: &PolyhedralNormSpace, basis: &[Vec<Rational>]) -> FacetDecomposition {
    let restrictions: Vec<Vec<Rational>> = ambient
        .dual_vertices()
        .iter()
        .map(|f| basis.iter().map(|b| dot(f, b)).collect())
        .collect();
    let hull: Vec<usize> = hull_vertices(&restrictions);
    let hull_points: Vec<&Vec<Rational>> = hull.iter().map(|&i| &restrictions[i]).collect();
    let m = basis.len();

    let facets = hull
        .iter()
        .filter(|&&i| lex_positive(&restrictions[i]))
        .map(|&i| {
            let g = restrictions[i].clone();
            debug_assert!(!is_zero_vector(&g));
            let extensions: Vec<usize> = (0..restrictions.len()).filter(|&k| restrictions[k] == g).collect();
            let mut conditions = vec![LinearCondition::new(g.clone(), ConditionKind::Eq, Rational::one())];
            conditions.extend(
                hull_points
                    .iter()
                    .filter(|h| ***h != g)
                    .map(|h| LinearCondition::new((*h).clone(), ConditionKind::Lt, Rational::one())),
            );
            let witness = strict_feasible(m, &conditions)
                .expect("well-formed witness LP")
                .expect("every vertex of the restricted dual ball exposes a facet")
                .point;
            let mut witness_point = vec![Rational::from_integer(0.into()); ambient.dim()];
            for (c, b) in witness.iter().zip(basis) {
                for (o, x) in witness_point.iter_mut().zip(b) {
                    *o += c * x;
                }
            }
            Facet { functional: g, extensions, witness, witness_point }
        })
        .collect();
    FacetDecomposition { facets, restrictions }
}
