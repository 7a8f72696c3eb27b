//! Exact decision procedures for best coapproximation in finite-dimensional
//! real polyhedral normed spaces.
//!
//! A space is described by the vertex set of its dual unit ball, so the norm
//! is `‖x‖ = max_f ⟨f, x⟩`. Everything downstream (support faces,
//! Birkhoff–James orthogonality, facet structure of subspaces, anti- and
//! strong anti-coproximinality, selection maps and `ℓ∞^r` embeddings) is
//! decided with rational arithmetic and an exact simplex solver. No floating
//! point enters any decision.
//!
//! Modules:
//! - [`exactlp`]: rationals, linear algebra, simplex, strict feasibility, hull pruning.
//! - [`space`] and [`orthogonality`]: polyhedral norms, support faces, point-level orthogonality.
//! - [`subspace`]: facet decomposition and subspace-level decision procedures.
//! - [`selection`]: selection-map reports and isometric embeddings into `ℓ∞^r`.
//! - [`example`]: the two-block `ℓ₁³ ⊕∞ ℓ₁³` worked example.

pub mod error;
pub mod example;
pub mod exactlp;
pub mod orthogonality;
pub mod sampling;
pub mod selection;
pub mod space;
pub mod subspace;

pub use error::{Error, Result};
pub use exactlp::Rational;
pub use orthogonality::{bj_orthogonal, eps_orthogonal, Orthogonality};
pub use space::{PolyhedralNormSpace, ProductElement, SupportFace};
pub use subspace::{FacetDecomposition, Limits, Subspace};
