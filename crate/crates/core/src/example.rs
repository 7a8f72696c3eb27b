//! The worked example in `X = ℓ₁³ ⊕∞ ℓ₁³` (functions on a two-point set
//! with values in `ℓ₁³`).
//!
//! `Y` is spanned by eight pairs `(u_i, v_i)` and has dimension 5. Each dual
//! vertex of `X` is `(x*, 0)` or `(0, x*)` with `x*` a sign vector. For
//! `(±x_i*, 0)` the pair `±(u_i, v_i)` has `‖u_i‖ > ‖v_i‖` and
//! `J(u_i) = {x_i*}`; for `(0, ±x_i*)` the pair `±(u_{i+4}, v_{i+4})` has the
//! roles of the blocks exchanged. Hence every dual vertex is exposed by a
//! point of `Y` and `Y` is strongly anti-coproximinal.

use crate::error::Result;
use crate::exactlp::{int, Rational};
use crate::space::{PolyhedralNormSpace, ProductElement};
use crate::subspace::{find_orthogonal_direction, strong_report, Limits, OrthogonalDirection, StrongReport, Subspace};

/// The four sign vectors `x_1*, …, x_4*` up to sign.
pub const SIGN_VECTORS: [[i64; 3]; 4] = [[1, 1, 1], [1, -1, -1], [1, -1, 1], [1, 1, -1]];

/// The spanning pairs `(u_i, v_i)`, `i = 1, …, 8`.
pub const PAIRS: [([i64; 3], [i64; 3]); 8] = [
    ([1, 1, 1], [1, 1, 0]),
    ([1, -1, -1], [0, 0, 1]),
    ([1, -1, 1], [0, 0, 1]),
    ([1, 1, -1], [-1, 1, 0]),
    ([2, 0, 0], [1, 1, 1]),
    ([-2, 0, 0], [1, -1, -1]),
    ([0, 0, 0], [1, -1, 1]),
    ([0, 2, 0], [1, 1, -1]),
];

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

pub fn sum_space() -> PolyhedralNormSpace {
    let l1 = PolyhedralNormSpace::l1(3).expect("ℓ₁³ is valid");
    PolyhedralNormSpace::linf_sum(&[&l1, &l1]).expect("two-block sum is valid")
}

/// The pairs as flattened vectors of `X`.
pub fn spanning_vectors() -> Vec<Vec<Rational>> {
    PAIRS
        .iter()
        .map(|(u, v)| ProductElement::new(vec![ints(u), ints(v)]).flatten())
        .collect()
}

pub fn subspace() -> Subspace {
    Subspace::spanned_by(sum_space(), &spanning_vectors()).expect("pairs span a nonzero subspace")
}

/// The named exposing point of one dual vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedWitness {
    pub vertex: usize,
    /// 1-based index of the pair used.
    pub pair: usize,
    pub negated: bool,
    pub point: Vec<Rational>,
    /// `J_X(point)` is exactly `{vertex}`.
    pub verified: bool,
}

/// For every dual vertex, the pair `±(u_i, v_i)` that exposes it.
pub fn named_witnesses(space: &PolyhedralNormSpace) -> Vec<NamedWitness> {
    let vectors = spanning_vectors();
    let mut out = Vec::new();
    for block in 0..2 {
        for (i, sign_vector) in SIGN_VECTORS.iter().enumerate() {
            for negated in [false, true] {
                let s = if negated { -1 } else { 1 };
                let functional: Vec<i64> = sign_vector.iter().map(|x| s * x).collect();
                let mut blocks = vec![vec![int(0); 3], vec![int(0); 3]];
                blocks[block] = ints(&functional);
                let embedded = ProductElement::new(blocks).flatten();
                let vertex = space
                    .dual_vertices()
                    .iter()
                    .position(|f| *f == embedded)
                    .expect("sign vectors are dual vertices");
                let pair = i + 4 * block;
                let point: Vec<Rational> = vectors[pair].iter().map(|x| x * int(s)).collect();
                let verified = space.support_face(&point).map(|f| f.vertex_indices == [vertex]).unwrap_or(false);
                out.push(NamedWitness { vertex, pair: pair + 1, negated, point, verified });
            }
        }
    }
    out.sort_by_key(|w| w.vertex);
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct WorkedExample {
    pub subspace: Subspace,
    pub strong: StrongReport,
    pub orthogonal_direction: Option<OrthogonalDirection>,
    pub named_witnesses: Vec<NamedWitness>,
}

/// Builds the example and runs both decision procedures on it.
pub fn run(limits: &Limits) -> Result<WorkedExample> {
    let subspace = subspace();
    let strong = strong_report(&subspace, limits)?;
    let orthogonal_direction = find_orthogonal_direction(&subspace, limits)?;
    let named_witnesses = named_witnesses(subspace.ambient());
    Ok(WorkedExample { subspace, strong, orthogonal_direction, named_witnesses })
}
