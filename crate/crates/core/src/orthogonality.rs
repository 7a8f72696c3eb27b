//! Point-level Birkhoff–James and ε-orthogonality.
//!
//! `x ⊥_B y` holds iff some functional in `J(x)` vanishes on `y`. Over the
//! reals the values `⟨f, y⟩` on the face `J(x)` fill the interval spanned by
//! the face's vertex values, so the decision reduces to comparing that
//! interval with `0` (or with `[-ε‖y‖, ε‖y‖]`).

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlp::{dot, is_zero_vector, Rational};
use crate::space::{PolyhedralNormSpace, SupportFace};

#[derive(Clone, Debug, PartialEq)]
pub struct Orthogonality {
    pub orthogonal: bool,
    /// A functional in `J(x)` realizing the verdict; `None` when `y = 0` or
    /// the verdict is false.
    pub certificate: Option<Vec<Rational>>,
    pub face: SupportFace,
}

/// Extremes of `values` over `indices`: `(argmin, min, argmax, max)`, first index on ties.
pub(crate) fn value_range(indices: &[usize], values: impl Fn(usize) -> Rational) -> (usize, Rational, usize, Rational) {
    let mut it = indices.iter().copied();
    let first = it.next().expect("nonempty index set");
    let v0 = values(first);
    let (mut lo_i, mut lo, mut hi_i, mut hi) = (first, v0.clone(), first, v0);
    for k in it {
        let v = values(k);
        if v < lo {
            lo = v.clone();
            lo_i = k;
        }
        if v > hi {
            hi = v;
            hi_i = k;
        }
    }
    (lo_i, lo, hi_i, hi)
}

/// The point of the segment `[f_lo, f_hi]` whose value is `target`, given
/// endpoint values `lo ≤ target ≤ hi`.
pub(crate) fn interpolate(f_lo: &[Rational], lo: &Rational, f_hi: &[Rational], hi: &Rational, target: &Rational) -> Vec<Rational> {
    if lo == hi {
        return f_lo.to_vec();
    }
    let weight_lo = (hi - target) / (hi - lo);
    let weight_hi = (target - lo) / (hi - lo);
    f_lo.iter().zip(f_hi).map(|(a, b)| a * &weight_lo + b * &weight_hi).collect()
}

/// Clamps `0` into `[lo, hi]`.
pub(crate) fn closest_to_zero(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_positive() {
        lo.clone()
    } else if hi.is_negative() {
        hi.clone()
    } else {
        Rational::zero()
    }
}

fn decide(space: &PolyhedralNormSpace, x: &[Rational], y: &[Rational], bound: impl Fn(&Rational) -> bool) -> Result<Orthogonality> {
    space.check_dim(y)?;
    let face = space.support_face(x)?;
    if is_zero_vector(y) {
        return Ok(Orthogonality { orthogonal: true, certificate: None, face });
    }
    let (lo_k, lo, hi_k, hi) = value_range(&face.vertex_indices, |k| dot(space.dual_vertex(k), y));
    let target = closest_to_zero(&lo, &hi);
    if !bound(&target) {
        return Ok(Orthogonality { orthogonal: false, certificate: None, face });
    }
    let certificate = interpolate(space.dual_vertex(lo_k), &lo, space.dual_vertex(hi_k), &hi, &target);
    Ok(Orthogonality { orthogonal: true, certificate: Some(certificate), face })
}

/// Decides `x ⊥_B y`. Rejects `x = 0`.
pub fn bj_orthogonal(space: &PolyhedralNormSpace, x: &[Rational], y: &[Rational]) -> Result<Orthogonality> {
    decide(space, x, y, Zero::is_zero)
}

/// Decides `x ⊥_B^ε y` for `0 ≤ ε < 1`: some `f ∈ J(x)` has `|f(y)| ≤ ε‖y‖`.
pub fn eps_orthogonal(space: &PolyhedralNormSpace, x: &[Rational], y: &[Rational], eps: &Rational) -> Result<Orthogonality> {
    check_epsilon(eps)?;
    space.check_dim(y)?;
    let radius = eps * space.norm_unchecked(y);
    decide(space, x, y, |v| v.abs() <= radius)
}

pub(crate) fn check_epsilon(eps: &Rational) -> Result<()> {
    if eps.is_negative() || *eps >= Rational::from_integer(1.into()) {
        return Err(Error::EpsilonOutOfRange);
    }
    Ok(())
}
