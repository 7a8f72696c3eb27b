//! Polyhedral norms given by the vertices of the dual unit ball.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlp::{dot, hull_vertices, int, is_zero_vector, negate, rank, Rational};

/// Largest `n` accepted by [`PolyhedralNormSpace::l1`] (2^n dual vertices).
pub const MAX_L1_DIM: usize = 10;

/// Coordinate range of one summand in an `ℓ∞`-sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub offset: usize,
    pub dim: usize,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.dim
    }
}

/// A real `n`-dimensional space with `‖x‖ = max_f ⟨f, x⟩` over a finite,
/// symmetric, spanning, irredundant set of dual vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyhedralNormSpace {
    dim: usize,
    dual_vertices: Vec<Vec<Rational>>,
    antipodes: Vec<usize>,
    blocks: Option<Vec<Block>>,
    /// Block index of each dual vertex, for `ℓ∞`-sums.
    vertex_blocks: Option<Vec<usize>>,
}

/// The face `J(x)` of the dual ball, as indices of the dual vertices that
/// attain `‖x‖` at `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportFace {
    pub base_point: Vec<Rational>,
    pub norm_value: Rational,
    pub vertex_indices: Vec<usize>,
}

impl SupportFace {
    pub fn is_singleton(&self) -> bool {
        self.vertex_indices.len() == 1
    }
}

/// An element of an `ℓ∞`-sum, one vector per block.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductElement {
    pub blocks: Vec<Vec<Rational>>,
}

impl ProductElement {
    pub fn new(blocks: Vec<Vec<Rational>>) -> Self {
        Self { blocks }
    }

    pub fn flatten(&self) -> Vec<Rational> {
        self.blocks.iter().flatten().cloned().collect()
    }
}

impl PolyhedralNormSpace {
    /// Builds a space from dual functionals: symmetrizes, prunes to hull
    /// vertices, and rejects sets that do not span the dual space.
    pub fn from_functionals(functionals: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = functionals.first().ok_or(Error::EmptyInput("dual functional list"))?.len();
        if dim == 0 {
            return Err(Error::EmptyInput("zero-dimensional functional"));
        }
        for f in &functionals {
            if f.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: f.len() });
            }
        }
        let mut seen: HashSet<Vec<Rational>> = HashSet::new();
        let mut symmetric = Vec::new();
        for f in functionals {
            if is_zero_vector(&f) {
                continue;
            }
            let neg = negate(&f);
            for g in [f, neg] {
                if seen.insert(g.clone()) {
                    symmetric.push(g);
                }
            }
        }
        if symmetric.is_empty() || rank(&symmetric) < dim {
            return Err(Error::DegenerateNorm { dim });
        }
        let kept = hull_vertices(&symmetric);
        let vertices = kept.into_iter().map(|i| symmetric[i].clone()).collect();
        Ok(Self::from_vertices_unchecked(dim, vertices, None))
    }

    fn from_vertices_unchecked(dim: usize, dual_vertices: Vec<Vec<Rational>>, blocks: Option<(Vec<Block>, Vec<usize>)>) -> Self {
        let antipodes = dual_vertices
            .iter()
            .map(|f| {
                let neg = negate(f);
                dual_vertices
                    .iter()
                    .position(|g| *g == neg)
                    .expect("dual vertex set is symmetric")
            })
            .collect();
        let (blocks, vertex_blocks) = match blocks {
            Some((b, vb)) => (Some(b), Some(vb)),
            None => (None, None),
        };
        Self { dim, dual_vertices, antipodes, blocks, vertex_blocks }
    }

    /// `ℓ₁^n`: dual ball is the cube, dual vertices are all sign vectors.
    pub fn l1(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput("dimension"));
        }
        if n > MAX_L1_DIM {
            return Err(Error::SizeCap { what: "l1 dimension", limit: MAX_L1_DIM });
        }
        let vertices = (0..1u32 << n)
            .map(|mask| {
                (0..n)
                    .map(|i| if mask >> (n - 1 - i) & 1 == 0 { int(1) } else { int(-1) })
                    .collect()
            })
            .collect();
        Ok(Self::from_vertices_unchecked(n, vertices, None))
    }

    /// `ℓ∞^n`: dual ball is the cross-polytope `conv{±e_i}`.
    pub fn linf(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput("dimension"));
        }
        let mut vertices = Vec::with_capacity(2 * n);
        for i in 0..n {
            let mut e = vec![Rational::zero(); n];
            e[i] = Rational::one();
            vertices.push(e.clone());
            vertices.push(negate(&e));
        }
        Ok(Self::from_vertices_unchecked(n, vertices, None))
    }

    /// `ℓ∞`-sum of the components. Its dual ball is the `ℓ₁`-sum of the
    /// component dual balls, whose vertices are the block embeddings of the
    /// component dual vertices.
    pub fn linf_sum(components: &[&PolyhedralNormSpace]) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyInput("linf-sum components"));
        }
        let dim: usize = components.iter().map(|c| c.dim).sum();
        let mut blocks = Vec::with_capacity(components.len());
        let mut vertices = Vec::new();
        let mut vertex_blocks = Vec::new();
        let mut offset = 0;
        for (b, comp) in components.iter().enumerate() {
            blocks.push(Block { offset, dim: comp.dim });
            for f in &comp.dual_vertices {
                let mut g = vec![Rational::zero(); dim];
                g[offset..offset + comp.dim].clone_from_slice(f);
                vertices.push(g);
                vertex_blocks.push(b);
            }
            offset += comp.dim;
        }
        Ok(Self::from_vertices_unchecked(dim, vertices, Some((blocks, vertex_blocks))))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dual_vertices(&self) -> &[Vec<Rational>] {
        &self.dual_vertices
    }

    pub fn dual_vertex(&self, k: usize) -> &[Rational] {
        &self.dual_vertices[k]
    }

    pub fn num_dual_vertices(&self) -> usize {
        self.dual_vertices.len()
    }

    /// Index of `-f_k`.
    pub fn antipode(&self, k: usize) -> usize {
        self.antipodes[k]
    }

    /// One dual vertex from each antipodal pair (the lexicographically positive one).
    pub fn pair_representatives(&self) -> Vec<usize> {
        (0..self.dual_vertices.len())
            .filter(|&k| crate::exactlp::lex_positive(&self.dual_vertices[k]))
            .collect()
    }

    pub fn blocks(&self) -> Option<&[Block]> {
        self.blocks.as_deref()
    }

    /// Block that dual vertex `k` lives in, for `ℓ∞`-sums.
    pub fn vertex_block(&self, k: usize) -> Option<usize> {
        self.vertex_blocks.as_ref().map(|vb| vb[k])
    }

    pub fn check_dim(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        Ok(())
    }

    /// Values `⟨f_k, x⟩` for every dual vertex.
    pub fn dual_values(&self, x: &[Rational]) -> Vec<Rational> {
        self.dual_vertices.iter().map(|f| dot(f, x)).collect()
    }

    pub fn norm(&self, x: &[Rational]) -> Result<Rational> {
        self.check_dim(x)?;
        Ok(self.norm_unchecked(x))
    }

    pub(crate) fn norm_unchecked(&self, x: &[Rational]) -> Rational {
        self.dual_vertices
            .iter()
            .map(|f| dot(f, x))
            .max()
            .expect("at least one dual vertex")
    }

    pub fn support_face(&self, x: &[Rational]) -> Result<SupportFace> {
        self.check_dim(x)?;
        if is_zero_vector(x) {
            return Err(Error::ZeroVector);
        }
        let values = self.dual_values(x);
        let norm_value = values.iter().max().expect("at least one dual vertex").clone();
        let vertex_indices = values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == norm_value)
            .map(|(k, _)| k)
            .collect();
        Ok(SupportFace { base_point: x.to_vec(), norm_value, vertex_indices })
    }

    /// Splits a flat vector into per-block pieces.
    pub fn split(&self, x: &[Rational]) -> Result<ProductElement> {
        let blocks = self.blocks.as_ref().ok_or(Error::NotASum)?;
        self.check_dim(x)?;
        Ok(ProductElement::new(blocks.iter().map(|b| x[b.range()].to_vec()).collect()))
    }

    /// Block norms `‖f(k)‖` of an element of an `ℓ∞`-sum.
    pub fn block_norms(&self, f: &ProductElement) -> Result<Vec<Rational>> {
        let blocks = self.blocks.as_ref().ok_or(Error::NotASum)?;
        let vertex_blocks = self.vertex_blocks.as_ref().ok_or(Error::NotASum)?;
        if f.blocks.len() != blocks.len() {
            return Err(Error::DimensionMismatch { expected: blocks.len(), found: f.blocks.len() });
        }
        for (piece, block) in f.blocks.iter().zip(blocks) {
            if piece.len() != block.dim {
                return Err(Error::DimensionMismatch { expected: block.dim, found: piece.len() });
            }
        }
        let mut norms = vec![None::<Rational>; blocks.len()];
        for (k, g) in self.dual_vertices.iter().enumerate() {
            let b = vertex_blocks[k];
            let value = dot(&g[blocks[b].range()], &f.blocks[b]);
            let slot = &mut norms[b];
            if slot.as_ref().is_none_or(|cur| value > *cur) {
                *slot = Some(value);
            }
        }
        Ok(norms.into_iter().map(|n| n.expect("every block has dual vertices")).collect())
    }

    /// The norm-attainment set `M_f`: blocks whose norm equals `‖f‖`.
    pub fn norm_attainment(&self, f: &ProductElement) -> Result<Vec<usize>> {
        let norms = self.block_norms(f)?;
        let top = norms.iter().max().expect("nonempty").clone();
        if top.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(norms.iter().enumerate().filter(|(_, n)| **n == top).map(|(k, _)| k).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn coordinate_functionals_give_linf() {
        let space = PolyhedralNormSpace::from_functionals(vec![v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(space.num_dual_vertices(), 4);
        assert_eq!(space.norm(&v(&[1, -2])).unwrap(), int(2));
        let linf = PolyhedralNormSpace::linf(2).unwrap();
        let a: HashSet<_> = space.dual_vertices().iter().cloned().collect();
        let b: HashSet<_> = linf.dual_vertices().iter().cloned().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn sign_vectors_give_l1() {
        let signs = PolyhedralNormSpace::l1(3).unwrap().dual_vertices().to_vec();
        assert_eq!(signs.len(), 8);
        let space = PolyhedralNormSpace::from_functionals(signs).unwrap();
        assert_eq!(space.num_dual_vertices(), 8);
        assert_eq!(space.norm(&v(&[1, 1, 1])).unwrap(), int(3));
        assert_eq!(space.norm(&v(&[1, -2, 0])).unwrap(), int(3));
    }

    #[test]
    fn non_spanning_set_is_degenerate() {
        let err = PolyhedralNormSpace::from_functionals(vec![v(&[1, 0]), v(&[1, 0])]).unwrap_err();
        assert_eq!(err, Error::DegenerateNorm { dim: 2 });
    }

    #[test]
    fn interior_functionals_are_pruned() {
        let space =
            PolyhedralNormSpace::from_functionals(vec![v(&[1, 0]), v(&[0, 1]), vec![rat(1, 3), rat(1, 3)]]).unwrap();
        assert_eq!(space.num_dual_vertices(), 4);
    }

    #[test]
    fn l1_dimension_is_capped() {
        assert!(PolyhedralNormSpace::l1(10).is_ok());
        assert_eq!(
            PolyhedralNormSpace::l1(11).unwrap_err(),
            Error::SizeCap { what: "l1 dimension", limit: MAX_L1_DIM }
        );
    }

    #[test]
    fn one_dimensional_spaces_coincide() {
        let a = PolyhedralNormSpace::l1(1).unwrap();
        let b = PolyhedralNormSpace::linf(1).unwrap();
        let a: HashSet<_> = a.dual_vertices().iter().cloned().collect();
        let b: HashSet<_> = b.dual_vertices().iter().cloned().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn two_block_l1_sum() {
        let l1 = PolyhedralNormSpace::l1(3).unwrap();
        let sum = PolyhedralNormSpace::linf_sum(&[&l1, &l1]).unwrap();
        assert_eq!(sum.dim(), 6);
        assert_eq!(sum.num_dual_vertices(), 16);
        assert_eq!(sum.blocks().unwrap().len(), 2);
        // max(‖(2,0,0)‖₁, ‖(1,1,1)‖₁) = 3
        assert_eq!(sum.norm(&v(&[2, 0, 0, 1, 1, 1])).unwrap(), int(3));
    }

    #[test]
    fn single_block_sum_keeps_the_norm() {
        let linf = PolyhedralNormSpace::linf(2).unwrap();
        let sum = PolyhedralNormSpace::linf_sum(&[&linf]).unwrap();
        for x in [v(&[1, -2]), v(&[3, 3]), v(&[0, -1])] {
            assert_eq!(sum.norm(&x).unwrap(), linf.norm(&x).unwrap());
        }
        let f = sum.split(&v(&[5, 1])).unwrap();
        assert_eq!(sum.norm_attainment(&f).unwrap(), vec![0]);
    }

    #[test]
    fn support_faces() {
        let l1 = PolyhedralNormSpace::l1(3).unwrap();
        let face = l1.support_face(&v(&[1, 1, 1])).unwrap();
        assert_eq!(face.norm_value, int(3));
        assert_eq!(face.vertex_indices.len(), 1);
        assert_eq!(l1.dual_vertex(face.vertex_indices[0]), v(&[1, 1, 1]).as_slice());

        let linf = PolyhedralNormSpace::linf(2).unwrap();
        let diag: Vec<_> = linf
            .support_face(&v(&[1, 1]))
            .unwrap()
            .vertex_indices
            .iter()
            .map(|&k| linf.dual_vertex(k).to_vec())
            .collect();
        assert_eq!(diag, vec![v(&[1, 0]), v(&[0, 1])]);
        let axis = linf.support_face(&v(&[1, 0])).unwrap();
        assert_eq!(axis.vertex_indices.len(), 1);
        assert_eq!(linf.dual_vertex(axis.vertex_indices[0]), v(&[1, 0]).as_slice());
        assert_eq!(linf.support_face(&v(&[0, 0])).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn attainment_sets() {
        let l1 = PolyhedralNormSpace::l1(3).unwrap();
        let sum = PolyhedralNormSpace::linf_sum(&[&l1, &l1]).unwrap();
        let f = ProductElement::new(vec![v(&[2, 0, 0]), v(&[1, 1, 1])]);
        assert_eq!(sum.norm_attainment(&f).unwrap(), vec![1]);
        let g = ProductElement::new(vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        assert_eq!(sum.norm_attainment(&g).unwrap(), vec![0, 1]);
        let zero = ProductElement::new(vec![v(&[0, 0, 0]), v(&[0, 0, 0])]);
        assert_eq!(sum.norm_attainment(&zero).unwrap_err(), Error::ZeroVector);
        assert_eq!(l1.norm_attainment(&f).unwrap_err(), Error::NotASum);
    }

    #[test]
    fn dimension_mismatch() {
        let l1 = PolyhedralNormSpace::l1(2).unwrap();
        assert_eq!(l1.norm(&v(&[1])).unwrap_err(), Error::DimensionMismatch { expected: 2, found: 1 });
    }
}
