//! Linear subspaces of `k^n` stored as RREF row spaces.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::rat::Rat;

/// Row space of an RREF matrix with no zero rows. Equality is equality of subspaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RatMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: RatMatrix::zeros(0, n), pivots: vec![] }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: RatMatrix::identity(n), pivots: (0..n).collect() }
    }

    /// Row space of `m`.
    pub fn row_space(m: &RatMatrix) -> Self {
        let r = m.rref();
        Subspace { ambient_dim: m.cols(), basis: r.matrix, pivots: r.pivots }
    }

    pub fn span(vectors: &[Vec<Rat>], ambient_dim: usize) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length must match ambient dimension");
        }
        Self::row_space(&RatMatrix::from_rows(vectors.to_vec(), ambient_dim))
    }

    /// Spanned by standard basis vectors.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vec<Rat>> = indices.iter().map(|&i| crate::matrix::unit_vec(n, i)).collect();
        Self::span(&vs, n)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim - self.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is not in the subspace.
    pub fn coords_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.ambient_dim);
        let c: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.basis.apply_left(&c);
        (back.as_slice() == v).then_some(c)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords_of(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vecs().iter().all(|v| self.contains(v))
    }

    /// Vector with coordinates `c` in the RREF basis.
    pub fn combine(&self, c: &[Rat]) -> Vec<Rat> {
        self.basis.apply_left(c)
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::Dimension(format!(
                "ambient dimensions differ: {} vs {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        let ann = other.annihilator();
        if ann.dim() == 0 {
            return Ok(self.clone());
        }
        Ok(self.killed_by(&ann.basis().transpose()))
    }

    /// `{x ∈ self : x^T M = 0}` for an `ambient_dim × k` matrix `M`.
    pub fn killed_by(&self, m: &RatMatrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient_dim);
        if self.dim() == 0 || m.cols() == 0 {
            return self.clone();
        }
        let c = kernel(&self.basis.mul(m).transpose());
        if c.dim() == 0 {
            return Self::zero(self.ambient_dim);
        }
        Self::row_space(&c.basis.mul(&self.basis))
    }

    /// `{f : f(v) = 0 for all v}` in dual coordinates.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis)
    }

    /// `{x : x^T F y = 0 for all y in self}`.
    pub fn orthogonal(&self, form: &RatMatrix) -> Subspace {
        kernel(&self.basis.mul(&form.transpose()))
    }

    pub fn is_isotropic(&self, form: &RatMatrix) -> bool {
        self.basis.mul(form).mul(&self.basis.transpose()).is_zero()
    }

    /// Image under `v -> M v`.
    pub fn map(&self, m: &RatMatrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        let mut img = self.basis.mul(&m.transpose());
        if self.dim() == 0 {
            img = RatMatrix::zeros(0, m.rows());
        }
        Self::row_space(&img)
    }

    /// Complement spanned by the standard vectors at the non-pivot columns.
    pub fn standard_complement(&self) -> Subspace {
        let free: Vec<usize> = (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect();
        Self::coordinate(self.ambient_dim, &free)
    }

    /// Projection of `v` onto `self` along `complement`, assuming a direct sum.
    pub fn project_along(&self, complement: &Subspace, v: &[Rat]) -> Vec<Rat> {
        let stacked = self.basis.vstack(&complement.basis);
        let c = stacked.solve_left(v).expect("not a direct sum decomposition");
        self.basis.apply_left(&c[..self.dim()])
    }
}

/// `{x : M x = 0}`.
pub fn kernel(m: &RatMatrix) -> Subspace {
    let n = m.cols();
    let r = m.rref();
    let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
    let mut vecs = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rat::zero(); n];
        v[f] = num_traits::One::one();
        for (i, &p) in r.pivots.iter().enumerate() {
            v[p] = -r.matrix[(i, f)].clone();
        }
        vecs.push(v);
    }
    Subspace::span(&vecs, n)
}

/// Column space of `m`.
pub fn image(m: &RatMatrix) -> Subspace {
    Subspace::row_space(&m.transpose())
}

pub fn annihilator(a: &Subspace) -> Subspace {
    a.annihilator()
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient_dim, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_i64;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn sp(vs: &[&[i64]], n: usize) -> Subspace {
        Subspace::span(&vs.iter().map(|v| vec_i64(v)).collect::<Vec<_>>(), n)
    }

    #[test]
    fn intersect_examples() {
        let a = sp(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let b = sp(&[&[0, 1, 0], &[0, 0, 1]], 3);
        assert_eq!(a.intersect(&b).unwrap(), sp(&[&[0, 1, 0]], 3));
        assert_eq!(a.intersect(&a).unwrap(), a);
        let e1 = sp(&[&[1, 0]], 2);
        let e2 = sp(&[&[0, 1]], 2);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert!(a.intersect(&e1).is_err());
    }

    #[test]
    fn kernel_image_annihilator_examples() {
        assert_eq!(kernel(&RatMatrix::zeros(2, 2)), Subspace::full(2));
        assert_eq!(sp(&[&[1, 0, 0]], 3).annihilator(), sp(&[&[0, 1, 0], &[0, 0, 1]], 3));
        assert_eq!(image(&RatMatrix::from_i64(&[&[1, 0], &[1, 0]])), sp(&[&[1, 1]], 2));
    }

    #[test]
    fn coords_round_trip() {
        let a = sp(&[&[1, 2, 3], &[0, 1, 1]], 3);
        let v = vec_i64(&[2, 7, 9]);
        let c = a.coords_of(&v).unwrap();
        assert_eq!(a.combine(&c), v);
        assert!(a.coords_of(&vec_i64(&[0, 0, 1])).is_none());
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
        proptest::collection::vec(-2i64..=2, rows * cols)
            .prop_map(move |v| RatMatrix::from_vec(rows, cols, v.into_iter().map(rat).collect()))
    }

    fn invertible(n: usize) -> impl Strategy<Value = RatMatrix> {
        small_matrix(n, n).prop_filter("invertible", |m| !m.det().is_zero())
    }

    proptest! {
        #[test]
        fn rref_is_canonical(m in small_matrix(4, 6), p in invertible(4)) {
            prop_assert_eq!(p.mul(&m).rref().matrix, m.rref().matrix);
        }

        #[test]
        fn grassmann_formula(a in small_matrix(3, 5), b in small_matrix(3, 5)) {
            let (a, b) = (Subspace::row_space(&a), Subspace::row_space(&b));
            let s = a.sum(&b).unwrap();
            let i = a.intersect(&b).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(s.contains_subspace(&a) && a.contains_subspace(&i) && b.contains_subspace(&i));
        }

        #[test]
        fn annihilator_reverses_inclusion(a in small_matrix(2, 5), b in small_matrix(2, 5)) {
            let a = Subspace::row_space(&a);
            let ab = a.sum(&Subspace::row_space(&b)).unwrap();
            prop_assert_eq!(a.annihilator().annihilator(), a.clone());
            prop_assert!(a.annihilator().contains_subspace(&ab.annihilator()));
            prop_assert_eq!(a.annihilator().dim(), a.codim());
        }

        #[test]
        fn kernel_is_kernel(m in small_matrix(3, 5)) {
            let k = kernel(&m);
            prop_assert_eq!(k.dim() + m.rank(), 5);
            for v in k.basis_vecs() {
                prop_assert!(crate::matrix::is_zero_vec(&m.apply(&v)));
            }
        }
    }
}
