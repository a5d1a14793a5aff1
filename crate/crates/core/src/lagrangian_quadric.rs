//! Lagrangian subspaces of a decomposed symplectic space versus pairs of dual quadrics,
//! and isotropic reduction.

use num_traits::Zero;

use crate::error::{input, violation, Error, Result};
use crate::matrix::{dot, RatMatrix};
use crate::rat::Rat;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSpace {
    form: RatMatrix,
}

impl SymplecticSpace {
    pub fn new(form: RatMatrix) -> Result<Self> {
        if !form.is_skew() {
            return input("symplectic form must be skew-symmetric");
        }
        if form.rows() % 2 != 0 || form.det().is_zero() {
            return input("symplectic form must be non-degenerate");
        }
        Ok(SymplecticSpace { form })
    }

    /// `k^m ⊕ (k^m)^∨` with `ω(x, y) = <x1, y2> - <y1, x2>`.
    pub fn standard(m: usize) -> Self {
        let mut f = RatMatrix::zeros(2 * m, 2 * m);
        for i in 0..m {
            f[(i, m + i)] = Rat::from_integer(1.into());
            f[(m + i, i)] = Rat::from_integer((-1).into());
        }
        SymplecticSpace { form: f }
    }

    pub fn dim(&self) -> usize {
        self.form.rows()
    }

    pub fn form(&self) -> &RatMatrix {
        &self.form
    }

    pub fn omega(&self, x: &[Rat], y: &[Rat]) -> Rat {
        self.form.bilinear(x, y)
    }

    /// `U^⊥` with respect to `ω`.
    pub fn orthogonal(&self, u: &Subspace) -> Subspace {
        u.orthogonal(&self.form)
    }

    pub fn is_lagrangian(&self, a: &Subspace) -> bool {
        a.ambient_dim() == self.dim() && 2 * a.dim() == self.dim() && a.is_isotropic(&self.form)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangianDecomposition {
    pub space: SymplecticSpace,
    pub l1: Subspace,
    pub l2: Subspace,
    // rows: l1 basis then l2 basis, inverted
    split_inv: RatMatrix,
}

impl LagrangianDecomposition {
    pub fn new(space: SymplecticSpace, l1: Subspace, l2: Subspace) -> Result<Self> {
        if !space.is_lagrangian(&l1) || !space.is_lagrangian(&l2) {
            return input("both summands must be Lagrangian");
        }
        let stacked = l1.basis().vstack(l2.basis());
        let split_inv = stacked.inverse().ok_or_else(|| Error::Input("summands must be complementary".into()))?;
        Ok(LagrangianDecomposition { space, l1, l2, split_inv })
    }

    /// `L ⊕ L^∨` with `L` the first `m` coordinates.
    pub fn standard(m: usize) -> Self {
        let first: Vec<usize> = (0..m).collect();
        let second: Vec<usize> = (m..2 * m).collect();
        Self::new(SymplecticSpace::standard(m), Subspace::coordinate(2 * m, &first), Subspace::coordinate(2 * m, &second))
            .expect("standard decomposition")
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Rows: the RREF basis of `l1`, then the `ω`-dual basis of `l2`; maps the standard
    /// decomposition onto this one.
    pub fn frame(&self) -> RatMatrix {
        let f = self.space.form();
        let p = self.l1.basis().mul(f).mul(&self.l2.basis().transpose());
        let c = p.inverse().expect("ω pairs l1 and l2 perfectly").transpose();
        self.l1.basis().vstack(&c.mul(self.l2.basis()))
    }

    pub fn half(&self) -> usize {
        self.l1.dim()
    }

    /// `(pr1 x, pr2 x)`.
    pub fn split(&self, x: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let c = self.split_inv.apply_left(x);
        let m = self.half();
        (self.l1.combine(&c[..m]), self.l2.combine(&c[m..]))
    }

    pub fn pr1(&self, x: &[Rat]) -> Vec<Rat> {
        self.split(x).0
    }

    pub fn pr2(&self, x: &[Rat]) -> Vec<Rat> {
        self.split(x).1
    }
}

/// A quadric in `P(span) ⊂ P(k^ambient)`; the Gram matrix is taken in the RREF basis of the span.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadricOnSubspace {
    span: Subspace,
    gram: RatMatrix,
}

impl QuadricOnSubspace {
    pub fn new(span: Subspace, gram: RatMatrix) -> Result<Self> {
        if gram.rows() != span.dim() || !gram.is_symmetric() {
            return input(format!("gram must be symmetric of size {}", span.dim()));
        }
        Ok(QuadricOnSubspace { span, gram })
    }

    /// Form given on a spanning set; it must descend to the span.
    pub fn from_spanning_set(ambient_dim: usize, rows: &RatMatrix, gram: &RatMatrix) -> Result<Self> {
        let span = Subspace::row_space(rows);
        if span.dim() == 0 {
            return Self::new(Subspace::zero(ambient_dim), RatMatrix::zeros(0, 0));
        }
        let st = rows.transpose();
        let mut c = Vec::with_capacity(span.dim());
        for r in span.basis_vecs() {
            c.push(st.solve(&r).expect("rref row lies in the span"));
        }
        let c = RatMatrix::from_rows(c, rows.rows());
        let g = gram.congruence(&c);
        // descent check: the form must kill every relation among the rows
        let rel = crate::subspace::kernel(&st);
        for k in rel.basis_vecs() {
            if !crate::matrix::is_zero_vec(&gram.apply(&k)) {
                return violation("form does not descend to the span of the given vectors");
            }
        }
        Self::new(span, g)
    }

    pub fn ambient_dim(&self) -> usize {
        self.span.ambient_dim()
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn corank(&self) -> usize {
        self.span.dim() - self.rank()
    }

    /// Kernel of the form, in ambient coordinates.
    pub fn kernel(&self) -> Subspace {
        let k = crate::subspace::kernel(&self.gram);
        let vs: Vec<Vec<Rat>> = k.basis_vecs().iter().map(|c| self.span.combine(c)).collect();
        Subspace::span(&vs, self.ambient_dim())
    }

    /// `q(x, y)` for `x, y` in the span.
    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Result<Rat> {
        let cx = self.span.coords_of(x).ok_or_else(|| Error::Input("point outside the span".into()))?;
        let cy = self.span.coords_of(y).ok_or_else(|| Error::Input("point outside the span".into()))?;
        Ok(self.gram.bilinear(&cx, &cy))
    }

    /// `Q ∩ P(U)`.
    pub fn restrict(&self, u: &Subspace) -> Result<Self> {
        let s = self.span.intersect(u)?;
        let c: Vec<Vec<Rat>> = s.basis_vecs().iter().map(|v| self.span.coords_of(v).unwrap()).collect();
        let c = RatMatrix::from_rows(c, self.span.dim());
        Self::new(s, self.gram.congruence(&c))
    }

    /// Image under the injective map whose rows give the images of the ambient basis.
    pub fn push_forward(&self, embedding: &RatMatrix) -> Result<Self> {
        let rows = if self.span.dim() == 0 {
            RatMatrix::zeros(0, embedding.cols())
        } else {
            self.span.basis().mul(embedding)
        };
        Self::from_spanning_set(embedding.cols(), &rows, &self.gram)
    }
}

/// Gram matrix of `q^A(x, y) = ω(pr1 x, pr2 y)` on the RREF basis of `a`.
pub fn lagrangian_form(dec: &LagrangianDecomposition, a: &Subspace) -> Result<RatMatrix> {
    if !dec.space.is_lagrangian(a) {
        return input("subspace is not Lagrangian");
    }
    let splits: Vec<(Vec<Rat>, Vec<Rat>)> = a.basis_vecs().iter().map(|x| dec.split(x)).collect();
    let k = a.dim();
    let mut g = RatMatrix::zeros(k, k);
    for i in 0..k {
        let f = dec.space.form().apply_left(&splits[i].0);
        for j in 0..k {
            g[(i, j)] = dot(&f, &splits[j].1);
        }
    }
    Ok(g)
}

/// `(Q1^A, Q2^A)`: the form `q^A` pushed to `pr1(A) ⊂ L1` and `pr2(A) ⊂ L2`.
pub fn quadric_pair_from_lagrangian(
    dec: &LagrangianDecomposition,
    a: &Subspace,
) -> Result<(QuadricOnSubspace, QuadricOnSubspace)> {
    let g = lagrangian_form(dec, a)?;
    if !g.is_symmetric() {
        return violation("q^A is not symmetric");
    }
    let n = dec.dim();
    let (p1, p2): (Vec<_>, Vec<_>) = a.basis_vecs().iter().map(|x| dec.split(x)).unzip();
    let q1 = QuadricOnSubspace::from_spanning_set(n, &RatMatrix::from_rows(p1, n), &g)?;
    let q2 = QuadricOnSubspace::from_spanning_set(n, &RatMatrix::from_rows(p2, n), &g)?;
    Ok((q1, q2))
}

/// Projective dual of a quadric on `L1`, living on `L2` through the pairing `ω(L1, L2)`.
pub fn dual_quadric(dec: &LagrangianDecomposition, q: &QuadricOnSubspace) -> Result<QuadricOnSubspace> {
    if !dec.l1.contains_subspace(q.span()) {
        return input("quadric must live on l1");
    }
    let f = dec.space.form();
    let k_perp = dec.l2.intersect(&q.kernel().orthogonal(f))?;
    let w = q.span().basis_vecs();
    let pair_with = |y: &[Rat]| -> Vec<Rat> { w.iter().map(|x| f.bilinear(x, y)).collect() };
    let ys = k_perp.basis_vecs();
    let bs: Vec<Vec<Rat>> = ys.iter().map(|y| pair_with(y)).collect();
    let mut cs = Vec::with_capacity(ys.len());
    for b in &bs {
        cs.push(q.gram().solve(b).ok_or_else(|| Error::Violation("pairing not in the image of q".into()))?);
    }
    let d = ys.len();
    let mut g = RatMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            g[(i, j)] = dot(&cs[i], &bs[j]);
        }
    }
    QuadricOnSubspace::new(k_perp, g)
}

/// The Lagrangian `{x1 + x2 : x1 ∈ W, ω(·, x2) = q(x1, ·) on W}` with `Q1^A = q`.
pub fn lagrangian_from_quadric_in(dec: &LagrangianDecomposition, q: &QuadricOnSubspace) -> Result<Subspace> {
    if q.ambient_dim() != dec.dim() || !dec.l1.contains_subspace(q.span()) {
        return input("quadric must live on l1");
    }
    let f = dec.space.form();
    let w = q.span().basis_vecs();
    let u = dec.l2.basis_vecs();
    let pairing = RatMatrix::from_rows(
        w.iter().map(|x| u.iter().map(|y| f.bilinear(x, y)).collect()).collect(),
        u.len(),
    );
    let mut gens = Vec::new();
    for (k, x1) in w.iter().enumerate() {
        let rhs: Vec<Rat> = (0..w.len()).map(|j| q.gram()[(k, j)].clone()).collect();
        let alpha = pairing.solve(&rhs).ok_or_else(|| Error::Violation("ω does not pair l1 and l2 perfectly".into()))?;
        let x2 = dec.l2.combine(&alpha);
        gens.push(crate::matrix::vec_add(x1, &x2));
    }
    let w_perp = dec.l2.intersect(&q.span().orthogonal(f))?;
    gens.extend(w_perp.basis_vecs());
    Ok(Subspace::span(&gens, dec.dim()))
}

/// Same, for a quadric on `L = k^m` inside the standard `L ⊕ L^∨`.
pub fn lagrangian_from_quadric(q: &QuadricOnSubspace) -> Result<Subspace> {
    let m = q.ambient_dim();
    let dec = LagrangianDecomposition::standard(m);
    let mut emb = RatMatrix::zeros(m, 2 * m);
    for i in 0..m {
        emb[(i, i)] = Rat::from_integer(1.into());
    }
    lagrangian_from_quadric_in(&dec, &q.push_forward(&emb)?)
}

#[derive(Debug, Clone)]
pub struct Reduction {
    /// Reduced space `I^⊥ / I` in coordinates of `embedding`.
    pub dec: LagrangianDecomposition,
    pub a: Subspace,
    pub i: Subspace,
    /// Rows: a complement of `I` in `l1`, then `l̄2 = l2 ∩ I^⊥`, in original coordinates.
    pub embedding: RatMatrix,
    pub l2bar: Subspace,
    /// Columns where `[I; embedding]` is invertible, and that inverse.
    pivots: Vec<usize>,
    inverse: RatMatrix,
}

impl Reduction {
    /// Reduced coordinates of a vector of `I^⊥`.
    pub fn reduce(&self, x: &[Rat]) -> Vec<Rat> {
        let xs: Vec<Rat> = self.pivots.iter().map(|&p| x[p].clone()).collect();
        self.inverse.apply_left(&xs)[self.i.dim()..].to_vec()
    }

    fn reduce_all(&self, s: &Subspace) -> Subspace {
        let vs: Vec<Vec<Rat>> = s.basis_vecs().iter().map(|x| self.reduce(x)).collect();
        Subspace::span(&vs, self.dec.dim())
    }

    /// `((a∩l1)/(a∩i))^⊥` inside the reduced `l2`: the predicted span of the reduced `Q2`.
    pub fn span_formula(&self, dec: &LagrangianDecomposition, a: &Subspace) -> Result<Subspace> {
        let a_l1 = self.reduce_all(&a.intersect(&dec.l1)?);
        self.dec.l2.intersect(&a_l1.orthogonal(self.dec.space.form()))
    }

    /// `(a∩(i⊕l̄2))/(a∩i)` in reduced coordinates: the predicted kernel of the reduced `Q2`.
    pub fn kernel_formula(&self, a: &Subspace) -> Result<Subspace> {
        Ok(self.reduce_all(&a.intersect(&self.i.sum(&self.l2bar)?)?))
    }

    /// `Q2` of the reduced Lagrangian, transported back to original coordinates.
    pub fn q2_in_original(&self) -> Result<QuadricOnSubspace> {
        let (_, q2) = quadric_pair_from_lagrangian(&self.dec, &self.a)?;
        q2.push_forward(&self.embedding)
    }
}

pub fn isotropic_reduce(dec: &LagrangianDecomposition, a: &Subspace, i: &Subspace) -> Result<Reduction> {
    if !dec.l1.contains_subspace(i) {
        return input("isotropic subspace must lie in l1");
    }
    if !dec.space.is_lagrangian(a) {
        return input("subspace is not Lagrangian");
    }
    let n = dec.dim();
    let f = dec.space.form();
    let fi = if i.dim() == 0 { RatMatrix::zeros(n, 0) } else { f.mul(&i.basis().transpose()) };
    let l2bar = dec.l2.killed_by(&fi);
    // complement of i in l1: vectors of l1 vanishing at the pivots of i
    let mut sel = RatMatrix::zeros(n, i.dim());
    for (j, &p) in i.pivots().iter().enumerate() {
        sel[(p, j)] = Rat::from_integer(1.into());
    }
    let comp = dec.l1.killed_by(&sel);
    let r = comp.dim();
    let mut rows = comp.basis_vecs();
    rows.extend(l2bar.basis_vecs());
    let embedding = RatMatrix::from_rows(rows, n);
    let stacked = i.basis().vstack(&embedding);
    let pivots = stacked.rref().pivots;
    let all: Vec<usize> = (0..stacked.rows()).collect();
    let inverse = stacked
        .select(&all, &pivots)
        .inverse()
        .ok_or_else(|| Error::Violation("I, its complement in l1 and l2 ∩ I^⊥ are dependent".into()))?;
    let rf = embedding.mul(f).mul(&embedding.transpose());
    let first: Vec<usize> = (0..r).collect();
    let second: Vec<usize> = (r..2 * r).collect();
    let rdec = LagrangianDecomposition::new(
        SymplecticSpace::new(rf)?,
        Subspace::coordinate(2 * r, &first),
        Subspace::coordinate(2 * r, &second),
    )?;
    let mut red = Reduction { dec: rdec, a: Subspace::zero(2 * r), i: i.clone(), embedding, l2bar, pivots, inverse };
    red.a = red.reduce_all(&a.killed_by(&fi));
    Ok(red)
}

/// `I = L1 ∩ L̄2^⊥` for a chosen `L̄2 ⊆ L2`.
pub fn isotropic_for_l2bar(dec: &LagrangianDecomposition, l2bar: &Subspace) -> Result<Subspace> {
    if !dec.l2.contains_subspace(l2bar) {
        return input("l̄2 must lie in l2");
    }
    dec.l1.intersect(&dec.space.orthogonal(l2bar))
}

/// Symmetry of `q^A`, the kernel formula, duality of `(Q1, Q2)` and the inverse construction,
/// checked for one Lagrangian.
pub fn verify_lagrangian(dec: &LagrangianDecomposition, a: &Subspace) -> Result<()> {
    let g = lagrangian_form(dec, a)?;
    if !g.is_symmetric() {
        return violation("q^A is not symmetric");
    }
    let ker: Vec<Vec<Rat>> = crate::subspace::kernel(&g).basis_vecs().iter().map(|c| a.combine(c)).collect();
    let ker = Subspace::span(&ker, dec.dim());
    if ker != a.intersect(&dec.l1)?.sum(&a.intersect(&dec.l2)?)? {
        return violation("ker q^A differs from (A∩L1) ⊕ (A∩L2)");
    }
    let (q1, q2) = quadric_pair_from_lagrangian(dec, a)?;
    if q1.kernel() != a.intersect(&dec.l1)? || q2.kernel() != a.intersect(&dec.l2)? {
        return violation("kernel of Q_i differs from A ∩ L_i");
    }
    if dual_quadric(dec, &q1)? != q2 {
        return violation("Q2 is not the dual of Q1");
    }
    if lagrangian_from_quadric_in(dec, &q1)? != *a {
        return violation("Lagrangian rebuilt from Q1 differs from A");
    }
    Ok(())
}

/// The quadric-to-Lagrangian construction followed by `Q1` returns `q`.
pub fn verify_quadric(dec: &LagrangianDecomposition, q: &QuadricOnSubspace) -> Result<()> {
    let a = lagrangian_from_quadric_in(dec, q)?;
    if !dec.space.is_lagrangian(&a) {
        return violation("constructed subspace is not Lagrangian");
    }
    let (q1, q2) = quadric_pair_from_lagrangian(dec, &a)?;
    if q1 != *q {
        return violation("Q1 of the constructed Lagrangian differs from q");
    }
    if q2 != dual_quadric(dec, q)? {
        return violation("Q2 of the constructed Lagrangian differs from the dual of q");
    }
    Ok(())
}

/// Reduction by `I = L1 ∩ L̄2^⊥`: `Q2` of the reduced Lagrangian is `Q2^A ∩ P(L̄2)`, with the
/// predicted span and kernel.
pub fn verify_reduction(dec: &LagrangianDecomposition, a: &Subspace, l2bar: &Subspace) -> Result<Reduction> {
    let i = isotropic_for_l2bar(dec, l2bar)?;
    let red = isotropic_reduce(dec, a, &i)?;
    if red.l2bar != *l2bar {
        return violation("L2 ∩ I^⊥ does not recover L̄2");
    }
    if !red.dec.space.is_lagrangian(&red.a) {
        return violation("reduced subspace is not Lagrangian");
    }
    let (_, q2) = quadric_pair_from_lagrangian(&red.dec, &red.a)?;
    if *q2.span() != red.span_formula(dec, a)? || q2.kernel() != red.kernel_formula(a)? {
        return violation("span or kernel of the reduced Q2 differs from the formula");
    }
    let (_, q2a) = quadric_pair_from_lagrangian(dec, a)?;
    if red.q2_in_original()? != q2a.restrict(l2bar)? {
        return violation("reduced Q2 differs from Q2^A restricted to L̄2");
    }
    Ok(red)
}
