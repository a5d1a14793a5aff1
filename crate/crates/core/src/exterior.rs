//! Exterior powers of `V6 = k^6` and `V5 = span(e1..e5)` in lexicographic monomial bases.
//!
//! Indices are 0-based in code; `e(&[1, 2, 6])` style constructors take the 1-based labels
//! used in formulas. `lambda` is the coordinate functional dual to `e6`.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{input, Error, Result};
use crate::matrix::RatMatrix;
use crate::rat::Rat;
use crate::subspace::{kernel, Subspace};

pub const MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorBasis {
    pub ambient_dim: usize,
    pub degree: usize,
    masks: Vec<u8>,
    index: [usize; 64],
}

impl ExteriorBasis {
    fn build(n: usize, p: usize) -> Self {
        let mut masks: Vec<u8> = (0u8..(1 << n)).filter(|m| m.count_ones() as usize == p).collect();
        // lexicographic order of the sorted index tuples
        masks.sort_by_key(|&m| indices_of(m));
        let mut index = [usize::MAX; 64];
        for (i, &m) in masks.iter().enumerate() {
            index[m as usize] = i;
        }
        ExteriorBasis { ambient_dim: n, degree: p, masks, index }
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn mask(&self, i: usize) -> u8 {
        self.masks[i]
    }

    pub fn index_of(&self, mask: u8) -> usize {
        self.index[mask as usize]
    }

    /// 0-based index tuple of the `i`-th monomial.
    pub fn monomial(&self, i: usize) -> Vec<usize> {
        indices_of(self.masks[i])
    }

    /// Label such as `"126"` (1-based).
    pub fn label(&self, i: usize) -> String {
        self.monomial(i).iter().map(|j| char::from(b'1' + *j as u8)).collect()
    }
}

fn indices_of(mask: u8) -> Vec<usize> {
    (0..8).filter(|j| mask >> j & 1 == 1).collect()
}

pub fn basis(n: usize, p: usize) -> &'static ExteriorBasis {
    static CACHE: OnceLock<Vec<Vec<ExteriorBasis>>> = OnceLock::new();
    assert!(n <= MAX_N && p <= n, "exterior power Λ^{p} of k^{n} is not supported");
    let all = CACHE.get_or_init(|| {
        (0..=MAX_N).map(|n| (0..=n).map(|p| ExteriorBasis::build(n, p)).collect()).collect()
    });
    &all[n][p]
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Sign of `e_I ∧ e_J` relative to `e_{I∪J}` for disjoint masks.
fn wedge_sign(i: u8, j: u8) -> bool {
    let mut inversions = 0;
    for b in 0..8 {
        if j >> b & 1 == 1 {
            inversions += (i >> (b + 1)).count_ones();
        }
    }
    inversions % 2 == 1
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiVector {
    pub ambient_dim: usize,
    pub degree: usize,
    pub coords: Vec<Rat>,
}

impl MultiVector {
    pub fn new(ambient_dim: usize, degree: usize, coords: Vec<Rat>) -> Result<Self> {
        if ambient_dim > MAX_N || degree > ambient_dim {
            return input(format!("unsupported exterior power Λ^{degree} of k^{ambient_dim}"));
        }
        if coords.len() != binom(ambient_dim, degree) {
            return Err(Error::Dimension(format!(
                "Λ^{degree} of k^{ambient_dim} needs {} coordinates, got {}",
                binom(ambient_dim, degree),
                coords.len()
            )));
        }
        Ok(MultiVector { ambient_dim, degree, coords })
    }

    pub fn zero(ambient_dim: usize, degree: usize) -> Self {
        MultiVector { ambient_dim, degree, coords: vec![Rat::zero(); binom(ambient_dim, degree)] }
    }

    /// Monomial `e_{i1...ip}` from 1-based labels in any order, with the permutation sign.
    pub fn e(ambient_dim: usize, labels: &[usize]) -> Self {
        let mut v = MultiVector::zero(ambient_dim, 0);
        v.coords[0] = Rat::one();
        for &l in labels {
            assert!((1..=ambient_dim).contains(&l), "label {l} out of range");
            v = v.wedge(&Self::vector(&crate::matrix::unit_vec(ambient_dim, l - 1))).unwrap();
        }
        v
    }

    pub fn vector(v: &[Rat]) -> Self {
        MultiVector { ambient_dim: v.len(), degree: 1, coords: v.to_vec() }
    }

    pub fn basis(&self) -> &'static ExteriorBasis {
        basis(self.ambient_dim, self.degree)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &MultiVector) -> MultiVector {
        assert_eq!((self.ambient_dim, self.degree), (o.ambient_dim, o.degree));
        MultiVector { coords: crate::matrix::vec_add(&self.coords, &o.coords), ..self.clone() }
    }

    pub fn scale(&self, s: &Rat) -> MultiVector {
        MultiVector { coords: crate::matrix::vec_scale(&self.coords, s), ..self.clone() }
    }

    pub fn wedge(&self, o: &MultiVector) -> Result<MultiVector> {
        if self.ambient_dim != o.ambient_dim {
            return Err(Error::Dimension("wedge of different ambients".into()));
        }
        let n = self.ambient_dim;
        let d = self.degree + o.degree;
        if d > n {
            return input(format!("degree {d} exceeds ambient dimension {n}"));
        }
        Ok(MultiVector { ambient_dim: n, degree: d, coords: wedge_coords(n, self.degree, &self.coords, o.degree, &o.coords) })
    }

    /// `Λ^p V5 -> Λ^p V6`.
    pub fn include_v5(&self) -> MultiVector {
        assert_eq!(self.ambient_dim, 5);
        let src = basis(5, self.degree);
        let dst = basis(6, self.degree);
        let mut out = MultiVector::zero(6, self.degree);
        for (i, c) in self.coords.iter().enumerate() {
            out.coords[dst.index_of(src.mask(i))] = c.clone();
        }
        out
    }

    /// Restriction of a vector of `Λ^p V6` lying in `Λ^p V5`.
    pub fn restrict_v5(&self) -> Result<MultiVector> {
        assert_eq!(self.ambient_dim, 6);
        let src = basis(6, self.degree);
        let dst = basis(5, self.degree);
        let mut out = MultiVector::zero(5, self.degree);
        for (i, c) in self.coords.iter().enumerate() {
            let m = src.mask(i);
            if m & 0b10_0000 != 0 {
                if !c.is_zero() {
                    return input("multivector does not lie in Λ^p V5");
                }
                continue;
            }
            out.coords[dst.index_of(m)] = c.clone();
        }
        Ok(out)
    }
}

impl std::fmt::Debug for MultiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let b = self.basis();
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}*e{}", crate::rat::format_rat(c), b.label(i)))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

pub fn wedge_coords(n: usize, p: usize, a: &[Rat], q: usize, b: &[Rat]) -> Vec<Rat> {
    let (ba, bb, bc) = (basis(n, p), basis(n, q), basis(n, p + q));
    let mut out = vec![Rat::zero(); bc.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let mi = ba.mask(i);
        for (j, y) in b.iter().enumerate() {
            let mj = bb.mask(j);
            if y.is_zero() || mi & mj != 0 {
                continue;
            }
            let t = x * y;
            let k = bc.index_of(mi | mj);
            if wedge_sign(mi, mj) {
                out[k] -= t;
            } else {
                out[k] += t;
            }
        }
    }
    out
}

/// Matrix of `x -> x ∧ a` from `Λ^q` to `Λ^{q+p}`.
pub fn right_wedge_matrix(a: &MultiVector, q: usize) -> RatMatrix {
    let n = a.ambient_dim;
    let src = basis(n, q);
    let dst = basis(n, q + a.degree);
    let mut m = RatMatrix::zeros(dst.len(), src.len());
    for j in 0..src.len() {
        let col = wedge_coords(n, q, &crate::matrix::unit_vec(src.len(), j), a.degree, &a.coords);
        for (i, c) in col.into_iter().enumerate() {
            m[(i, j)] = c;
        }
    }
    m
}

/// Matrix of `λ_p : Λ^p V6 -> Λ^{p-1} V5`, first-slot contraction against `e6^*`.
pub fn lambda_matrix(p: usize) -> RatMatrix {
    assert!((1..=6).contains(&p), "λ_p needs 1 <= p <= 6");
    let src = basis(6, p);
    let dst = basis(5, p - 1);
    let mut m = RatMatrix::zeros(dst.len(), src.len());
    for j in 0..src.len() {
        let mask = src.mask(j);
        if mask & 0b10_0000 == 0 {
            continue;
        }
        // e6 is the last factor, so it sits in slot p
        let sign = if (p - 1) % 2 == 0 { Rat::one() } else { -Rat::one() };
        m[(dst.index_of(mask & 0b01_1111), j)] = sign;
    }
    m
}

pub fn lambda_p(xi: &MultiVector) -> Result<MultiVector> {
    if xi.ambient_dim != 6 || xi.degree == 0 {
        return input("λ_p acts on Λ^p V6 with p >= 1");
    }
    let c = lambda_matrix(xi.degree).apply(&xi.coords);
    MultiVector::new(5, xi.degree - 1, c)
}

/// Coefficient of `e12345`.
pub fn epsilon5(x: &MultiVector) -> Rat {
    assert_eq!((x.ambient_dim, x.degree), (5, 5));
    x.coords[0].clone()
}

/// Gram matrix of `(ξ, η) -> coefficient of e123456 in ξ∧η` on `Λ^3 V6`.
pub fn l3v6_gram() -> &'static RatMatrix {
    static G: OnceLock<RatMatrix> = OnceLock::new();
    G.get_or_init(|| {
        let b = basis(6, 3);
        let mut g = RatMatrix::zeros(20, 20);
        for i in 0..20 {
            let mi = b.mask(i);
            let j = b.index_of(0b11_1111 ^ mi);
            g[(i, j)] = if wedge_sign(mi, b.mask(j)) { -Rat::one() } else { Rat::one() };
        }
        g
    })
}

pub fn symplectic_form_l3v6(xi: &MultiVector, eta: &MultiVector) -> Result<Rat> {
    for x in [xi, eta] {
        if (x.ambient_dim, x.degree) != (6, 3) {
            return input("symplectic form needs two elements of Λ^3 V6");
        }
    }
    Ok(l3v6_gram().bilinear(&xi.coords, &eta.coords))
}

/// `D(a) = {v : v ∧ a = 0}`.
pub fn annihilating_vectors(a: &MultiVector) -> Subspace {
    kernel(&right_wedge_matrix(a, 1))
}

/// `Some(V3)` when `a` is decomposable, with `a` a multiple of the wedge of a basis of `V3`.
pub fn is_decomposable(a: &MultiVector) -> Result<Option<Subspace>> {
    if (a.ambient_dim, a.degree) != (6, 3) {
        return input("decomposability test is for Λ^3 V6");
    }
    if a.is_zero() {
        return input("zero vector is not a point of P(Λ^3 V6)");
    }
    let d = annihilating_vectors(a);
    Ok((d.dim() == 3).then_some(d))
}

/// `Λ^p U` inside `Λ^p V_n` for a subspace `U` of `V_n`.
pub fn exterior_power(u: &Subspace, p: usize) -> Subspace {
    let n = u.ambient_dim();
    let dst = basis(n, p).len();
    if p == 0 {
        return Subspace::full(dst);
    }
    let vs = u.basis_vecs();
    if vs.len() < p {
        return Subspace::zero(dst);
    }
    let mut gens = Vec::new();
    for idx in combinations(vs.len(), p) {
        let mut w = MultiVector::e(n, &[]);
        for &i in &idx {
            w = w.wedge(&MultiVector::vector(&vs[i])).unwrap();
        }
        gens.push(w.coords);
    }
    Subspace::span(&gens, dst)
}

/// Span of `x ∧ y` for `x` in `a ⊂ Λ^p V_n`, `y` in `b ⊂ Λ^q V_n`.
pub fn wedge_subspaces(n: usize, p: usize, a: &Subspace, q: usize, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim() != binom(n, p) || b.ambient_dim() != binom(n, q) {
        return Err(Error::Dimension("subspaces do not live in the stated exterior powers".into()));
    }
    if p + q > n {
        return input("degree overflow");
    }
    let mut gens = Vec::new();
    for x in a.basis_vecs() {
        for y in b.basis_vecs() {
            gens.push(wedge_coords(n, p, &x, q, &y));
        }
    }
    Ok(Subspace::span(&gens, binom(n, p + q)))
}

/// `v ∧ Λ^p U` for subspaces `v, U` of `V_n`, e.g. `v ∧ Λ²V6` or `V6 ∧ Λ²V3`.
pub fn wedge_space(v: &Subspace, p: usize, u: &Subspace) -> Result<Subspace> {
    if v.ambient_dim() != u.ambient_dim() {
        return Err(Error::Dimension("ambient mismatch in wedge_space".into()));
    }
    if v.is_zero() {
        return input("wedge_space needs a nonzero subspace");
    }
    let n = v.ambient_dim();
    wedge_subspaces(n, 1, v, p, &exterior_power(u, p))
}

pub fn v5() -> Subspace {
    Subspace::coordinate(6, &[0, 1, 2, 3, 4])
}

pub fn v6() -> Subspace {
    Subspace::full(6)
}

/// `Λ^3 V5` inside `Λ^3 V6`.
pub fn l3v5() -> Subspace {
    exterior_power(&v5(), 3)
}

/// `e6 ∧ Λ²V5`.
pub fn e6_l2v5() -> Subspace {
    wedge_space(&Subspace::coordinate(6, &[5]), 2, &v5()).expect("e6 is nonzero")
}

/// `Λ³V6 = Λ³V5 ⊕ e6∧Λ²V5` with the wedge form.
pub fn l3v6_decomposition() -> crate::lagrangian_quadric::LagrangianDecomposition {
    let space = crate::lagrangian_quadric::SymplecticSpace::new(l3v6_gram().clone()).expect("wedge form is symplectic");
    crate::lagrangian_quadric::LagrangianDecomposition::new(space, l3v5(), e6_l2v5()).expect("complementary Lagrangians")
}

/// Matrix of `Λ^p g` for `g` acting on column vectors.
pub fn induced_matrix(g: &RatMatrix, p: usize) -> RatMatrix {
    let n = g.rows();
    assert!(g.is_square() && n <= MAX_N);
    let b = basis(n, p);
    let mut m = RatMatrix::zeros(b.len(), b.len());
    for i in 0..b.len() {
        let ri = b.monomial(i);
        for j in 0..b.len() {
            m[(i, j)] = if p == 0 { Rat::one() } else { g.select(&ri, &b.monomial(j)).det() };
        }
    }
    m
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_i64;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn e(l: &[usize]) -> MultiVector {
        MultiVector::e(6, l)
    }

    #[test]
    fn monomial_order() {
        let b = basis(6, 3);
        let labels: Vec<String> = (0..b.len()).map(|i| b.label(i)).collect();
        assert_eq!(labels[..5], ["123", "124", "125", "126", "134"]);
        assert_eq!(labels[19], "456");
        assert_eq!(labels.len(), 20);
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(e(&[1, 2]).wedge(&e(&[3])).unwrap(), e(&[1, 2, 3]));
        let top = e(&[1, 2, 3, 4, 5, 6]);
        assert_eq!(top.coords, vec![rat(1)]);
        assert_eq!(e(&[1, 2, 3]).wedge(&e(&[4, 5, 6])).unwrap(), top);
        assert_eq!(e(&[1, 3, 5]).wedge(&e(&[2, 4, 6])).unwrap(), top.scale(&rat(-1)));
        assert!(e(&[1, 2, 3]).wedge(&e(&[4, 5, 6, 1])).is_err());
    }

    #[test]
    fn form_examples() {
        assert_eq!(symplectic_form_l3v6(&e(&[1, 2, 3]), &e(&[4, 5, 6])).unwrap(), rat(1));
        assert_eq!(symplectic_form_l3v6(&e(&[1, 2, 3]), &e(&[1, 2, 4])).unwrap(), rat(0));
        assert_eq!(symplectic_form_l3v6(&e(&[1, 3, 5]), &e(&[2, 4, 6])).unwrap(), rat(-1));
    }

    #[test]
    fn gram_is_antidiagonal_sign_matrix() {
        let g = l3v6_gram();
        assert!(g.is_skew());
        assert!(!g.det().is_zero());
        for i in 0..20 {
            for j in 0..20 {
                assert_eq!(g[(i, j)].is_zero(), i + j != 19, "entry {i},{j}");
            }
        }
    }

    #[test]
    fn lambda_examples() {
        assert!(lambda_p(&e(&[1, 2, 3])).unwrap().is_zero());
        assert_eq!(lambda_p(&e(&[1, 2, 6])).unwrap(), MultiVector::e(5, &[1, 2]));
        assert_eq!(lambda_p(&e(&[1, 2, 3, 6])).unwrap(), MultiVector::e(5, &[1, 2, 3]).scale(&rat(-1)));
        assert!(lambda_p(&MultiVector::e(6, &[])).is_err());
    }

    #[test]
    fn lambda_kernel_and_rank() {
        for p in 1..=6 {
            let m = lambda_matrix(p);
            assert_eq!(m.rank(), binom(5, p - 1), "p = {p}");
            let inc = exterior_power(&v5(), p);
            for v in inc.basis_vecs() {
                assert!(crate::matrix::is_zero_vec(&m.apply(&v)));
            }
            assert_eq!(kernel(&m), inc);
        }
    }

    #[test]
    fn lambda_is_first_slot_contraction() {
        // ι(v1∧v2∧v3) = λ(v1) v2∧v3 - λ(v2) v1∧v3 + λ(v3) v1∧v2, checked on non-monomial vectors
        let v1 = vec_i64(&[1, 2, 0, 0, 1, 3]);
        let v2 = vec_i64(&[0, 1, 1, 0, 0, -1]);
        let v3 = vec_i64(&[2, 0, 0, 1, 1, 2]);
        let w = |a: &[Rat], b: &[Rat]| MultiVector::vector(a).wedge(&MultiVector::vector(b)).unwrap();
        let xi = w(&v1, &v2).wedge(&MultiVector::vector(&v3)).unwrap();
        let expected = w(&v2, &v3)
            .scale(&v1[5])
            .add(&w(&v1, &v3).scale(&-v2[5].clone()))
            .add(&w(&v1, &v2).scale(&v3[5]));
        assert_eq!(lambda_p(&xi).unwrap().include_v5(), expected);
    }

    #[test]
    fn decomposability_examples() {
        let d = is_decomposable(&e(&[1, 2, 3])).unwrap().unwrap();
        assert_eq!(d, Subspace::coordinate(6, &[0, 1, 2]));
        assert!(is_decomposable(&e(&[1, 2, 3]).add(&e(&[4, 5, 6]))).unwrap().is_none());
        let omega = e(&[1, 2, 3]).add(&e(&[1, 4, 5]));
        assert!(is_decomposable(&omega).unwrap().is_none());
        // hand oracle: v∧ω = 0 forces v ∈ span(e1)
        assert_eq!(annihilating_vectors(&omega), Subspace::coordinate(6, &[0]));
        assert!(is_decomposable(&MultiVector::zero(6, 3)).is_err());
    }

    #[test]
    fn wedge_space_examples() {
        let full = v6();
        let e1 = Subspace::coordinate(6, &[0]);
        assert_eq!(wedge_space(&e1, 2, &full).unwrap().dim(), 10);
        let s = wedge_space(&e1, 2, &v5()).unwrap();
        assert_eq!(s.dim(), 6);
        assert!(l3v5().contains_subspace(&s));
        let v3 = Subspace::coordinate(6, &[0, 1, 2]);
        // 3·(6−3) + 1 independent monomials
        let s = wedge_space(&full, 2, &v3).unwrap();
        assert_eq!(s.dim(), 10);
        let monos: Vec<Vec<Rat>> = (0..20)
            .filter(|&i| (basis(6, 3).mask(i) & 0b111).count_ones() >= 2)
            .map(|i| crate::matrix::unit_vec(20, i))
            .collect();
        assert_eq!(s, Subspace::span(&monos, 20));
        assert!(wedge_space(&Subspace::zero(6), 2, &full).is_err());
    }

    #[test]
    fn induced_matrix_is_functorial() {
        let g = RatMatrix::from_i64(&[
            &[1, 2, 0, 0, 1, 0],
            &[0, 1, 0, 3, 0, 0],
            &[1, 0, 1, 0, 0, 2],
            &[0, 0, 0, 1, 0, 0],
            &[2, 0, 0, 0, 1, 1],
            &[0, 1, 0, 0, 0, 1],
        ]);
        let u = vec_i64(&[1, 0, 2, 1, 0, 3]);
        let v = vec_i64(&[0, 1, 1, 0, 2, 1]);
        let w = vec_i64(&[3, 1, 0, 0, 1, 1]);
        let wedge3 = |a: &[Rat], b: &[Rat], c: &[Rat]| {
            MultiVector::vector(a).wedge(&MultiVector::vector(b)).unwrap().wedge(&MultiVector::vector(c)).unwrap()
        };
        let lhs = induced_matrix(&g, 3).apply(&wedge3(&u, &v, &w).coords);
        let rhs = wedge3(&g.apply(&u), &g.apply(&v), &g.apply(&w)).coords;
        assert_eq!(lhs, rhs);
        // Λ^3 g scales the form by det g
        let m = induced_matrix(&g, 3);
        assert_eq!(l3v6_gram().congruence(&m.transpose()), l3v6_gram().scale(&g.det()));
    }

    fn arb_vec(n: usize) -> impl Strategy<Value = Vec<Rat>> {
        proptest::collection::vec(-3i64..=3, n).prop_map(|v| v.into_iter().map(rat).collect())
    }

    proptest! {
        #[test]
        fn graded_antisymmetry(a in arb_vec(15), b in arb_vec(20), c in arb_vec(20)) {
            let x = MultiVector::new(6, 2, a).unwrap();
            let y = MultiVector::new(6, 3, b).unwrap();
            prop_assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap());
            let z = MultiVector::new(6, 3, c).unwrap();
            prop_assert_eq!(y.wedge(&z).unwrap(), z.wedge(&y).unwrap().scale(&rat(-1)));
        }

        #[test]
        fn form_is_skew(a in arb_vec(20), b in arb_vec(20)) {
            let x = MultiVector::new(6, 3, a).unwrap();
            let y = MultiVector::new(6, 3, b).unwrap();
            prop_assert_eq!(symplectic_form_l3v6(&x, &y).unwrap(), -symplectic_form_l3v6(&y, &x).unwrap());
            prop_assert!(symplectic_form_l3v6(&x, &x).unwrap().is_zero());
        }

        #[test]
        fn point_wedges_are_lagrangian(v in arb_vec(6)) {
            prop_assume!(!crate::matrix::is_zero_vec(&v));
            let s = wedge_space(&Subspace::span(&[v], 6), 2, &v6()).unwrap();
            prop_assert_eq!(s.dim(), 10);
            prop_assert!(s.is_isotropic(l3v6_gram()));
        }

        #[test]
        fn plane_wedges_are_lagrangian(a in arb_vec(6), b in arb_vec(6), c in arb_vec(6)) {
            let v3 = Subspace::span(&[a, b, c], 6);
            prop_assume!(v3.dim() == 3);
            let s = wedge_space(&v6(), 2, &v3).unwrap();
            prop_assert_eq!(s.dim(), 10);
            prop_assert!(s.is_isotropic(l3v6_gram()));
        }

        #[test]
        fn decomposable_recovers_vector(a in arb_vec(6), b in arb_vec(6), c in arb_vec(6)) {
            let x = MultiVector::vector(&a).wedge(&MultiVector::vector(&b)).unwrap()
                .wedge(&MultiVector::vector(&c)).unwrap();
            prop_assume!(!x.is_zero());
            let d = is_decomposable(&x).unwrap().expect("wedge of three vectors is decomposable");
            let bv = d.basis_vecs();
            let y = MultiVector::vector(&bv[0]).wedge(&MultiVector::vector(&bv[1])).unwrap()
                .wedge(&MultiVector::vector(&bv[2])).unwrap();
            prop_assert_eq!(Subspace::span(&[x.coords], 20), Subspace::span(&[y.coords], 20));
        }
    }

    #[test]
    fn l3v5_is_lagrangian() {
        let l = l3v5();
        assert_eq!(l.dim(), 10);
        assert!(l.is_isotropic(l3v6_gram()));
    }
}
