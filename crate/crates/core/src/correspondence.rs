//! Lci GM data versus Lagrangian data `(A ⊂ Λ³V6, A1)`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::error::{input, violation, Error, Result};
use crate::exterior::{basis, induced_matrix, l3v5, l3v6_gram, lambda_matrix, wedge_coords};
use crate::gm::{GmData, GmType};
use crate::matrix::{unit_vec, RatMatrix};
use crate::rat::Rat;
use crate::subspace::{kernel, Subspace};

/// Orbit representative of `A1 ⊂ k ⊕ L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum A1 {
    Zero,
    One,
    Infinity,
}

impl A1 {
    pub fn name(self) -> &'static str {
        match self {
            A1::Zero => "0",
            A1::One => "1",
            A1::Infinity => "inf",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "0" => Some(A1::Zero),
            "1" => Some(A1::One),
            "inf" => Some(A1::Infinity),
            _ => None,
        }
    }
}

impl fmt::Display for A1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LagrangianData {
    /// Subspace of `Λ³V6` in the 20-dimensional monomial basis.
    pub a: Subspace,
    pub a1: A1,
    /// Change of basis of `V6` that was applied to move a hyperplane to `V5`, if any.
    pub frame: Option<RatMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimReport {
    pub dim_a_cap_l3v5: usize,
    pub predicted_n: i64,
    pub gm_type: GmType,
    /// `predicted_n < 1`: the data does not come from a GM variety.
    pub degenerate: bool,
}

pub fn is_lagrangian(a: &Subspace) -> bool {
    a.ambient_dim() == 20 && a.dim() == 10 && a.is_isotropic(l3v6_gram())
}

impl LagrangianData {
    pub fn new(a: Subspace, a1: A1) -> Result<Self> {
        if !is_lagrangian(&a) {
            return input("A must be a 10-dimensional Lagrangian subspace of Λ³V6");
        }
        Ok(LagrangianData { a, a1, frame: None })
    }

    /// `A` transported by `Λ³g`, for `g` moving the hyperplane `ker f` onto `V5`.
    pub fn normalize_hyperplane(a: &Subspace, a1: A1, f: &[Rat]) -> Result<Self> {
        let g = hyperplane_frame(f)?;
        let mut ld = LagrangianData::new(a.map(&induced_matrix(&g, 3)), a1)?;
        ld.frame = Some(g);
        Ok(ld)
    }
}

/// Invertible `g` with `g(ker f) = V5`.
pub fn hyperplane_frame(f: &[Rat]) -> Result<RatMatrix> {
    if f.len() != 6 || f.iter().all(Zero::is_zero) {
        return input("a hyperplane needs a nonzero functional on V6");
    }
    let h = kernel(&RatMatrix::from_rows(vec![f.to_vec()], 6));
    let j = f.iter().position(|x| !x.is_zero()).unwrap();
    let mut cols = h.basis_vecs();
    cols.push(unit_vec(6, j));
    // g^{-1} has the adapted basis as columns
    let ginv = RatMatrix::from_rows(cols, 6).transpose();
    Ok(ginv.inverse().expect("adapted basis"))
}

/// `ε(ξ ∧ y)` for `ξ ∈ Λ³V5`, `y ∈ Λ²V5`.
fn epsilon_pairing() -> &'static RatMatrix {
    static E: OnceLock<RatMatrix> = OnceLock::new();
    E.get_or_init(|| {
        let mut m = RatMatrix::zeros(10, 10);
        for i in 0..10 {
            for j in 0..10 {
                m[(i, j)] = wedge_coords(5, 3, &unit_vec(10, i), 2, &unit_vec(10, j))[0].clone();
            }
        }
        m
    })
}

/// Inclusion `Λ^p V5 → Λ^p V6` as a matrix.
fn include_matrix(p: usize) -> RatMatrix {
    let (src, dst) = (basis(5, p), basis(6, p));
    let mut m = RatMatrix::zeros(dst.len(), src.len());
    for i in 0..src.len() {
        m[(dst.index_of(src.mask(i)), i)] = Rat::from_integer(1.into());
    }
    m
}

/// `{ξ + v0 ∧ μ0(w) : ε(ξ ∧ μ0(·)) + q(v0)(w, ·) = 0 on W0}` for `v0 ∉ V5` with `λ(v0) = 1`.
fn lagrangian_for_v0(d: &GmData, w0: &Subspace, v0: &[Rat]) -> Subspace {
    let b0 = w0.basis();
    let m = b0.rows();
    let images = b0.mul(&d.mu.transpose());
    let qv = d.quadric_matrix(v0).congruence(b0);
    let xi_part = images.mul(&epsilon_pairing().transpose());
    let system = xi_part.hstack(&qv);
    let sol = kernel(&system);
    let inc3 = include_matrix(3);
    let inc2 = include_matrix(2);
    let gens: Vec<Vec<Rat>> = sol
        .basis_vecs()
        .iter()
        .map(|x| {
            let xi = inc3.apply(&x[..10]);
            let mu_w = inc2.apply(&images.apply_left(&x[10..10 + m]));
            let wedge = wedge_coords(6, 1, v0, 2, &mu_w);
            crate::matrix::vec_add(&xi, &wedge)
        })
        .collect();
    Subspace::span(&gens, 20)
}

pub fn gm_to_lagrangian(d: &GmData) -> Result<LagrangianData> {
    let t = d.validate()?;
    let a1 = match t {
        GmType::Ordinary => A1::Zero,
        GmType::Special => A1::One,
        GmType::NonLci => return Err(Error::NonLci("the Lagrangian construction needs lci data".into())),
    };
    let s = d.split_w()?;
    let a = lagrangian_for_v0(d, &s.w0, &unit_vec(6, 5));
    if !is_lagrangian(&a) {
        return violation(format!("constructed A has dimension {} or is not isotropic", a.dim()));
    }
    let mut v0 = unit_vec(6, 5);
    v0[0] = Rat::from_integer(1.into());
    if lagrangian_for_v0(d, &s.w0, &v0) != a {
        return violation("A depends on the choice of v0");
    }
    Ok(LagrangianData { a, a1, frame: None })
}

/// Inverse construction: `W0 = λ3(A)`, `q0(v)(ξ1, ξ2) = -ε(λ4(v ∧ ξ1) ∧ λ3(ξ2))`, and for
/// `A1 = 1` an extra coordinate with `q1 = 1`.
pub fn lagrangian_to_gm(ld: &LagrangianData) -> Result<GmData> {
    if ld.a1 == A1::Infinity {
        return input("A1 = ∞ gives non-lci data");
    }
    if !is_lagrangian(&ld.a) {
        return input("A must be a 10-dimensional Lagrangian subspace of Λ³V6");
    }
    let ab = ld.a.basis();
    let images = ab.mul(&lambda_matrix(3).transpose());
    let w0 = Subspace::row_space(&images);
    let k = w0.dim();
    let bs = w0.basis_vecs();
    let lifts: Vec<Vec<Rat>> = bs.iter().map(|b| ab.apply_left(&images.solve_left(b).expect("row of λ3(A)"))).collect();
    let l4 = lambda_matrix(4);
    let mut q = Vec::with_capacity(6);
    for j in 0..6 {
        let ej = unit_vec(6, j);
        let mut m = RatMatrix::zeros(k, k);
        for (a, xi) in lifts.iter().enumerate() {
            let contracted = l4.apply(&wedge_coords(6, 1, &ej, 3, xi));
            for (b, y) in bs.iter().enumerate() {
                m[(a, b)] = -wedge_coords(5, 3, &contracted, 2, y)[0].clone();
            }
        }
        if !m.is_symmetric() {
            return violation(format!("q0(e{}) is not symmetric", j + 1));
        }
        q.push(m);
    }
    let mut mu = if k == 0 { RatMatrix::zeros(10, 0) } else { w0.basis().transpose() };
    if ld.a1 == A1::One {
        mu = mu.hstack(&RatMatrix::zeros(10, 1));
        for (j, m) in q.iter_mut().enumerate() {
            let extra = if j == 5 { RatMatrix::identity(1) } else { RatMatrix::zeros(1, 1) };
            *m = m.block_diag(&extra);
        }
    }
    GmData::new(mu, q)
}

pub fn dim_report(ld: &LagrangianData) -> Result<DimReport> {
    let d = ld.a.intersect(&l3v5())?.dim();
    let (n, t) = match ld.a1 {
        A1::Zero => (5 - d as i64, GmType::Ordinary),
        A1::One => (6 - d as i64, GmType::Special),
        A1::Infinity => return input("A1 = ∞ has no GM dimension"),
    };
    Ok(DimReport { dim_a_cap_l3v5: d, predicted_n: n, gm_type: t, degenerate: n < 1 })
}

/// `A^⊥ ⊂ Λ³V6^∨` in the dual monomial basis.
pub fn dualize(ld: &LagrangianData) -> Result<LagrangianData> {
    let dual = ld.a.annihilator();
    if !is_lagrangian(&dual) {
        return violation("A^⊥ is not Lagrangian");
    }
    Ok(LagrangianData { a: dual, a1: ld.a1, frame: None })
}

/// `(A ∩ η^⊥) ⊕ k η` for any nonzero `η ∈ Λ³V6`.
pub fn lagrangian_update(a: &Subspace, eta: &[Rat]) -> Result<Subspace> {
    if eta.len() != 20 || eta.iter().all(Zero::is_zero) {
        return input("η must be a nonzero element of Λ³V6");
    }
    if a.contains(eta) {
        return Ok(a.clone());
    }
    let line = Subspace::span(&[eta.to_vec()], 20);
    let out = a.intersect(&line.orthogonal(l3v6_gram()))?.sum(&line)?;
    if !is_lagrangian(&out) {
        return violation("updated subspace is not Lagrangian");
    }
    Ok(out)
}

/// Lagrangian of a hyperplane section: `η0 ∈ Λ³V5`.
pub fn hyperplane_section_lagrangian(a: &Subspace, eta0: &[Rat]) -> Result<Subspace> {
    if eta0.len() != 20 || eta0.iter().all(Zero::is_zero) {
        return input("η0 must be a nonzero element of Λ³V5");
    }
    if !l3v5().contains(eta0) {
        return input("η0 must lie in Λ³V5");
    }
    let out = lagrangian_update(a, eta0)?;
    if out != *a && out.intersect(a)?.dim() != 9 {
        return violation("dim(A ∩ A') is not 9");
    }
    Ok(out)
}
