//! GM data `(W, V6, V5, L, μ, q, ε)` with `V5 = span(e1..e5)`, `L = V6/V5` identified with `k`
//! through `e6`, and `ε` the coefficient of `e12345`. `W` is modelled as `k^{n+5}`.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::error::{input, violation, Error, Result};
use crate::exterior::{basis, wedge_coords};
use crate::lagrangian_quadric::QuadricOnSubspace;
use crate::matrix::{is_zero_vec, unit_vec, vec_sub, RatMatrix};
use crate::poly::Poly;
use crate::random::{random_nonzero_vec, random_rat, random_vec, rng, TestRng};
use crate::rat::{format_rat, Rat};
use crate::subspace::{kernel, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GmType {
    Ordinary,
    Special,
    NonLci,
}

impl GmType {
    pub fn name(self) -> &'static str {
        match self {
            GmType::Ordinary => "ordinary",
            GmType::Special => "special",
            GmType::NonLci => "non_lci",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "ordinary" => Some(GmType::Ordinary),
            "special" => Some(GmType::Special),
            "non_lci" => Some(GmType::NonLci),
            _ => None,
        }
    }
}

impl fmt::Display for GmType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GmData {
    /// `10 × dim W`; column `j` is `μ(w_j)` in the `Λ²V5` monomial basis.
    pub mu: RatMatrix,
    /// `q(e1), ..., q(e6)`.
    pub q: Vec<RatMatrix>,
}

/// `W = W0 ⊕ W1` with `W1 = Ker μ` and `W0` its `q(e6)`-orthogonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitW {
    pub w0: Subspace,
    pub w1: Subspace,
    /// `q(e6)` on the RREF basis of `w0`.
    pub q0: RatMatrix,
    /// `q(e6)(k, k)` for the normalized kernel vector, zero when ordinary.
    pub q1: Rat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    OnX,
    OnHullOnly,
    Off,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscriminantOnLine {
    /// `det q(v) ≡ 0` along the line.
    WholeLine,
    Curve {
        det_poly: Poly,
        /// Multiplicity of the point of `P(V5)` on the line as a root of `det_poly`.
        plucker_mult: usize,
        expected_mult: usize,
        dis_poly: Poly,
    },
}

/// `P_i(x, y) = ε(e_i ∧ x ∧ y)` on `Λ²V5`, `i = 0..5`.
pub fn plucker_matrices() -> &'static [RatMatrix] {
    static P: OnceLock<Vec<RatMatrix>> = OnceLock::new();
    P.get_or_init(|| {
        (0..5)
            .map(|i| {
                let mut m = RatMatrix::zeros(10, 10);
                for a in 0..10 {
                    let va = wedge_coords(5, 1, &unit_vec(5, i), 2, &unit_vec(10, a));
                    for b in 0..10 {
                        m[(a, b)] = wedge_coords(5, 3, &va, 2, &unit_vec(10, b))[0].clone();
                    }
                }
                m
            })
            .collect()
    })
}

impl GmData {
    pub fn new(mu: RatMatrix, q: Vec<RatMatrix>) -> Result<Self> {
        if mu.rows() != 10 {
            return Err(Error::Dimension(format!("μ must have 10 rows (Λ²V5), got {}", mu.rows())));
        }
        if q.len() != 6 {
            return Err(Error::Dimension(format!("q needs 6 matrices, got {}", q.len())));
        }
        let w = mu.cols();
        for (i, m) in q.iter().enumerate() {
            if m.rows() != w || m.cols() != w {
                return Err(Error::Dimension(format!("q(e{}) must be {w}×{w}", i + 1)));
            }
        }
        Ok(GmData { mu, q })
    }

    /// Data with `q(v)` for `v ∈ V5` given by the Plücker formula.
    pub fn from_mu_and_q6(mu: RatMatrix, q6: RatMatrix) -> Result<Self> {
        let mut q: Vec<RatMatrix> = plucker_matrices().iter().map(|p| p.congruence(&mu.transpose())).collect();
        q.push(q6);
        Self::new(mu, q)
    }

    pub fn dim_w(&self) -> usize {
        self.mu.cols()
    }

    pub fn n(&self) -> i64 {
        self.dim_w() as i64 - 5
    }

    pub fn quadric_matrix(&self, v: &[Rat]) -> RatMatrix {
        assert_eq!(v.len(), 6);
        let w = self.dim_w();
        let mut m = RatMatrix::zeros(w, w);
        for (vi, qi) in v.iter().zip(&self.q) {
            if !vi.is_zero() {
                m = m.add(&qi.scale(vi));
            }
        }
        m
    }

    /// `Q(v) ⊂ P(W)`.
    pub fn quadric_at(&self, v: &[Rat]) -> QuadricOnSubspace {
        QuadricOnSubspace::new(Subspace::full(self.dim_w()), self.quadric_matrix(v)).expect("q(v) is symmetric")
    }

    pub fn kernel_mu(&self) -> Subspace {
        kernel(&self.mu)
    }

    /// Type from `Ker μ` and `q(e6)` on it.
    pub fn classify(&self) -> GmType {
        let k = self.kernel_mu();
        match k.dim() {
            0 => GmType::Ordinary,
            1 => {
                let x = k.basis().row(0);
                if self.q[5].bilinear(x, x).is_zero() {
                    GmType::NonLci
                } else {
                    GmType::Special
                }
            }
            _ => GmType::NonLci,
        }
    }

    /// Symmetry, the Plücker identity on `V5`, non-degeneracy of `dim W`, and the type.
    pub fn validate(&self) -> Result<GmType> {
        if self.n() < 1 {
            return input(format!("degenerate data: dim W = {} < 6, not a GM variety", self.dim_w()));
        }
        for (i, m) in self.q.iter().enumerate() {
            if !m.is_symmetric() {
                return violation(format!("q(e{}) is not symmetric", i + 1));
            }
        }
        let w = self.dim_w();
        for (i, p) in plucker_matrices().iter().enumerate() {
            let expected = p.congruence(&self.mu.transpose());
            for a in 0..w {
                for b in a..w {
                    if expected[(a, b)] != self.q[i][(a, b)] {
                        return violation(format!(
                            "Plücker identity fails at v = e{}, w{}, w{}: q = {}, ε(v∧μw∧μw') = {}",
                            i + 1,
                            a + 1,
                            b + 1,
                            format_rat(&self.q[i][(a, b)]),
                            format_rat(&expected[(a, b)])
                        ));
                    }
                }
            }
        }
        let t = self.classify();
        if t == GmType::Special {
            // q(v)(k, k) = λ(v) q(e6)(k, k) for v ∉ V5; check on a second v
            let k = self.kernel_mu().basis().row(0).to_vec();
            let mut v = unit_vec(6, 5);
            v[0] = Rat::one();
            let other = self.quadric_matrix(&v).bilinear(&k, &k);
            if other != self.q[5].bilinear(&k, &k) {
                return violation("q(v) on Ker μ depends on v beyond λ(v)");
            }
        }
        Ok(t)
    }

    pub fn split_w(&self) -> Result<SplitW> {
        let t = self.classify();
        let w = self.dim_w();
        match t {
            GmType::NonLci => Err(Error::NonLci("Ker μ is not a point off Q(e6)".into())),
            GmType::Ordinary => Ok(SplitW {
                w0: Subspace::full(w),
                w1: Subspace::zero(w),
                q0: self.q[5].clone(),
                q1: Rat::zero(),
            }),
            GmType::Special => {
                let w1 = self.kernel_mu();
                let k = w1.basis().row(0).to_vec();
                let w0 = w0_for(&self.q[5], &k, w1.pivots()[0]);
                let mut v = unit_vec(6, 5);
                v[0] = Rat::one();
                let w0b = w0_for(&self.quadric_matrix(&v), &k, w1.pivots()[0]);
                if w0 != w0b {
                    return violation("W0 depends on the choice of v ∉ V5");
                }
                let q0 = self.q[5].congruence(w0.basis());
                let q1 = self.q[5].bilinear(&k, &k);
                Ok(SplitW { w0, w1, q0, q1 })
            }
        }
    }

    /// Basis change `w'_i = Σ_j b_ij w_j` (rows of `b`).
    pub fn change_basis(&self, b: &RatMatrix) -> GmData {
        GmData { mu: self.mu.mul(&b.transpose()), q: self.q.iter().map(|m| m.congruence(b)).collect() }
    }

    /// Canonical basis of `W`: the `μ`-preimages in `W0` of the RREF rows of `μ(W0)`, then the
    /// normalized kernel vector.
    pub fn canonical(&self) -> Result<GmData> {
        let s = self.split_w()?;
        let b0 = s.w0.basis();
        let images = b0.mul(&self.mu.transpose());
        let target = Subspace::row_space(&images);
        let mut rows = Vec::with_capacity(self.dim_w());
        for r in target.basis_vecs() {
            let c = images.solve_left(&r).expect("row of μ(W0)");
            rows.push(b0.apply_left(&c));
        }
        rows.extend(s.w1.basis_vecs());
        Ok(self.change_basis(&RatMatrix::from_rows(rows, self.dim_w())))
    }

    /// Ordinary ↦ special (with `q1 = 1`), special ↦ ordinary.
    pub fn opposite(&self) -> Result<GmData> {
        let c = self.canonical()?;
        let w = c.dim_w();
        match self.classify() {
            GmType::Ordinary => {
                let mu = c.mu.hstack(&RatMatrix::zeros(10, 1));
                let mut q: Vec<RatMatrix> = c.q.iter().map(|m| m.block_diag(&RatMatrix::zeros(1, 1))).collect();
                q[5] = c.q[5].block_diag(&RatMatrix::identity(1));
                GmData::new(mu, q)
            }
            GmType::Special => {
                if self.n() < 2 {
                    return input("opposite of a special variety needs n >= 2");
                }
                let keep: Vec<usize> = (0..w - 1).collect();
                let all: Vec<usize> = (0..10).collect();
                GmData::new(c.mu.select(&all, &keep), c.q.iter().map(|m| m.select(&keep, &keep)).collect())
            }
            GmType::NonLci => Err(Error::NonLci("opposite needs lci data".into())),
        }
    }

    pub fn membership(&self, w: &[Rat]) -> Result<Membership> {
        if w.len() != self.dim_w() || is_zero_vec(w) {
            return input("point of P(W) must be a nonzero vector of length dim W");
        }
        let on: Vec<bool> = self.q.iter().map(|m| m.bilinear(w, w).is_zero()).collect();
        Ok(if on.iter().all(|&b| b) {
            Membership::OnX
        } else if on[..5].iter().all(|&b| b) {
            Membership::OnHullOnly
        } else {
            Membership::Off
        })
    }

    /// Rank of the `6 × dim W` matrix with rows `q(e_i)(w, ·)`.
    pub fn tangent_rank(&self, w: &[Rat]) -> Result<usize> {
        if w.len() != self.dim_w() || is_zero_vec(w) {
            return input("point of P(W) must be a nonzero vector of length dim W");
        }
        let rows: Vec<Vec<Rat>> = self.q.iter().map(|m| m.apply(w)).collect();
        Ok(RatMatrix::from_rows(rows, self.dim_w()).rank())
    }

    /// Solutions `v2` of `v1 ∧ v2 ∈ μ(W0)`, together with the map back to `W0`.
    fn hull_solutions(&self, s: &SplitW, v1: &[Rat]) -> (Subspace, RatMatrix) {
        let b0 = s.w0.basis();
        let images = b0.mul(&self.mu.transpose());
        let ann = Subspace::row_space(&images).annihilator();
        // columns: v1 ∧ e_j
        let mut wedge = RatMatrix::zeros(10, 5);
        for j in 0..5 {
            for (i, c) in wedge_coords(5, 1, v1, 1, &unit_vec(5, j)).into_iter().enumerate() {
                wedge[(i, j)] = c;
            }
        }
        let sol = if ann.dim() == 0 { Subspace::full(5) } else { kernel(&ann.basis().mul(&wedge)) };
        (sol, images)
    }

    fn lift_to_w0(&self, s: &SplitW, images: &RatMatrix, v1: &[Rat], v2: &[Rat]) -> Vec<Rat> {
        let target = wedge_coords(5, 1, v1, 1, v2);
        let c = images.solve_left(&target).expect("v1∧v2 lies in μ(W0)");
        s.w0.basis().apply_left(&c)
    }

    /// A point `w ∈ W0` with `μ(w) = v1 ∧ v2` for the given `v1`, or `None` when
    /// `v1 ∧ V5 ∩ μ(W0) = 0`.
    pub fn hull_point_through(&self, v1: &[Rat], r: &mut TestRng) -> Result<Option<Vec<Rat>>> {
        let s = self.split_w()?;
        let (sol, images) = self.hull_solutions(&s, v1);
        if sol.dim() <= 1 {
            return Ok(None);
        }
        loop {
            let v2 = sol.combine(&random_vec(r, sol.dim()));
            if !is_zero_vec(&wedge_coords(5, 1, v1, 1, &v2)) {
                return Ok(Some(self.lift_to_w0(&s, &images, v1, &v2)));
            }
        }
    }

    /// Point of the Grassmannian hull, resampling `v1` until the linear system is solvable.
    pub fn hull_point_sample(&self, seed: u64) -> Result<Vec<Rat>> {
        let mut r = rng(seed);
        for _ in 0..256 {
            let v1 = random_nonzero_vec(&mut r, 5);
            if let Some(w) = self.hull_point_through(&v1, &mut r)? {
                return Ok(w);
            }
        }
        input("no hull point found: v1 ∧ V5 misses μ(W0) for every sampled v1")
    }

    /// Searches pencils `v1 ∧ (a + s b)` in the hull for a rational zero of `q(e6)`.
    pub fn find_rational_point(&self, seed: u64, tries: usize) -> Result<Option<Vec<Rat>>> {
        let s = self.split_w()?;
        let mut r = rng(seed);
        // small integers keep the discriminants small, so squares are not rare
        let small = |r: &mut TestRng, n: usize| -> Vec<Rat> { (0..n).map(|_| Rat::from_integer(r.gen_range(-2..=2).into())).collect() };
        for _ in 0..tries {
            let v1 = small(&mut r, 5);
            if is_zero_vec(&v1) {
                continue;
            }
            let (sol, images) = self.hull_solutions(&s, &v1);
            if sol.dim() < 3 {
                continue;
            }
            let a = sol.combine(&small(&mut r, sol.dim()));
            let b = sol.combine(&small(&mut r, sol.dim()));
            let (wa_t, wb_t) = (wedge_coords(5, 1, &v1, 1, &a), wedge_coords(5, 1, &v1, 1, &b));
            if is_zero_vec(&wa_t) || is_zero_vec(&wb_t) || Subspace::span(&[wa_t, wb_t], 10).dim() < 2 {
                continue;
            }
            let wa = self.lift_to_w0(&s, &images, &v1, &a);
            let wb = self.lift_to_w0(&s, &images, &v1, &b);
            let q6 = &self.q[5];
            let (qa, qab, qb) = (q6.bilinear(&wa, &wa), q6.bilinear(&wa, &wb), q6.bilinear(&wb, &wb));
            let root = if qb.is_zero() {
                if qab.is_zero() {
                    continue;
                }
                Some(-&qa / (Rat::from_integer(2.into()) * &qab))
            } else {
                let disc = &qab * &qab - &qa * &qb;
                rational_sqrt(&disc).map(|d| (-&qab + d) / &qb)
            };
            if let Some(t) = root {
                let w: Vec<Rat> = wa.iter().zip(&wb).map(|(x, y)| x + &t * y).collect();
                if !is_zero_vec(&w) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    }

    /// `det q(va + t vb)`, divided by `λ(va + t vb)^{n-1}`.
    pub fn discriminant_on_line(&self, va: &[Rat], vb: &[Rat]) -> Result<DiscriminantOnLine> {
        if va.len() != 6 || vb.len() != 6 {
            return Err(Error::Dimension("line endpoints must lie in V6".into()));
        }
        if va[5].is_zero() && vb[5].is_zero() {
            return input("line lies in P(V5)");
        }
        if Subspace::span(&[va.to_vec(), vb.to_vec()], 6).dim() < 2 {
            return input("endpoints do not span a line");
        }
        let n = self.n();
        if n < 1 {
            return input("degenerate data");
        }
        let w = self.dim_w();
        let xs: Vec<Rat> = (0..=w as i64).map(|i| Rat::from_integer(i.into())).collect();
        let ys: Vec<Rat> = xs
            .iter()
            .map(|t| {
                let v: Vec<Rat> = va.iter().zip(vb).map(|(a, b)| a + t * b).collect();
                self.quadric_matrix(&v).det()
            })
            .collect();
        let det_poly = Poly::interpolate(&xs, &ys);
        if det_poly.is_zero() {
            return Ok(DiscriminantOnLine::WholeLine);
        }
        let lam = Poly::linear(va[5].clone(), vb[5].clone());
        let expected = (n - 1) as usize;
        let plucker_mult = if vb[5].is_zero() {
            w - det_poly.degree().unwrap()
        } else {
            det_poly.order_at(&(-&va[5] / &vb[5]))
        };
        let dis_poly = det_poly
            .div_exact(&lam.pow(expected))
            .ok_or_else(|| Error::Violation(format!("det q(v) is not divisible by λ^{expected} on the line")))?;
        if dis_poly.degree().unwrap() > 6 {
            return violation(format!("discriminant has degree {} > 6 on the line", dis_poly.degree().unwrap()));
        }
        Ok(DiscriminantOnLine::Curve { det_poly, plucker_mult, expected_mult: expected, dis_poly })
    }

    /// Kernel of `q(v)`.
    pub fn kernel_at(&self, v: &[Rat]) -> Subspace {
        kernel(&self.quadric_matrix(v))
    }

    /// Random `v ∉ V5`.
    pub fn random_point_off_v5(r: &mut TestRng) -> Vec<Rat> {
        let mut v = random_vec(r, 6);
        while v[5].is_zero() {
            v[5] = random_rat(r);
        }
        v
    }
}

fn w0_for(form: &RatMatrix, k: &[Rat], pivot: usize) -> Subspace {
    let qkk = form.bilinear(k, k);
    let n = k.len();
    let rows: Vec<Vec<Rat>> = (0..n)
        .filter(|&j| j != pivot)
        .map(|j| {
            let e = unit_vec(n, j);
            let c = form.bilinear(&e, k) / &qkk;
            vec_sub(&e, &k.iter().map(|x| x * &c).collect::<Vec<_>>())
        })
        .collect();
    Subspace::span(&rows, n)
}

pub fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd): (BigInt, BigInt) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| Rat::new(sn, sd))
}

/// Index of `e_i ∧ e_j` (0-based, `i < j`) in the `Λ²V5` basis.
pub fn l2v5_index(i: usize, j: usize) -> usize {
    basis(5, 2).index_of((1u8 << i) | (1u8 << j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::vec_i64;
    use crate::rat::rat;

    fn sample_q6() -> RatMatrix {
        let mut m = RatMatrix::zeros(10, 10);
        for i in 0..10 {
            m[(i, i)] = rat(i as i64 % 3 - 1);
            if i + 1 < 10 {
                m[(i, i + 1)] = rat(1);
                m[(i + 1, i)] = rat(1);
            }
        }
        m
    }

    fn fivefold() -> GmData {
        GmData::from_mu_and_q6(RatMatrix::identity(10), sample_q6()).unwrap()
    }

    #[test]
    fn plucker_matrix_entries() {
        // ε(e1 ∧ e23 ∧ e45) = 1
        let p = &plucker_matrices()[0];
        assert_eq!(p[(l2v5_index(1, 2), l2v5_index(3, 4))], rat(1));
        assert_eq!(p[(l2v5_index(1, 3), l2v5_index(2, 4))], rat(-1));
        assert_eq!(p[(l2v5_index(0, 1), l2v5_index(2, 3))], rat(0));
        assert!(p.is_symmetric());
        assert_eq!(p.rank(), 6);
    }

    #[test]
    fn validate_fixture_and_perturbation() {
        let d = fivefold();
        assert_eq!(d.validate().unwrap(), GmType::Ordinary);
        let mut bad = d.clone();
        let (a, b) = (l2v5_index(1, 2), l2v5_index(3, 4));
        bad.q[0][(a, b)] += rat(1);
        bad.q[0][(b, a)] += rat(1);
        let err = bad.validate().unwrap_err();
        assert!(err.is_violation());
        assert!(err.to_string().contains("v = e1"), "{err}");
    }

    #[test]
    fn opposite_round_trip() {
        let d = fivefold();
        let s = d.opposite().unwrap();
        assert_eq!(s.validate().unwrap(), GmType::Special);
        assert_eq!(s.n(), 6);
        let sp = s.split_w().unwrap();
        assert_eq!(sp.w1.dim(), 1);
        assert_eq!(sp.q1, rat(1));
        assert_eq!(s.opposite().unwrap(), d.canonical().unwrap());
        assert_eq!(s.opposite().unwrap().opposite().unwrap(), s.canonical().unwrap());
    }

    #[test]
    fn non_lci_is_rejected() {
        let d = fivefold();
        let mut q: Vec<RatMatrix> = d.q.iter().map(|m| m.block_diag(&RatMatrix::zeros(1, 1))).collect();
        q[5] = d.q[5].block_diag(&RatMatrix::zeros(1, 1));
        let bad = GmData::new(d.mu.hstack(&RatMatrix::zeros(10, 1)), q).unwrap();
        assert_eq!(bad.validate().unwrap(), GmType::NonLci);
        assert!(matches!(bad.split_w(), Err(Error::NonLci(_))));
        assert!(bad.opposite().is_err());
    }

    #[test]
    fn quadric_at_is_linear_and_plucker() {
        let d = fivefold();
        assert!(d.quadric_at(&vec_i64(&[0; 6])).gram().is_zero());
        assert_eq!(d.quadric_at(&unit_vec(6, 5)).gram(), &sample_q6());
        let v = vec_i64(&[1, 2, 0, -1, 3, 0]);
        let g = d.quadric_matrix(&v);
        let mut p = RatMatrix::zeros(10, 10);
        for (i, c) in v.iter().take(5).enumerate() {
            p = p.add(&plucker_matrices()[i].scale(c));
        }
        assert_eq!(g, p);
    }

    #[test]
    fn hull_points_and_resampling() {
        let d = fivefold();
        for seed in 0..10 {
            let w = d.hull_point_sample(seed).unwrap();
            for i in 0..5 {
                assert!(d.q[i].bilinear(&w, &w).is_zero());
            }
            assert_ne!(d.membership(&w).unwrap(), Membership::Off);
        }
        // μ(W0) = span(e12, e13, e23): v1 = e4 meets it trivially
        let mu = RatMatrix::identity(10).select(&(0..10).collect::<Vec<_>>(), &[0, 1, 4]);
        let small = GmData::from_mu_and_q6(mu, RatMatrix::identity(3)).unwrap();
        let mut r = rng(1);
        assert_eq!(small.hull_point_through(&unit_vec(5, 3), &mut r).unwrap(), None);
        assert!(small.hull_point_through(&unit_vec(5, 0), &mut r).unwrap().is_some());
    }

    #[test]
    fn rational_points_are_smooth() {
        let d = fivefold();
        let w = d.find_rational_point(3, 400).unwrap().expect("a rational point");
        assert_eq!(d.membership(&w).unwrap(), Membership::OnX);
        assert_eq!(d.tangent_rank(&w).unwrap(), 4);
    }

    #[test]
    fn discriminant_division() {
        let d = fivefold();
        let mut r = rng(5);
        for _ in 0..3 {
            let va = random_vec(&mut r, 6);
            let vb = GmData::random_point_off_v5(&mut r);
            match d.discriminant_on_line(&va, &vb).unwrap() {
                DiscriminantOnLine::Curve { dis_poly, plucker_mult, expected_mult, .. } => {
                    assert_eq!(dis_poly.degree(), Some(6));
                    assert_eq!(plucker_mult, expected_mult);
                }
                DiscriminantOnLine::WholeLine => panic!("generic line"),
            }
        }
        // q(e6) = q(e1): every q(v) is a Plücker quadric, of rank 6
        let deg = GmData::from_mu_and_q6(RatMatrix::identity(10), plucker_matrices()[0].clone()).unwrap();
        assert_eq!(deg.discriminant_on_line(&unit_vec(6, 1), &unit_vec(6, 5)).unwrap(), DiscriminantOnLine::WholeLine);
        assert!(d.discriminant_on_line(&unit_vec(6, 0), &unit_vec(6, 1)).is_err());
    }

    #[test]
    fn rational_sqrt_cases() {
        assert_eq!(rational_sqrt(&crate::rat::frac(9, 4)), Some(crate::rat::frac(3, 2)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
    }
}
