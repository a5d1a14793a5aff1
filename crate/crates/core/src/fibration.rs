//! First and second quadric fibrations: fibers from isotropic reduction of `Â ⊂ Λ³V6 ⊕ k ⊕ L`,
//! against the closed forms in terms of EPW strata.
//!
//! Coordinates of the 22-dimensional space: `Λ³V6` (20), then `x`, `x'`.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::correspondence::{dim_report, LagrangianData, A1};
use crate::epw::{y_stratum, z_stratum};
use crate::error::{input, violation, Error, Result};
use crate::exterior::{e6_l2v5, l3v5, l3v6_gram, v5, wedge_space};
use crate::lagrangian_quadric::{isotropic_for_l2bar, isotropic_reduce, quadric_pair_from_lagrangian, LagrangianDecomposition, SymplecticSpace};
use crate::matrix::{is_zero_vec, unit_vec, RatMatrix};
use crate::rat::Rat;
use crate::subspace::Subspace;

const X: usize = 20;
const XP: usize = 21;

/// `L1 = Λ³V5 ⊕ k·x'`, `L2 = e6∧Λ²V5 ⊕ k·x`.
pub fn extended_decomposition() -> &'static LagrangianDecomposition {
    static D: OnceLock<LagrangianDecomposition> = OnceLock::new();
    D.get_or_init(|| {
        let mut f = l3v6_gram().scale(&-Rat::one()).block_diag(&RatMatrix::zeros(2, 2));
        f[(X, XP)] = -Rat::one();
        f[(XP, X)] = Rat::one();
        let space = SymplecticSpace::new(f).expect("symplectic");
        let l1 = Subspace::row_space(&embed(l3v5().basis())).sum(&Subspace::coordinate(22, &[XP])).unwrap();
        let l2 = Subspace::row_space(&embed(e6_l2v5().basis())).sum(&Subspace::coordinate(22, &[X])).unwrap();
        LagrangianDecomposition::new(space, l1, l2).expect("complementary Lagrangians")
    })
}

fn embed(rows: &RatMatrix) -> RatMatrix {
    rows.hstack(&RatMatrix::zeros(rows.rows(), 2))
}

fn embed_subspace(s: &Subspace) -> Subspace {
    if s.dim() == 0 {
        return Subspace::zero(22);
    }
    Subspace::row_space(&embed(s.basis()))
}

/// `Â = A ⊕ A1`.
pub fn a_hat(ld: &LagrangianData) -> Subspace {
    let mut row = vec![Rat::from_integer(0.into()); 22];
    match ld.a1 {
        A1::Zero => row[XP] = Rat::one(),
        A1::One => {
            row[X] = Rat::one();
            row[XP] = Rat::one();
        }
        A1::Infinity => row[X] = Rat::one(),
    }
    embed_subspace(&ld.a).sum(&Subspace::span(&[row], 22)).unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub n: i64,
    /// `σ1` or `l`.
    pub sigma_level: usize,
    /// `Y`-stratum of `v` or `Z`-stratum of `V3`.
    pub stratum: usize,
    /// Projective dimension of the span of the reduced quadric.
    pub ambient: i64,
    pub corank: usize,
    pub closed_ambient: i64,
    pub closed_corank: i64,
    pub agree: bool,
    /// The data does not come from a GM variety (`n < 1`).
    pub degenerate: bool,
}

fn check_v5_point(v: &[Rat]) -> Result<()> {
    if v.len() != 6 {
        return Err(Error::Dimension("points of P(V6) have 6 coordinates".into()));
    }
    if is_zero_vec(v) {
        return input("zero vector is not a point");
    }
    if !v[5].is_zero() {
        return input("v must lie in V5");
    }
    Ok(())
}

fn check_v5_plane(v3: &Subspace) -> Result<()> {
    if v3.ambient_dim() != 6 || v3.dim() != 3 {
        return input("V3 must be a 3-dimensional subspace of V6");
    }
    if !v5().contains_subspace(v3) {
        return input("V3 must lie in V5");
    }
    Ok(())
}

/// `dim(A ∩ v∧Λ²V5)` for `v ∈ V5`.
pub fn sigma1_level(ld: &LagrangianData, v: &[Rat]) -> Result<usize> {
    check_v5_point(v)?;
    Ok(ld.a.intersect(&wedge_space(&Subspace::span(&[v.to_vec()], 6), 2, &v5())?)?.dim())
}

/// `dim(A ∩ V5∧Λ²V3)` for `V3 ⊂ V5`.
pub fn sigma2_level(ld: &LagrangianData, v3: &Subspace) -> Result<usize> {
    check_v5_plane(v3)?;
    Ok(ld.a.intersect(&wedge_space(&v5(), 2, v3)?)?.dim())
}

/// Reduces `Â` by `I = L1 ∩ L̄2^⊥`; returns projective dimension of the span and corank of `Q̄2`.
fn reduced_fiber(ld: &LagrangianData, l2bar: &Subspace, expected_i: &Subspace) -> Result<(i64, usize)> {
    let dec = extended_decomposition();
    let i = isotropic_for_l2bar(dec, l2bar)?;
    if i != *expected_i {
        return violation("I = L1 ∩ L̄2^⊥ differs from the expected isotropic subspace");
    }
    let red = isotropic_reduce(dec, &a_hat(ld), &i)?;
    let (_, q2) = quadric_pair_from_lagrangian(&red.dec, &red.a)?;
    Ok((q2.span().dim() as i64 - 1, q2.corank()))
}

fn lci_n(ld: &LagrangianData) -> Result<i64> {
    if ld.a1 == A1::Infinity {
        return input("fibrations need A1 ≠ ∞");
    }
    Ok(dim_report(ld)?.predicted_n)
}

/// Fiber of the first quadric fibration over `v ∈ V5`.
pub fn fibration1_fiber(ld: &LagrangianData, v: &[Rat]) -> Result<FiberReport> {
    check_v5_point(v)?;
    let n = lci_n(ld)?;
    let vs = Subspace::span(&[v.to_vec()], 6);
    let e6 = Subspace::coordinate(6, &[5]);
    // e6 ∧ v ∧ V5
    let l2bar = embed_subspace(&crate::exterior::wedge_subspaces(6, 2, &crate::exterior::wedge_subspaces(6, 1, &e6, 1, &vs)?, 1, &v5())?)
        .sum(&Subspace::coordinate(22, &[X]))?;
    let expected_i = embed_subspace(&wedge_space(&vs, 2, &v5())?);
    let (ambient, corank) = reduced_fiber(ld, &l2bar, &expected_i)?;
    let sigma = sigma1_level(ld, v)?;
    let stratum = y_stratum(&ld.a, v)?;
    let closed_ambient = n - 2 + sigma as i64;
    let closed_corank = stratum as i64 - sigma as i64;
    Ok(FiberReport {
        n,
        sigma_level: sigma,
        stratum,
        ambient,
        corank,
        closed_ambient,
        closed_corank,
        agree: ambient == closed_ambient && corank as i64 == closed_corank,
        degenerate: n < 1,
    })
}

/// Fiber of the second quadric fibration over `V3 ⊂ V5`.
pub fn fibration2_fiber(ld: &LagrangianData, v3: &Subspace) -> Result<FiberReport> {
    check_v5_plane(v3)?;
    let n = lci_n(ld)?;
    let e6 = Subspace::coordinate(6, &[5]);
    let l2bar = embed_subspace(&wedge_space(&e6, 2, v3)?).sum(&Subspace::coordinate(22, &[X]))?;
    let expected_i = embed_subspace(&wedge_space(&v5(), 2, v3)?);
    let (ambient, corank) = reduced_fiber(ld, &l2bar, &expected_i)?;
    let l = sigma2_level(ld, v3)?;
    let stratum = z_stratum(&ld.a, v3)?;
    let closed_ambient = n + l as i64 - 3;
    let closed_corank = stratum as i64 - l as i64;
    Ok(FiberReport {
        n,
        sigma_level: l,
        stratum,
        ambient,
        corank,
        closed_ambient,
        closed_corank,
        agree: ambient == closed_ambient && corank as i64 == closed_corank,
        degenerate: n < 1,
    })
}

/// `Q2` of `Â` on `L2`, as a form on `e6∧Λ²V5 ⊕ k·x`.
pub fn q2_of_a_hat(ld: &LagrangianData) -> Result<crate::lagrangian_quadric::QuadricOnSubspace> {
    Ok(quadric_pair_from_lagrangian(extended_decomposition(), &a_hat(ld))?.1)
}

/// `e6 ∧ y` in the 22-dimensional space, for `y ∈ Λ²V5`.
pub fn e6_wedge(y: &[Rat]) -> Vec<Rat> {
    let y6 = crate::exterior::MultiVector::new(5, 2, y.to_vec()).expect("Λ²V5 coordinates").include_v5();
    let mut out = crate::exterior::wedge_coords(6, 1, &unit_vec(6, 5), 2, &y6.coords);
    out.extend([Rat::zero(), Rat::zero()]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::{gm_to_lagrangian, lagrangian_update};
    use crate::exterior::MultiVector;
    use crate::gm::GmData;
    use crate::matrix::vec_i64;
    use crate::rat::rat;

    fn fivefold() -> LagrangianData {
        let mut m = RatMatrix::zeros(10, 10);
        for i in 0..10 {
            for j in 0..10 {
                m[(i, j)] = rat(((i * j + i + j) % 5) as i64 - 2);
            }
        }
        gm_to_lagrangian(&GmData::from_mu_and_q6(RatMatrix::identity(10), m).unwrap()).unwrap()
    }

    #[test]
    fn extended_space_is_decomposed() {
        let dec = extended_decomposition();
        assert_eq!(dec.dim(), 22);
        assert!(dec.space.is_lagrangian(&a_hat(&fivefold())));
    }

    #[test]
    fn generic_fibers_fivefold() {
        let ld = fivefold();
        let r = fibration1_fiber(&ld, &vec_i64(&[1, 2, -1, 3, 1, 0])).unwrap();
        assert!(r.agree, "{r:?}");
        assert_eq!((r.ambient, r.corank), (3, 0));
        let v3 = Subspace::span(&[vec_i64(&[1, 0, 2, 0, 1, 0]), vec_i64(&[0, 1, 1, -1, 0, 0]), vec_i64(&[0, 0, 1, 1, 2, 0])], 6);
        let r = fibration2_fiber(&ld, &v3).unwrap();
        assert!(r.agree, "{r:?}");
        assert_eq!((r.ambient, r.corank), (2, 0));
    }

    #[test]
    fn sixfold_fibers() {
        let ld = LagrangianData { a1: A1::One, ..fivefold() };
        let r = fibration1_fiber(&ld, &vec_i64(&[1, 2, -1, 3, 1, 0])).unwrap();
        assert!(r.agree, "{r:?}");
        assert_eq!(r.ambient, 4);
    }

    #[test]
    fn sigma_points() {
        let w = MultiVector::e(6, &[1, 2, 3]).add(&MultiVector::e(6, &[1, 4, 5]));
        let a = lagrangian_update(&fivefold().a, &w.coords).unwrap();
        let ld = LagrangianData::new(a, A1::Zero).unwrap();
        let r = fibration1_fiber(&ld, &unit_vec(6, 0)).unwrap();
        assert!(r.sigma_level >= 1 && r.agree, "{r:?}");
        let v3 = Subspace::coordinate(6, &[0, 1, 3]);
        let r = fibration2_fiber(&ld, &v3).unwrap();
        assert!(r.sigma_level >= 1 && r.agree, "{r:?}");
        assert!(fibration1_fiber(&ld, &unit_vec(6, 5)).is_err());
        assert!(fibration2_fiber(&ld, &Subspace::coordinate(6, &[0, 1, 5])).is_err());
    }

    #[test]
    fn q2_reproduces_q_e6() {
        let ld = fivefold();
        let d = crate::correspondence::lagrangian_to_gm(&ld).unwrap();
        let q2 = q2_of_a_hat(&ld).unwrap();
        for a in 0..10 {
            for b in 0..10 {
                let x = e6_wedge(&d.mu.col(a));
                let y = e6_wedge(&d.mu.col(b));
                assert_eq!(q2.eval(&x, &y).unwrap(), d.q[5][(a, b)]);
            }
        }
    }
}
