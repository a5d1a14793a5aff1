//! Built-in data: an ordinary fivefold, its special opposite, an ordinary threefold, the
//! `ω = e123 + e145` fixture, a fivefold with marked strata points, and trivial Lagrangians.

use crate::correspondence::{gm_to_lagrangian, hyperplane_section_lagrangian, lagrangian_to_gm, lagrangian_update, LagrangianData, A1};
use crate::exterior::{l3v5, v6, wedge_space, MultiVector};
use crate::gm::GmData;
use crate::matrix::RatMatrix;
use crate::rat::rat;
use crate::subspace::Subspace;

/// `q(e6)` of the fivefold: nondegenerate, indefinite, small integers.
pub fn fivefold_q6() -> RatMatrix {
    let mut m = RatMatrix::zeros(10, 10);
    for i in 0..10 {
        for j in 0..10 {
            m[(i, j)] = rat(((2 * i * i + 2 * j * j + 5 * i * j + 1) % 11) as i64 - 5);
        }
    }
    m
}

/// `μ = id` on `W = Λ²V5`.
pub fn fivefold() -> GmData {
    GmData::from_mu_and_q6(RatMatrix::identity(10), fivefold_q6()).expect("fixture")
}

pub fn fivefold_lagrangian() -> LagrangianData {
    gm_to_lagrangian(&fivefold()).expect("fixture")
}

pub fn sixfold() -> GmData {
    fivefold().opposite().expect("fixture")
}

pub fn threefold_etas() -> [MultiVector; 2] {
    [
        MultiVector::e(6, &[1, 2, 5]).add(&MultiVector::e(6, &[1, 3, 4])),
        MultiVector::e(6, &[2, 3, 5]).add(&MultiVector::e(6, &[1, 2, 4])),
    ]
}

/// Two hyperplane sections of the fivefold.
pub fn threefold_lagrangian() -> LagrangianData {
    let mut a = fivefold_lagrangian().a;
    for eta in threefold_etas() {
        a = hyperplane_section_lagrangian(&a, &eta.coords).expect("fixture");
    }
    LagrangianData::new(a, A1::Zero).expect("fixture")
}

pub fn threefold() -> GmData {
    lagrangian_to_gm(&threefold_lagrangian()).expect("fixture")
}

pub fn omega() -> MultiVector {
    MultiVector::e(6, &[1, 2, 3]).add(&MultiVector::e(6, &[1, 4, 5]))
}

/// Hyperplane section of the fivefold by `ω`; `e1 ∈ Σ1` and `span(e1, e2, e4) ∈ Σ2`.
pub fn omega_lagrangian() -> LagrangianData {
    let a = hyperplane_section_lagrangian(&fivefold_lagrangian().a, &omega().coords).expect("fixture");
    LagrangianData::new(a, A1::Zero).expect("fixture")
}

pub fn omega_fourfold() -> GmData {
    lagrangian_to_gm(&omega_lagrangian()).expect("fixture")
}

pub fn omega_sigma1_point() -> Vec<crate::rat::Rat> {
    crate::matrix::unit_vec(6, 0)
}

pub fn omega_sigma2_plane() -> Subspace {
    Subspace::coordinate(6, &[0, 1, 3])
}

/// `η1 ∈ e1∧Λ²V6` and `η2 ∈ V6∧Λ²span(e1, e2, e3)`, with `ω(η1, η2) = 0`.
pub fn marked_etas() -> [MultiVector; 2] {
    [
        MultiVector::e(6, &[1, 4, 6]).add(&MultiVector::e(6, &[1, 5, 6])),
        MultiVector::e(6, &[6, 2, 3]).add(&MultiVector::e(6, &[5, 1, 2])),
    ]
}

/// The fivefold Lagrangian updated by `marked_etas`: `e1 ∈ Y_A ∩ P(V5)` off `Σ1`, and
/// `span(e1, e2, e3) ∈ Z_A` off `Σ2`.
pub fn marked_lagrangian() -> LagrangianData {
    let mut a = fivefold_lagrangian().a;
    for eta in marked_etas() {
        a = lagrangian_update(&a, &eta.coords).expect("fixture");
    }
    LagrangianData::new(a, A1::Zero).expect("fixture")
}

pub fn marked_fivefold() -> GmData {
    lagrangian_to_gm(&marked_lagrangian()).expect("fixture")
}

pub fn marked_y_point() -> Vec<crate::rat::Rat> {
    crate::matrix::unit_vec(6, 0)
}

pub fn marked_z_plane() -> Subspace {
    Subspace::coordinate(6, &[0, 1, 2])
}

/// Fivefold with `q(e6)` of rank 8, so `e6 ∈ Y_A^2`.
pub fn corank2_fivefold() -> GmData {
    let mut q6 = fivefold_q6();
    for i in 0..10 {
        for j in 0..10 {
            if i >= 8 || j >= 8 {
                q6[(i, j)] = rat(0);
            }
        }
    }
    GmData::from_mu_and_q6(RatMatrix::identity(10), q6).expect("fixture")
}

/// `q(e6) = q(e1)`: every `q(v)` is a Plücker quadric.
pub fn plucker_degenerate() -> GmData {
    GmData::from_mu_and_q6(RatMatrix::identity(10), crate::gm::plucker_matrices()[0].clone()).expect("fixture")
}

pub fn l3v5_lagrangian() -> LagrangianData {
    LagrangianData::new(l3v5(), A1::Zero).expect("fixture")
}

/// `e1 ∧ Λ²V6`, with `Y_A = P(V6)`.
pub fn e1_l2v6_lagrangian() -> LagrangianData {
    let a = wedge_space(&Subspace::coordinate(6, &[0]), 2, &v6()).expect("fixture");
    LagrangianData::new(a, A1::Zero).expect("fixture")
}

/// Lci GM fixtures by name.
pub fn gm_fixtures() -> Vec<(&'static str, GmData)> {
    vec![
        ("fivefold", fivefold()),
        ("sixfold", sixfold()),
        ("threefold", threefold()),
        ("omega-fourfold", omega_fourfold()),
        ("marked-fivefold", marked_fivefold()),
    ]
}

/// Lagrangian fixtures by name, including the degenerate ones.
pub fn lagrangian_fixtures() -> Vec<(&'static str, LagrangianData)> {
    vec![
        ("fivefold", fivefold_lagrangian()),
        ("sixfold", LagrangianData { a1: A1::One, ..fivefold_lagrangian() }),
        ("threefold", threefold_lagrangian()),
        ("omega-fourfold", omega_lagrangian()),
        ("marked-fivefold", marked_lagrangian()),
        ("l3v5", l3v5_lagrangian()),
        ("e1-l2v6", e1_l2v6_lagrangian()),
    ]
}
