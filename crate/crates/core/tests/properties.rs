use gm_epw::correspondence::{dualize, gm_to_lagrangian, lagrangian_to_gm, lagrangian_update, LagrangianData, A1};
use gm_epw::epw::{hyperplane, scan_decomposables, y_dual_stratum, y_hat_member, y_stratum, z_stratum};
use gm_epw::exterior::{is_decomposable, l3v6_decomposition, l3v6_gram, MultiVector};
use gm_epw::fibration::{fibration1_fiber, fibration2_fiber, sigma1_level, sigma2_level};
use gm_epw::fixtures;
use gm_epw::random::{random_lagrangian, random_nonzero_vec, random_subspace, rng, TestRng};
use gm_epw::{Rat, Subspace};
use num_traits::Zero;
use proptest::prelude::*;

fn lagrangian(r: &mut TestRng) -> LagrangianData {
    LagrangianData::new(random_lagrangian(r, &l3v6_decomposition()), A1::Zero).unwrap()
}

fn fixture(i: usize) -> LagrangianData {
    let mut all: Vec<LagrangianData> = fixtures::lagrangian_fixtures().into_iter().map(|(_, l)| l).collect();
    all.swap_remove(i % all.len())
}

/// A nonzero vector with a zero last coordinate.
fn v5_point(r: &mut TestRng) -> Vec<Rat> {
    let mut v = random_nonzero_vec(r, 5);
    v.push(Rat::zero());
    v
}

fn v5_plane(r: &mut TestRng) -> Subspace {
    let s = random_subspace(r, 5, 3);
    let rows: Vec<Vec<Rat>> = s.basis_vecs().into_iter().map(|mut v| {
        v.push(Rat::zero());
        v
    }).collect();
    Subspace::span(&rows, 6)
}

/// Random point of the hyperplane `h`.
fn point_in(h: &Subspace, r: &mut TestRng) -> Vec<Rat> {
    h.combine(&random_nonzero_vec(r, h.dim()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn dual_strata_agree(seed: u64) {
        let mut r = rng(seed);
        let ld = lagrangian(&mut r);
        let dual = dualize(&ld).unwrap();
        prop_assert_eq!(dualize(&dual).unwrap().a, ld.a.clone());
        let f = random_nonzero_vec(&mut r, 6);
        prop_assert_eq!(y_dual_stratum(&ld.a, &hyperplane(&f).unwrap()).unwrap(), y_stratum(&dual.a, &f).unwrap());
        let v3 = random_subspace(&mut r, 6, 3);
        prop_assert_eq!(z_stratum(&ld.a, &v3).unwrap(), z_stratum(&dual.a, &v3.annihilator()).unwrap());
    }

    #[test]
    fn incidence_refines_both_strata(seed: u64, which in 0usize..7) {
        let mut r = rng(seed);
        let ld = fixture(which);
        let h = hyperplane(&random_nonzero_vec(&mut r, 6)).unwrap();
        for h in [h, gm_epw::exterior::v5()] {
            let v = point_in(&h, &mut r);
            let y_hat = y_hat_member(&ld.a, &v, &h).unwrap();
            prop_assert!(y_hat <= y_stratum(&ld.a, &v).unwrap());
            prop_assert!(y_hat <= y_dual_stratum(&ld.a, &h).unwrap());
        }
    }

    #[test]
    fn sigma_loci_lie_in_strata(seed: u64, which in 0usize..5) {
        let mut r = rng(seed);
        let (_, d) = fixtures::gm_fixtures().swap_remove(which);
        let ld = gm_to_lagrangian(&d).unwrap();
        // push A towards Σ1 / Σ2 by updating with vectors of v∧Λ²V5 and V5∧Λ²V3
        let v = v5_point(&mut r);
        let v3 = v5_plane(&mut r);
        let b = v3.basis_vecs();
        let w = v5_point(&mut r);
        let eta1 = MultiVector::vector(&v).wedge(&MultiVector::vector(&w)).unwrap().wedge(&MultiVector::vector(&v5_point(&mut r))).unwrap();
        let eta2 = MultiVector::vector(&b[0]).wedge(&MultiVector::vector(&b[1])).unwrap().wedge(&MultiVector::vector(&w)).unwrap();
        for eta in [eta1, eta2] {
            if eta.is_zero() {
                continue;
            }
            let a = lagrangian_update(&ld.a, &eta.coords).unwrap();
            let upd = LagrangianData::new(a, A1::Zero).unwrap();
            let s1 = sigma1_level(&upd, &v).unwrap();
            prop_assert!(s1 <= y_stratum(&upd.a, &v).unwrap());
            let s2 = sigma2_level(&upd, &v3).unwrap();
            prop_assert!(s2 <= z_stratum(&upd.a, &v3).unwrap());
            if gm_epw::correspondence::dim_report(&upd).unwrap().predicted_n >= 1 {
                prop_assert!(fibration1_fiber(&upd, &v).unwrap().agree);
                prop_assert!(fibration2_fiber(&upd, &v3).unwrap().agree);
            }
        }
    }

    #[test]
    fn decomposable_duals(a in proptest::collection::vec(-3i64..=3, 18)) {
        let vs: Vec<Vec<Rat>> = a.chunks(6).map(|c| c.iter().map(|&x| Rat::from_integer(x.into())).collect()).collect();
        let t = MultiVector::vector(&vs[0]).wedge(&MultiVector::vector(&vs[1])).unwrap().wedge(&MultiVector::vector(&vs[2])).unwrap();
        prop_assume!(!t.is_zero());
        let v3 = is_decomposable(&t).unwrap().unwrap();
        let g = l3v6_gram();
        let dual = MultiVector::new(6, 3, g.apply(&t.coords)).unwrap();
        prop_assert_eq!(is_decomposable(&dual).unwrap(), Some(v3.annihilator()));
    }

    #[test]
    fn gm_round_trip_from_random_updates(seed: u64) {
        let mut r = rng(seed);
        let base = fixtures::fivefold_lagrangian();
        let v = random_nonzero_vec(&mut r, 6);
        let w = random_nonzero_vec(&mut r, 6);
        let u = random_nonzero_vec(&mut r, 6);
        let eta = MultiVector::vector(&v).wedge(&MultiVector::vector(&w)).unwrap().wedge(&MultiVector::vector(&u)).unwrap();
        prop_assume!(!eta.is_zero());
        let a = lagrangian_update(&base.a, &eta.coords).unwrap();
        for a1 in [A1::Zero, A1::One] {
            let ld = LagrangianData::new(a.clone(), a1).unwrap();
            let d = lagrangian_to_gm(&ld).unwrap();
            if d.n() >= 1 {
                prop_assert_eq!(gm_to_lagrangian(&d).unwrap(), ld);
            }
        }
    }
}

#[test]
fn decomposable_scan_finds_planted_vector() {
    let ld = fixtures::marked_lagrangian();
    let planted = MultiVector::e(6, &[1, 4, 6]).add(&MultiVector::e(6, &[1, 5, 6]));
    let [_, eta2] = fixtures::marked_etas();
    let found = scan_decomposables(&ld.a, &[planted, eta2]).unwrap();
    assert_eq!(found[0], Some(Subspace::coordinate(6, &[0, 5]).sum(&Subspace::span(&[gm_epw::matrix::vec_i64(&[0, 0, 0, 1, 1, 0])], 6)).unwrap()));
    assert!(found[1].is_none());
    assert!(scan_decomposables(&ld.a, &[MultiVector::e(6, &[1, 2, 3])]).is_err());
}
