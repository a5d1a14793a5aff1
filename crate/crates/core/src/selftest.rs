//! Quick invariant suite over the built-in fixtures, for `gmepw selftest`.

use std::time::Instant;

use num_traits::Zero;

use crate::correspondence::{dim_report, dualize, gm_to_lagrangian, hyperplane_section_lagrangian, is_lagrangian, lagrangian_to_gm};
use crate::epw::{stratum_poly_on_line, y_dual_stratum, y_stratum, z_stratum, LineKind};
use crate::error::Result;
use crate::exterior::{l3v5, v5, wedge_space};
use crate::fibration::{fibration1_fiber, fibration2_fiber};
use crate::fixtures;
use crate::gm::{DiscriminantOnLine, GmData, GmType, Membership};
use crate::io::{emit, parse, Document};
use crate::lagrangian_quadric::verify_lagrangian;
use crate::random::{random_decomposition, random_lagrangian, random_nonzero_vec, random_subspace, rng};
use crate::rat::Rat;
use crate::subspace::Subspace;

#[derive(Debug, Clone)]
pub struct SelfCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn() -> Result<std::result::Result<String, String>>;

fn v5_point(r: &mut crate::random::TestRng) -> Vec<Rat> {
    let mut v = random_nonzero_vec(r, 5);
    v.push(Rat::zero());
    v
}

fn lagrangian_quadrics() -> Result<std::result::Result<String, String>> {
    let mut r = rng(1);
    for m in 2..=4 {
        for _ in 0..4 {
            let dec = random_decomposition(&mut r, m);
            if let Err(e) = verify_lagrangian(&dec, &random_lagrangian(&mut r, &dec)) {
                return Ok(Err(format!("dimension {}: {e}", 2 * m)));
            }
        }
    }
    Ok(Ok("12 random Lagrangians in dimensions 4, 6, 8".into()))
}

fn fixture_types() -> Result<std::result::Result<String, String>> {
    let want = [GmType::Ordinary, GmType::Special, GmType::Ordinary, GmType::Ordinary, GmType::Ordinary];
    for ((name, d), t) in fixtures::gm_fixtures().into_iter().zip(want) {
        if d.validate()? != t {
            return Ok(Err(format!("{name} is not {t}")));
        }
    }
    Ok(Ok("5 GM fixtures validate".into()))
}

fn round_trips() -> Result<std::result::Result<String, String>> {
    for (name, d) in fixtures::gm_fixtures() {
        let ld = gm_to_lagrangian(&d)?;
        let back = lagrangian_to_gm(&ld)?;
        if back != d.canonical()? || gm_to_lagrangian(&back)? != ld {
            return Ok(Err(format!("{name}: round trip differs")));
        }
        if d.classify() != GmType::NonLci && d.opposite()?.opposite()? != d.canonical()? {
            return Ok(Err(format!("{name}: opposite is not an involution")));
        }
    }
    Ok(Ok("both directions and opposite on 5 fixtures".into()))
}

fn kernels_and_dimensions() -> Result<std::result::Result<String, String>> {
    let mut r = rng(3);
    for (name, d) in fixtures::gm_fixtures() {
        let ld = gm_to_lagrangian(&d)?;
        if dim_report(&ld)?.predicted_n != d.n() {
            return Ok(Err(format!("{name}: dimension formula")));
        }
        for _ in 0..10 {
            let v = GmData::random_point_off_v5(&mut r);
            let inter = ld.a.intersect(&wedge_space(&Subspace::span(&[v.clone()], 6), 2, &v5())?)?.dim();
            if d.kernel_at(&v).dim() != inter || y_stratum(&ld.a, &v)? != inter {
                return Ok(Err(format!("{name}: corank of q(v) differs from the stratum")));
            }
        }
    }
    Ok(Ok("dimension formula and 50 kernel checks".into()))
}

fn certificates() -> Result<std::result::Result<String, String>> {
    let a = fixtures::fivefold_lagrangian().a;
    let mut r = rng(4);
    let y = stratum_poly_on_line(&a, LineKind::Y, &[random_nonzero_vec(&mut r, 6), random_nonzero_vec(&mut r, 6)], 20)?;
    let vs: Vec<Vec<Rat>> = (0..4).map(|_| random_nonzero_vec(&mut r, 6)).collect();
    let z = stratum_poly_on_line(&a, LineKind::Z, &vs, 20)?;
    if (y.degree, z.degree) != (6, 4) {
        return Ok(Err(format!("degrees {} and {}", y.degree, z.degree)));
    }
    Ok(Ok("Y_A sextic and Z_A quartic on the fivefold".into()))
}

fn discriminants() -> Result<std::result::Result<String, String>> {
    let mut r = rng(5);
    for (name, d) in fixtures::gm_fixtures() {
        let va = random_nonzero_vec(&mut r, 6);
        let vb = GmData::random_point_off_v5(&mut r);
        match d.discriminant_on_line(&va, &vb)? {
            DiscriminantOnLine::Curve { dis_poly, .. } => {
                let ld = gm_to_lagrangian(&d)?;
                let cert = stratum_poly_on_line(&ld.a, LineKind::Y, &[va, vb], 8)?;
                if dis_poly.squarefree_part().monic() != cert.poly.squarefree_part().monic() {
                    return Ok(Err(format!("{name}: Dis and Y_A differ on a line")));
                }
            }
            DiscriminantOnLine::WholeLine => return Ok(Err(format!("{name}: discriminant vanishes on a line"))),
        }
    }
    Ok(Ok("exact division and Dis = Y_A on one line per fixture".into()))
}

fn duality() -> Result<std::result::Result<String, String>> {
    let mut r = rng(6);
    for (name, ld) in fixtures::lagrangian_fixtures() {
        let dual = dualize(&ld)?;
        if dualize(&dual)?.a != ld.a {
            return Ok(Err(format!("{name}: (A^⊥)^⊥ ≠ A")));
        }
        for _ in 0..5 {
            let f = random_nonzero_vec(&mut r, 6);
            let v3 = random_subspace(&mut r, 6, 3);
            if y_dual_stratum(&ld.a, &crate::epw::hyperplane(&f)?)? != y_stratum(&dual.a, &f)?
                || z_stratum(&ld.a, &v3)? != z_stratum(&dual.a, &v3.annihilator())?
            {
                return Ok(Err(format!("{name}: dual strata differ")));
            }
        }
        if y_dual_stratum(&ld.a, &v5())? != ld.a.intersect(&l3v5())?.dim() {
            return Ok(Err(format!("{name}: [V5] stratum")));
        }
    }
    Ok(Ok("7 Lagrangian fixtures".into()))
}

fn fibrations() -> Result<std::result::Result<String, String>> {
    let mut r = rng(7);
    for (name, d) in fixtures::gm_fixtures() {
        let ld = gm_to_lagrangian(&d)?;
        for _ in 0..10 {
            let v = v5_point(&mut r);
            let s = random_subspace(&mut r, 5, 3);
            let v3 = Subspace::span(&s.basis_vecs().into_iter().map(|mut x| {
                x.push(Rat::zero());
                x
            }).collect::<Vec<_>>(), 6);
            if !fibration1_fiber(&ld, &v)?.agree || !fibration2_fiber(&ld, &v3)?.agree {
                return Ok(Err(format!("{name}: two paths disagree")));
            }
        }
    }
    let om = fixtures::omega_lagrangian();
    let f1 = fibration1_fiber(&om, &fixtures::omega_sigma1_point())?;
    let f2 = fibration2_fiber(&om, &fixtures::omega_sigma2_plane())?;
    if !(f1.agree && f1.sigma_level == 1 && f2.agree && f2.sigma_level == 1) {
        return Ok(Err("ω fixture Σ points".into()));
    }
    Ok(Ok("100 queries plus the ω Σ1/Σ2 points".into()))
}

fn hyperplane_updates() -> Result<std::result::Result<String, String>> {
    let a = fixtures::fivefold_lagrangian().a;
    let mut r = rng(8);
    let l3 = l3v5();
    for _ in 0..5 {
        let eta = l3.combine(&random_nonzero_vec(&mut r, 10));
        let a2 = hyperplane_section_lagrangian(&a, &eta)?;
        if !is_lagrangian(&a2) || a2.intersect(&a)?.dim() != 9 {
            return Ok(Err("update is not a Lagrangian meeting A in dimension 9".into()));
        }
    }
    Ok(Ok("5 random η0".into()))
}

fn hull() -> Result<std::result::Result<String, String>> {
    for (name, d) in fixtures::gm_fixtures() {
        if d.classify() != GmType::Ordinary {
            continue;
        }
        for seed in 0..10 {
            let w = d.hull_point_sample(seed)?;
            if d.membership(&w)? == Membership::Off {
                return Ok(Err(format!("{name}: hull point violates a V5 quadric")));
            }
        }
    }
    Ok(Ok("10 points per ordinary fixture".into()))
}

fn documents() -> Result<std::result::Result<String, String>> {
    let mut docs: Vec<Document> = fixtures::gm_fixtures().into_iter().map(|(_, d)| Document::Gm(d)).collect();
    docs.extend(fixtures::lagrangian_fixtures().into_iter().map(|(_, l)| Document::Lagrangian(l)));
    for d in &docs {
        let text = emit(d);
        if emit(&parse(&text)?) != text {
            return Ok(Err(format!("{} document does not round trip", d.kind())));
        }
    }
    Ok(Ok(format!("{} fixture documents", docs.len())))
}

pub fn run() -> Vec<SelfCheck> {
    let checks: [(&'static str, Check); 11] = [
        ("lagrangian-quadrics", lagrangian_quadrics),
        ("fixture-types", fixture_types),
        ("round-trips", round_trips),
        ("kernels", kernels_and_dimensions),
        ("certificates", certificates),
        ("discriminant", discriminants),
        ("duality", duality),
        ("fibrations", fibrations),
        ("hyperplane-update", hyperplane_updates),
        ("hull", hull),
        ("documents", documents),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let t = Instant::now();
            let (passed, detail) = match f() {
                Ok(Ok(d)) => (true, d),
                Ok(Err(d)) => (false, d),
                Err(e) => (false, e.to_string()),
            };
            SelfCheck { name, passed, detail, millis: t.elapsed().as_millis() }
        })
        .collect()
}
