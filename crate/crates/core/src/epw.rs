//! EPW strata of a Lagrangian `A ⊂ Λ³V6`: `Y_A`, its dual, the incidence `Ŷ_A`, the quartic
//! strata `Z_A`, and univariate certificates along lines and pencils.

use num_traits::Zero;

use crate::error::{input, violation, Error, Result};
use crate::exterior::{exterior_power, is_decomposable, v6, wedge_coords, wedge_space, MultiVector};
use crate::matrix::{is_zero_vec, RatMatrix};
use crate::poly::{Poly, RealRoot};
use crate::rat::Rat;
use crate::subspace::Subspace;

fn point(v: &[Rat]) -> Result<Subspace> {
    if v.len() != 6 {
        return Err(Error::Dimension("points of P(V6) have 6 coordinates".into()));
    }
    if is_zero_vec(v) {
        return input("zero vector is not a point");
    }
    Ok(Subspace::span(&[v.to_vec()], 6))
}

fn check_a(a: &Subspace) -> Result<()> {
    if a.ambient_dim() != 20 {
        return Err(Error::Dimension("A must live in Λ³V6".into()));
    }
    Ok(())
}

/// `dim(A ∩ v∧Λ²V6)`.
pub fn y_stratum(a: &Subspace, v: &[Rat]) -> Result<usize> {
    check_a(a)?;
    Ok(a.intersect(&wedge_space(&point(v)?, 2, &v6())?)?.dim())
}

/// `dim(A ∩ Λ³V5')`.
pub fn y_dual_stratum(a: &Subspace, v5p: &Subspace) -> Result<usize> {
    check_a(a)?;
    if v5p.ambient_dim() != 6 || v5p.dim() != 5 {
        return input("V5' must be a hyperplane of V6");
    }
    Ok(a.intersect(&exterior_power(v5p, 3))?.dim())
}

/// `dim(A ∩ v∧Λ²V5')` for `v ∈ V5'`.
pub fn y_hat_member(a: &Subspace, v: &[Rat], v5p: &Subspace) -> Result<usize> {
    check_a(a)?;
    if v5p.ambient_dim() != 6 || v5p.dim() != 5 {
        return input("V5' must be a hyperplane of V6");
    }
    if !v5p.contains(v) {
        return input("v must lie in V5'");
    }
    Ok(a.intersect(&wedge_space(&point(v)?, 2, v5p)?)?.dim())
}

/// `dim(A ∩ V6∧Λ²V3)`.
pub fn z_stratum(a: &Subspace, v3: &Subspace) -> Result<usize> {
    check_a(a)?;
    if v3.ambient_dim() != 6 || v3.dim() != 3 {
        return input("V3 must be a 3-dimensional subspace of V6");
    }
    Ok(a.intersect(&wedge_space(&v6(), 2, v3)?)?.dim())
}

/// The hyperplane `ker f`.
pub fn hyperplane(f: &[Rat]) -> Result<Subspace> {
    if f.len() != 6 || is_zero_vec(f) {
        return input("a hyperplane needs a nonzero functional on V6");
    }
    Ok(crate::subspace::kernel(&RatMatrix::from_rows(vec![f.to_vec()], 6)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    /// `v(t) = base + t·dir` in `P(V6)`.
    Y,
    /// `V3(t) = span(u1, u2, u3 + t·u4)` in `Gr(3, V6)`.
    Z,
}

impl LineKind {
    pub fn name(self) -> &'static str {
        match self {
            LineKind::Y => "y",
            LineKind::Z => "z",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineCertificate {
    pub kind: LineKind,
    /// `[base, dir]` for `Y`, `[u1, u2, u3, u4]` for `Z`.
    pub vectors: Vec<Vec<Rat>>,
    /// Primitive integer polynomial whose roots are the parameters of the stratum.
    pub poly: Poly,
    pub degree: usize,
    /// Monic square-free factors with multiplicity.
    pub factors: Vec<(Poly, usize)>,
    pub real_roots: Vec<RealRoot>,
    pub rational_roots: Vec<Rat>,
    pub checked_points: usize,
}

/// Extends independent vectors to a basis of `V6` with standard vectors.
fn extend_to_basis(vs: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let mut acc = Subspace::span(vs, 6);
    if acc.dim() != vs.len() {
        return input("the given vectors are linearly dependent");
    }
    let mut extra = Vec::new();
    for i in 0..6 {
        let e = crate::matrix::unit_vec(6, i);
        if !acc.contains(&e) {
            acc = acc.sum(&Subspace::span(&[e.clone()], 6))?;
            extra.push(e);
        }
    }
    Ok(extra)
}

fn wedge3(x: &[Rat], y: &[Rat], z: &[Rat]) -> Vec<Rat> {
    wedge_coords(6, 2, &wedge_coords(6, 1, x, 1, y), 1, z)
}

fn at(base: &[Rat], dir: &[Rat], t: &Rat) -> Vec<Rat> {
    base.iter().zip(dir).map(|(b, d)| b + t * d).collect()
}

/// Basis of the moving Lagrangian at parameter `t`, valid for every finite `t`.
fn moving_rows(kind: LineKind, vs: &[Vec<Rat>], extra: &[Vec<Rat>], t: &Rat) -> Vec<Vec<Rat>> {
    let mut rows = Vec::with_capacity(10);
    match kind {
        LineKind::Y => {
            let v = at(&vs[0], &vs[1], t);
            let mut others = vec![vs[1].clone()];
            others.extend_from_slice(extra);
            for i in 0..others.len() {
                for j in i + 1..others.len() {
                    rows.push(wedge3(&v, &others[i], &others[j]));
                }
            }
        }
        LineKind::Z => {
            let (u1, u2) = (&vs[0], &vs[1]);
            let w = at(&vs[2], &vs[3], t);
            rows.push(wedge3(u1, u2, &w));
            let mut comp = vec![vs[3].clone()];
            comp.extend_from_slice(extra);
            for c in &comp {
                rows.push(wedge3(c, u1, u2));
                rows.push(wedge3(c, u1, &w));
                rows.push(wedge3(c, u2, &w));
            }
        }
    }
    rows
}

fn stratum_at(a: &Subspace, kind: LineKind, vs: &[Vec<Rat>], t: &Rat) -> Result<usize> {
    match kind {
        LineKind::Y => y_stratum(a, &at(&vs[0], &vs[1], t)),
        LineKind::Z => z_stratum(a, &Subspace::span(&[vs[0].clone(), vs[1].clone(), at(&vs[2], &vs[3], t)], 6)),
    }
}

/// Sample parameters used to cross-check a certificate.
pub fn sample_parameters(count: usize) -> Vec<Rat> {
    (0..count)
        .map(|i| {
            let k = i as i64;
            let num = if k % 2 == 0 { k / 2 + 1 } else { -(k / 2) - 1 };
            Rat::new(num.into(), ((k % 3) + 1).into())
        })
        .collect()
}

/// `det[A | moving Lagrangian(t)]` as a polynomial, with the membership cross-check.
pub fn stratum_poly_on_line(a: &Subspace, kind: LineKind, vs: &[Vec<Rat>], samples: usize) -> Result<LineCertificate> {
    check_a(a)?;
    let need = match kind {
        LineKind::Y => 2,
        LineKind::Z => 4,
    };
    if vs.len() != need || vs.iter().any(|v| v.len() != 6) {
        return input(format!("{} line needs {need} vectors of V6", kind.name()));
    }
    if a.dim() != 10 {
        return input("A must be 10-dimensional");
    }
    let extra = extend_to_basis(vs)?;
    // rows depending on t: 6 for Y, 7 for Z
    let nodes = match kind {
        LineKind::Y => 7,
        LineKind::Z => 8,
    };
    let xs: Vec<Rat> = (0..nodes as i64).map(|i| Rat::from_integer(i.into())).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|t| RatMatrix::from_rows(moving_rows(kind, vs, &extra, t), 20).vstack(a.basis()).det())
        .collect();
    let raw = Poly::interpolate(&xs, &ys);
    if raw.is_zero() {
        return input(format!("stratum contains the whole {}", if kind == LineKind::Y { "line" } else { "pencil" }));
    }
    let poly = raw.primitive();
    let degree = poly.degree().unwrap();
    let factors = poly.squarefree_factors();
    let real_roots = poly.real_roots();
    let rational_roots = poly.rational_roots();
    // membership cross-check at sample parameters and at the rational roots
    let mut checked = 0;
    for t in sample_parameters(samples) {
        let member = stratum_at(a, kind, vs, &t)? > 0;
        if member != poly.eval(&t).is_zero() {
            return violation(format!("certificate disagrees with membership at t = {}", crate::rat::format_rat(&t)));
        }
        checked += 1;
    }
    for t in &rational_roots {
        let l = stratum_at(a, kind, vs, t)?;
        if l == 0 || poly.order_at(t) < l {
            return violation(format!("root t = {} is not a stratum point of matching order", crate::rat::format_rat(t)));
        }
        checked += 1;
    }
    Ok(LineCertificate { kind, vectors: vs.to_vec(), poly, degree, factors, real_roots, rational_roots, checked_points: checked })
}

/// Decomposability of candidates in `A`; `None` for indecomposable ones.
pub fn scan_decomposables(a: &Subspace, candidates: &[MultiVector]) -> Result<Vec<Option<Subspace>>> {
    check_a(a)?;
    candidates
        .iter()
        .map(|c| {
            if !a.contains(&c.coords) {
                return input(format!("candidate {c:?} is not in A"));
            }
            is_decomposable(c)
        })
        .collect()
}

/// Decomposable members of the pencil `a0 + t·a1 ⊂ A` at the given parameters. Not an
/// emptiness certificate.
pub fn scan_pencil(a: &Subspace, a0: &MultiVector, a1: &MultiVector, params: &[Rat]) -> Result<Vec<(Rat, Subspace)>> {
    scan_decomposables(a, &[a0.clone(), a1.clone()])?;
    let mut hits = Vec::new();
    for t in params {
        let x = a0.add(&a1.scale(t));
        if x.is_zero() {
            continue;
        }
        if let Some(v3) = is_decomposable(&x)? {
            hits.push((t.clone(), v3));
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{l3v5, v5};
    use crate::matrix::{unit_vec, vec_i64};

    fn e1_l2v6() -> Subspace {
        wedge_space(&Subspace::coordinate(6, &[0]), 2, &v6()).unwrap()
    }

    #[test]
    fn y_examples() {
        assert_eq!(y_stratum(&l3v5(), &unit_vec(6, 0)).unwrap(), 6);
        assert_eq!(y_stratum(&l3v5(), &unit_vec(6, 5)).unwrap(), 0);
        assert_eq!(y_stratum(&e1_l2v6(), &unit_vec(6, 1)).unwrap(), 4);
        assert!(y_stratum(&l3v5(), &vec![Rat::zero(); 6]).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(y_dual_stratum(&l3v5(), &v5()).unwrap(), 10);
        assert_eq!(y_dual_stratum(&l3v5(), &Subspace::coordinate(6, &[1, 2, 3, 4, 5])).unwrap(), 4);
        assert_eq!(y_hat_member(&l3v5(), &unit_vec(6, 0), &v5()).unwrap(), 6);
        assert!(y_hat_member(&l3v5(), &unit_vec(6, 5), &v5()).is_err());
    }

    #[test]
    fn z_examples() {
        let v3 = Subspace::coordinate(6, &[0, 1, 2]);
        // Λ³V5 ∩ V6∧Λ²V3 = V5∧Λ²V3
        assert_eq!(z_stratum(&l3v5(), &v3).unwrap(), 7);
        let w3 = Subspace::coordinate(6, &[3, 4, 5]);
        // e45∧V5: e145, e245, e345
        assert_eq!(z_stratum(&l3v5(), &w3).unwrap(), 3);
        assert!(z_stratum(&l3v5(), &Subspace::coordinate(6, &[0, 1])).is_err());
    }

    #[test]
    fn l3v5_line_has_single_root() {
        let c = stratum_poly_on_line(&l3v5(), LineKind::Y, &[vec_i64(&[1, 2, 0, -1, 1, 1]), vec_i64(&[0, 1, 1, 2, -1, 2])], 20).unwrap();
        assert_eq!(c.factors.len(), 1);
        assert_eq!(c.factors[0].1, 6);
        assert_eq!(c.rational_roots, vec![Rat::new((-1).into(), 2.into())]);
        assert!(c.checked_points >= 20);
    }

    #[test]
    fn whole_line_reported() {
        let err = stratum_poly_on_line(&e1_l2v6(), LineKind::Y, &[unit_vec(6, 1), unit_vec(6, 5)], 20).unwrap_err();
        assert!(err.to_string().contains("whole line"));
    }

    #[test]
    fn decomposable_scan() {
        let a = l3v5();
        let hits = scan_decomposables(&a, &[MultiVector::e(6, &[1, 2, 3])]).unwrap();
        assert_eq!(hits[0], Some(Subspace::coordinate(6, &[0, 1, 2])));
        assert!(scan_decomposables(&a, &[MultiVector::e(6, &[1, 2, 6])]).is_err());
        let p = scan_pencil(&a, &MultiVector::e(6, &[1, 2, 3]), &MultiVector::e(6, &[4, 5, 1]), &sample_parameters(5)).unwrap();
        assert!(p.is_empty());
    }
}
