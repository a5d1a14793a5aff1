//! Seeded generators for small exact test data.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lagrangian_quadric::{LagrangianDecomposition, QuadricOnSubspace};
use crate::matrix::{unit_vec, RatMatrix};
use crate::rat::{frac, rat, Rat};
use crate::subspace::Subspace;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mostly small integers, sometimes a small fraction.
pub fn random_rat(r: &mut TestRng) -> Rat {
    if r.gen_ratio(1, 5) {
        frac(r.gen_range(-4..=4), r.gen_range(1..=3))
    } else {
        rat(r.gen_range(-3..=3))
    }
}

pub fn random_vec(r: &mut TestRng, n: usize) -> Vec<Rat> {
    (0..n).map(|_| random_rat(r)).collect()
}

pub fn random_nonzero_vec(r: &mut TestRng, n: usize) -> Vec<Rat> {
    loop {
        let v = random_vec(r, n);
        if !crate::matrix::is_zero_vec(&v) {
            return v;
        }
    }
}

pub fn random_matrix(r: &mut TestRng, rows: usize, cols: usize) -> RatMatrix {
    RatMatrix::from_vec(rows, cols, (0..rows * cols).map(|_| random_rat(r)).collect())
}

pub fn random_invertible(r: &mut TestRng, n: usize) -> RatMatrix {
    loop {
        let m = random_matrix(r, n, n);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Integer matrix of determinant 1 with small entries; its inverse is integral too.
pub fn random_unimodular(r: &mut TestRng, n: usize) -> RatMatrix {
    let mut lo = RatMatrix::identity(n);
    let mut up = RatMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lo[(i, j)] = rat(r.gen_range(-1..=1));
            up[(j, i)] = rat(r.gen_range(-1..=1));
        }
    }
    let mut perm = RatMatrix::zeros(n, n);
    let mut idx: Vec<usize> = (0..n).collect();
    rand::seq::SliceRandom::shuffle(&mut idx[..], r);
    for (i, &j) in idx.iter().enumerate() {
        perm[(i, j)] = rat(1);
    }
    lo.mul(&up).mul(&perm)
}

/// Random symmetric matrix of the given rank.
pub fn random_symmetric(r: &mut TestRng, n: usize, rank: usize) -> RatMatrix {
    assert!(rank <= n);
    let mut d = RatMatrix::zeros(n, n);
    for i in 0..rank {
        let mut x = Rat::zero();
        while x.is_zero() {
            x = random_rat(r);
        }
        d[(i, i)] = x;
    }
    let b = random_unimodular(r, n);
    d.congruence(&b)
}

pub fn random_subspace(r: &mut TestRng, n: usize, dim: usize) -> Subspace {
    loop {
        let s = Subspace::row_space(&random_matrix(r, dim, n));
        if s.dim() == dim {
            return s;
        }
    }
}

/// Quadric on a random subspace of `k^m` with random rank.
pub fn random_quadric(r: &mut TestRng, m: usize) -> QuadricOnSubspace {
    let d = r.gen_range(0..=m);
    let rank = r.gen_range(0..=d);
    let span = random_subspace(r, m, d);
    QuadricOnSubspace::new(span, random_symmetric(r, d, rank)).unwrap()
}

fn shear(m: usize, s: &RatMatrix, upper: bool) -> RatMatrix {
    let mut g = RatMatrix::identity(2 * m);
    for i in 0..m {
        for j in 0..m {
            if upper {
                g[(i, m + j)] = s[(i, j)].clone();
            } else {
                g[(m + i, j)] = s[(i, j)].clone();
            }
        }
    }
    g
}

/// Random element of `Sp(2m)` for the standard form, acting on column vectors.
pub fn random_symplectic(r: &mut TestRng, m: usize) -> RatMatrix {
    let p = random_unimodular(r, m);
    let pit = p.inverse().unwrap().transpose();
    let mut g = p.block_diag(&pit);
    for k in 0..2 {
        let rank = r.gen_range(0..=m);
        let s = random_symmetric(r, m, rank);
        g = g.mul(&shear(m, &s, k == 0));
    }
    g
}

/// Random Lagrangian of the standard `k^m ⊕ k^m`, any position relative to the two summands.
pub fn random_standard_lagrangian(r: &mut TestRng, m: usize) -> Subspace {
    let mut gens = Vec::with_capacity(m);
    for i in 0..m {
        gens.push(if r.gen_bool(0.5) { unit_vec(2 * m, i) } else { unit_vec(2 * m, m + i) });
    }
    let mut a = Subspace::span(&gens, 2 * m);
    // shears with low-rank symmetric blocks keep some intersection with the summands
    let p = random_unimodular(r, m);
    let mut h = p.block_diag(&p.inverse().unwrap().transpose());
    for upper in [r.gen_bool(0.5), r.gen_bool(0.5)] {
        let rank = r.gen_range(0..=m.min(2));
        h = h.mul(&shear(m, &random_symmetric(r, m, rank), upper));
    }
    if r.gen_ratio(1, 8) {
        h = RatMatrix::identity(2 * m);
    }
    a = a.map(&h);
    a
}

/// Random Lagrangian of `dec`, in a frame adapted to `(l1, l2)`.
pub fn random_lagrangian(r: &mut TestRng, dec: &LagrangianDecomposition) -> Subspace {
    let m = dec.half();
    let std = random_standard_lagrangian(r, m);
    let frame = dec.frame();
    Subspace::row_space(&std.basis().mul(&frame))
}

/// Random decomposition of the standard space `k^m ⊕ k^m`.
pub fn random_decomposition(r: &mut TestRng, m: usize) -> LagrangianDecomposition {
    let std = LagrangianDecomposition::standard(m);
    let g = random_symplectic(r, m);
    let h = random_symplectic(r, m);
    LagrangianDecomposition::new(std.space.clone(), std.l1.map(&g), std.l2.map(&h.mul(&g))).unwrap_or_else(|_| {
        LagrangianDecomposition::new(std.space.clone(), std.l1.map(&g), std.l2.map(&g)).unwrap()
    })
}
