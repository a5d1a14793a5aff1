//! Univariate polynomials over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{format_rat, Rat};

/// Coefficients low to high, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealRoot {
    Exact(Rat),
    /// Exactly one irrational root in the open interval.
    Isolated(Rat, Rat),
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// `a + b t`.
    pub fn linear(a: Rat, b: Rat) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
        Poly::new((0..n).map(|i| get(self, i) + get(o, i)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::constant(Rat::one()), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.lead().recip();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() * &lead_inv;
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &f * c;
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Exact quotient, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lead().recip())
    }

    /// Integer coefficients with gcd one and positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        Poly::new(ints.into_iter().map(|c| Rat::from_integer(c / &g)).collect())
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True when `self = c * o` for a nonzero constant `c`.
    pub fn proportional(&self, o: &Poly) -> bool {
        self.monic() == o.monic()
    }

    /// Multiplicity of `t0` as a root.
    pub fn order_at(&self, t0: &Rat) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Poly::linear(-t0.clone(), Rat::one());
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            k += 1;
        }
        k
    }

    /// Yun's algorithm: monic square-free factors with their multiplicities.
    pub fn squarefree_factors(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.divrem(&a0).0;
        let mut c = d.divrem(&a0).0;
        let mut dd = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = dd.divrem(&a).0;
            dd = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> Poly {
        self.squarefree_factors().iter().fold(Poly::constant(Rat::one()), |acc, (p, _)| acc.mul(p))
    }

    /// Newton interpolation through distinct nodes.
    pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Poly {
        assert_eq!(xs.len(), ys.len());
        let n = xs.len();
        let mut dd = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
            }
        }
        let mut p = Poly::zero();
        for i in (0..n).rev() {
            p = p.mul(&Poly::linear(-xs[i].clone(), Rat::one())).add(&Poly::constant(dd[i].clone()));
        }
        p
    }

    /// Real roots, each once, in increasing order.
    pub fn real_roots(&self) -> Vec<RealRoot> {
        let s = self.squarefree_part().primitive();
        if s.degree().unwrap_or(0) == 0 {
            return vec![];
        }
        let chain = sturm_chain(&s);
        let bound = cauchy_bound(&s);
        let mut stack = vec![(-bound.clone(), bound)];
        let mut found = Vec::new();
        while let Some((a, b)) = stack.pop() {
            let k = sign_changes(&chain, &a) - sign_changes(&chain, &b);
            if k == 0 {
                continue;
            }
            if k == 1 {
                found.push(classify_root(&s, &chain, a, b));
                continue;
            }
            let m = (&a + &b) / Rat::from_integer(BigInt::from(2));
            stack.push((a, m.clone()));
            stack.push((m, b));
        }
        found.sort_by(|x, y| root_key(x).cmp(root_key(y)));
        found
    }

    pub fn rational_roots(&self) -> Vec<Rat> {
        self.real_roots()
            .into_iter()
            .filter_map(|r| match r {
                RealRoot::Exact(x) => Some(x),
                RealRoot::Isolated(..) => None,
            })
            .collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rat).collect()
    }
}

fn root_key(r: &RealRoot) -> &Rat {
    match r {
        RealRoot::Exact(x) | RealRoot::Isolated(x, _) => x,
    }
}

fn cauchy_bound(p: &Poly) -> Rat {
    let lead = p.lead().abs();
    let m = p.coeffs.iter().map(|c| c.abs() / &lead).max().unwrap_or_else(Rat::zero);
    m + Rat::one()
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let r = chain[n - 2].divrem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive_keep_sign());
    }
    chain
}

impl Poly {
    // Positive rescaling keeps Sturm signs intact.
    fn primitive_keep_sign(&self) -> Poly {
        let p = self.primitive();
        if self.lead().is_negative() {
            p.neg()
        } else {
            p
        }
    }
}

fn sign_changes(chain: &[Poly], x: &Rat) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `s` square-free with exactly one root in `(a, b]`.
fn classify_root(s: &Poly, chain: &[Poly], mut a: Rat, mut b: Rat) -> RealRoot {
    if s.eval(&b).is_zero() {
        return RealRoot::Exact(b);
    }
    // A rational root p/q has q | lead, and two such rationals are at least 1/lead^2 apart.
    let lead = s.lead().abs();
    let width_goal = (&lead * &lead * Rat::from_integer(BigInt::from(4))).recip();
    let two = Rat::from_integer(BigInt::from(2));
    while &b - &a >= width_goal {
        let m = (&a + &b) / &two;
        if s.eval(&m).is_zero() {
            return RealRoot::Exact(m);
        }
        if sign_changes(chain, &a) > sign_changes(chain, &m) {
            b = m;
        } else {
            a = m;
        }
    }
    let cand = simplest_between(&a, &b);
    if s.eval(&cand).is_zero() {
        RealRoot::Exact(cand)
    } else {
        RealRoot::Isolated(a, b)
    }
}

/// Rational of least denominator in `[a, b]`.
fn simplest_between(a: &Rat, b: &Rat) -> Rat {
    let fl = a.floor();
    if &fl == a {
        return fl;
    }
    if &(&fl + Rat::one()) <= b {
        return fl + Rat::one();
    }
    let lo = (b - &fl).recip();
    let hi = (a - &fl).recip();
    fl + simplest_between(&lo, &hi).recip()
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.to_strings())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, rat};

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // t^2 - 1
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(p(&[-1, 1])));
        assert_eq!(a.gcd(&p(&[-1, 1]).mul(&p(&[2, 1]))), p(&[-1, 1]));
        assert!(p(&[1, 0, 1]).div_exact(&b).is_none());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = p(&[3, -2, 0, 5, 1]);
        let xs: Vec<Rat> = (0..5).map(rat).collect();
        let ys: Vec<Rat> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(Poly::interpolate(&xs, &ys), f);
        let xs: Vec<Rat> = (0..9).map(|i| frac(i, 3)).collect();
        let ys: Vec<Rat> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(Poly::interpolate(&xs, &ys), f);
    }

    #[test]
    fn yun_factorization() {
        // (t-1)^3 (t+2)^2 (t^2+1)
        let f = p(&[-1, 1]).pow(3).mul(&p(&[2, 1]).pow(2)).mul(&p(&[1, 0, 1])).scale(&rat(7));
        let fs = f.squarefree_factors();
        assert_eq!(fs, vec![(p(&[1, 0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
        assert_eq!(f.order_at(&rat(1)), 3);
        assert_eq!(f.order_at(&rat(-2)), 2);
        assert_eq!(f.order_at(&rat(0)), 0);
    }

    #[test]
    fn real_roots_mixed() {
        // (3t - 2)(t^2 - 2)(t + 5)^2
        let f = p(&[-2, 3]).mul(&p(&[-2, 0, 1])).mul(&p(&[5, 1]).pow(2));
        let roots = f.real_roots();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots[0], RealRoot::Exact(rat(-5)));
        assert!(matches!(roots[1], RealRoot::Isolated(..)));
        assert_eq!(roots[2], RealRoot::Exact(frac(2, 3)));
        assert!(matches!(roots[3], RealRoot::Isolated(..)));
        if let RealRoot::Isolated(a, b) = &roots[3] {
            assert!(a * a < rat(2) && b * b > rat(2));
        }
        assert_eq!(f.rational_roots(), vec![rat(-5), frac(2, 3)]);
        assert!(p(&[1, 0, 1]).real_roots().is_empty());
    }

    #[test]
    fn rational_root_with_large_denominator() {
        let f = p(&[-1_000_003, 999_983]).mul(&p(&[-3, 0, 0, 1]));
        assert_eq!(f.rational_roots(), vec![frac(1_000_003, 999_983)]);
    }

    #[test]
    fn primitive_normalization() {
        let f = Poly::new(vec![frac(-1, 2), frac(3, 4), frac(-3, 2)]);
        assert_eq!(f.primitive(), p(&[2, -3, 6]));
    }
}
