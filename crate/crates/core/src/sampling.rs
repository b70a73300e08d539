//! Seeded random sampling helpers.

use crate::jordan::{Element, JordanAlgebra};
use crate::scalar::Real;
use nalgebra::DVector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub const DEFAULT_SEED: u64 = 42;

pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard normal vector.
pub fn gaussian<T: Real>(n: usize, rng: &mut Rng) -> DVector<T> {
    DVector::from_fn(n, |_, _| T::lit(StandardNormal.sample(rng)))
}

/// Unit vector with a uniformly random direction.
pub fn unit_vector<T: Real>(n: usize, rng: &mut Rng) -> DVector<T> {
    loop {
        let g = gaussian::<T>(n, rng);
        let norm = g.norm();
        if norm > T::lit(1e-8) {
            return g / norm;
        }
    }
}

/// `true` when the segment from `a` to `b` stays invertible at `checks`
/// evenly spaced points.
pub fn segment_invertible<T: Real>(j: &JordanAlgebra<T>, a: &Element<T>, b: &Element<T>, checks: usize) -> bool {
    (0..=checks).all(|i| {
        let t = T::from_count(i) / T::from_count(checks);
        let p = a + (b - a) * t;
        j.is_invertible_default(&p)
    })
}

/// A point `e + r u` with `|u| = 1`, `r` uniform in `[0, radius |e|]`, joined
/// to the unit by an invertible segment.
pub fn domain_point<T: Real>(j: &JordanAlgebra<T>, radius: f64, rng: &mut Rng) -> Option<Element<T>> {
    use rand::Rng as _;
    let e = j.unit()?.clone();
    let scale = e.norm() * T::lit(radius);
    for _ in 0..100 {
        let u = unit_vector::<T>(j.dim(), rng);
        let r = T::lit(rng.gen_range(0.0..1.0)) * scale;
        let x = &e + u * r;
        if segment_invertible(j, &e, &x, 16) {
            return Some(x);
        }
    }
    None
}

/// A non-Jordan deformation of `j` that keeps `e` as unit and `gamma`
/// associative.
///
/// Adds `eps * gamma^{-1} S(u, v, .)` to the product, where `S` is a random
/// totally symmetric trilinear form annihilated by `e` in every slot. Used as
/// a negative control for identities that hold only for Jordan algebras.
pub fn cubic_perturbation<T: Real>(
    j: &JordanAlgebra<T>,
    gamma: &nalgebra::DMatrix<T>,
    eps: T,
    rng: &mut Rng,
) -> crate::error::Result<JordanAlgebra<T>> {
    use crate::error::Error;
    let n = j.dim();
    let e = j.require_unit()?.clone();
    let ge = gamma * &e;
    let gee = e.dot(&ge);
    // Q e = 0
    let q = nalgebra::DMatrix::<T>::identity(n, n) - &e * ge.transpose() / gee;
    let ginv = gamma
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Degenerate("gamma is singular".into()))?;
    let raw = gaussian::<T>(n * n * n, rng);
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let mut r = vec![T::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let perms = [idx(a, b, c), idx(a, c, b), idx(b, a, c), idx(b, c, a), idx(c, a, b), idx(c, b, a)];
                r[idx(a, b, c)] = perms.iter().fold(T::zero(), |s, &p| s + raw[p]) / T::lit(6.0);
            }
        }
    }
    // S_{abd} = R_{ijk} Q_{ia} Q_{jb} Q_{kd}, one index at a time.
    let contract = |t: &[T], slot: usize| {
        let mut out = vec![T::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut s = T::zero();
                    for i in 0..n {
                        let (src, qv) = match slot {
                            0 => (idx(i, b, c), q[(i, a)]),
                            1 => (idx(a, i, c), q[(i, b)]),
                            _ => (idx(a, b, i), q[(i, c)]),
                        };
                        s += t[src] * qv;
                    }
                    out[idx(a, b, c)] = s;
                }
            }
        }
        out
    };
    let s = contract(&contract(&contract(&r, 0), 1), 2);
    let mut c = j.structure().to_vec();
    for g in 0..n {
        for a in 0..n {
            for b in 0..n {
                let mut add = T::zero();
                for d in 0..n {
                    add += ginv[(g, d)] * s[idx(a, b, d)];
                }
                c[(g * n + a) * n + b] += eps * add;
            }
        }
    }
    JordanAlgebra::from_structure(n, c, Some(e), &format!("{} (perturbed)", j.label()))
}
