//! Central finite differences of scalar functions.
//!
//! Steps are `1e-5 (1 + |x|)` for first and second derivatives and
//! `1e-3 (1 + |x|)` for third and fourth.  The higher orders combine steps
//! `h` and `2h` by Richardson extrapolation.

use crate::scalar::Real;
use crate::tensor::{Tensor3, Tensor4};
use nalgebra::{DMatrix, DVector};

pub fn step_low<T: Real>(x: &DVector<T>) -> T {
    T::lit(1e-5) * (T::one() + x.norm())
}

pub fn step_high<T: Real>(x: &DVector<T>) -> T {
    T::lit(1e-3) * (T::one() + x.norm())
}

// Sum over sign patterns of f(x + h sum_i s_i d_i) * prod s_i.
fn stencil<T: Real, F: Fn(&DVector<T>) -> T>(f: &F, x: &DVector<T>, dirs: &[&DVector<T>], h: T) -> T {
    let k = dirs.len();
    let mut total = T::zero();
    for mask in 0..(1usize << k) {
        let mut p = x.clone();
        let mut sign = T::one();
        for (i, d) in dirs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                p.axpy(h, d, T::one());
            } else {
                p.axpy(-h, d, T::one());
                sign = -sign;
            }
        }
        total += sign * f(&p);
    }
    total / (T::lit(2.0) * h).powi(k as i32)
}

/// Mixed directional derivative `D^k f(x)[d_1, .., d_k]` with the default
/// step for its order.
pub fn directional<T: Real, F: Fn(&DVector<T>) -> T>(f: &F, x: &DVector<T>, dirs: &[&DVector<T>]) -> T {
    if dirs.len() <= 2 {
        stencil(f, x, dirs, step_low(x))
    } else {
        let h = step_high(x);
        let a = stencil(f, x, dirs, h);
        let b = stencil(f, x, dirs, h * T::lit(2.0));
        (a * T::lit(4.0) - b) / T::lit(3.0)
    }
}

fn basis<T: Real>(n: usize) -> Vec<DVector<T>> {
    (0..n)
        .map(|i| {
            let mut v = DVector::zeros(n);
            v[i] = T::one();
            v
        })
        .collect()
}

pub fn gradient<T: Real, F: Fn(&DVector<T>) -> T>(f: &F, x: &DVector<T>) -> DVector<T> {
    let b = basis(x.len());
    DVector::from_fn(x.len(), |i, _| directional(f, x, &[&b[i]]))
}

pub fn hessian<T: Real, F: Fn(&DVector<T>) -> T>(f: &F, x: &DVector<T>) -> DMatrix<T> {
    let n = x.len();
    let b = basis(n);
    let mut h = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = directional(f, x, &[&b[i], &b[j]]);
            h[(i, j)] = v;
            h[(j, i)] = v;
        }
    }
    h
}

pub fn third<T: Real, F: Fn(&DVector<T>) -> T>(f: &F, x: &DVector<T>) -> Tensor3<T> {
    let n = x.len();
    let b = basis(n);
    let mut t = Tensor3::zeros(n);
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let v = directional(f, x, &[&b[i], &b[j], &b[k]]);
                for (p, q, r) in perms3(i, j, k) {
                    t.set(p, q, r, v);
                }
            }
        }
    }
    t
}

pub fn fourth<T: Real, F: Fn(&DVector<T>) -> T>(f: &F, x: &DVector<T>) -> Tensor4<T> {
    let n = x.len();
    let b = basis(n);
    let mut t = Tensor4::zeros(n);
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                for l in k..n {
                    let v = directional(f, x, &[&b[i], &b[j], &b[k], &b[l]]);
                    let idx = [i, j, k, l];
                    for p in PERMS4.iter() {
                        t.set(idx[p[0]], idx[p[1]], idx[p[2]], idx[p[3]], v);
                    }
                }
            }
        }
    }
    t
}

fn perms3(i: usize, j: usize, k: usize) -> [(usize, usize, usize); 6] {
    [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)]
}

const PERMS4: [[usize; 4]; 24] = [
    [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
    [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
    [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0], [2, 3, 0, 1], [2, 3, 1, 0],
    [3, 0, 1, 2], [3, 0, 2, 1], [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
];
