//! Dense linear algebra helpers on top of nalgebra.

use crate::scalar::{Complex, Real};
use nalgebra::{DMatrix, DVector};

/// Solves `a x = b`, returning `None` when `a` is numerically singular.
pub fn solve<T: Real>(a: &DMatrix<T>, b: &DVector<T>) -> Option<DVector<T>> {
    a.clone().lu().solve(b)
}

/// Solves `a X = B` column by column.
pub fn solve_mat<T: Real>(a: &DMatrix<T>, b: &DMatrix<T>) -> Option<DMatrix<T>> {
    a.clone().lu().solve(b)
}

pub fn det<T: Real>(a: &DMatrix<T>) -> T {
    a.clone().lu().determinant()
}

pub fn det_complex<T: Real>(a: &DMatrix<Complex<T>>) -> Complex<T> {
    a.clone().lu().determinant()
}

/// Smallest and largest singular values.
pub fn singular_extremes<T: Real>(a: &DMatrix<T>) -> (T, T) {
    let sv = a.clone().singular_values();
    let mut lo = T::max_value().unwrap_or(T::lit(f64::MAX));
    let mut hi = T::zero();
    for s in sv.iter() {
        if *s < lo {
            lo = *s;
        }
        if *s > hi {
            hi = *s;
        }
    }
    (lo, hi)
}

/// Reciprocal 2-norm condition number, `0` for a singular matrix.
pub fn rcond<T: Real>(a: &DMatrix<T>) -> T {
    let (lo, hi) = singular_extremes(a);
    if hi == T::zero() {
        T::zero()
    } else {
        lo / hi
    }
}

/// Matrix exponential (Pade approximation with scaling and squaring).
pub fn expm<T: Real>(a: &DMatrix<T>) -> DMatrix<T> {
    a.exp()
}

pub fn frobenius<T: Real>(a: &DMatrix<T>) -> T {
    a.norm()
}

/// `u^T m v`.
pub fn bilinear<T: Real>(m: &DMatrix<T>, u: &DVector<T>, v: &DVector<T>) -> T {
    u.dot(&(m * v))
}

/// Symmetric part `(m + m^T) / 2`.
pub fn symmetrize<T: Real>(m: &DMatrix<T>) -> DMatrix<T> {
    (m + m.transpose()) * T::lit(0.5)
}

/// Relative difference `|a - b| / (|a| + |b| + floor)`.
pub fn rel_diff<T: Real>(a: T, b: T, floor: T) -> T {
    (a - b).abs() / (a.abs() + b.abs() + floor)
}
