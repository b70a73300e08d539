//! Truncated polynomial algebras `R[t] / (t^n)` and their nil ideals.

use crate::error::{Error, Result};
use crate::jordan::JordanAlgebra;
use crate::scalar::Real;
use nalgebra::{DMatrix, DVector};

/// Product of coefficient vectors modulo `t^n`.
pub fn trunc_mul<T: Real>(p: &DVector<T>, q: &DVector<T>) -> DVector<T> {
    let n = p.len();
    let mut out = DVector::zeros(n);
    for i in 0..n {
        for j in 0..(n - i) {
            out[i + j] += p[i] * q[j];
        }
    }
    out
}

/// Value of a coefficient vector at `t = 1`.
pub fn eval_at_one<T: Real>(p: &DVector<T>) -> T {
    p.iter().fold(T::zero(), |s, v| s + *v)
}

/// `gamma(p, q) = -(p q)(1)`.
pub fn trunc_gamma<T: Real>(n: usize) -> DMatrix<T> {
    DMatrix::from_fn(n, n, |i, j| if i + j < n { -T::one() } else { T::zero() })
}

/// `R[t] / (t^n)` together with its trace form `-(p q)(1)`.
pub fn trunc_poly_algebra<T: Real>(n: usize) -> Result<(JordanAlgebra<T>, DMatrix<T>)> {
    if n == 0 {
        return Err(Error::InvalidParameter("TruncPoly needs n >= 1".into()));
    }
    let mut unit = DVector::zeros(n);
    unit[0] = T::one();
    let alg = JordanAlgebra::from_products(n, Some(unit), format!("TruncPoly({n})"), |a, b| {
        let mut v = DVector::zeros(n);
        if a + b < n {
            v[a + b] = T::one();
        }
        v
    })?;
    Ok((alg, trunc_gamma(n)))
}

/// `log p` modulo `t^n` for `p_0 > 0`.
pub fn trunc_log<T: Real>(p: &DVector<T>) -> Result<DVector<T>> {
    let n = p.len();
    if p[0] <= T::zero() {
        return Err(Error::Domain("log needs a positive constant term".into()));
    }
    let p0 = p[0];
    let mut q = p / p0;
    q[0] = T::zero();
    let mut out = DVector::zeros(n);
    out[0] = p0.ln();
    let mut qk = q.clone();
    for k in 1..n {
        let sign = if k % 2 == 1 { T::one() } else { -T::one() };
        out += &qk * (sign / T::from_count(k));
        qk = trunc_mul(&qk, &q);
    }
    Ok(out)
}

/// `F(p) = (log p)(1)`.
pub fn trunc_potential<T: Real>(p: &DVector<T>) -> Result<T> {
    Ok(eval_at_one(&trunc_log(p)?))
}

/// The nil ideal `t R[t] / (t^n)`, basis `t, .., t^{n-1}`, with the
/// non-degenerate associative form `(p, q) -> [t^n](p q)` computed before
/// truncation.
pub fn nil_ideal_algebra<T: Real>(n: usize) -> Result<(JordanAlgebra<T>, DMatrix<T>)> {
    if n < 2 {
        return Err(Error::InvalidParameter("nil ideal needs n >= 2".into()));
    }
    let d = n - 1;
    // basis index a stands for t^{a+1}
    let alg = JordanAlgebra::from_products(d, None, format!("NilIdeal({n})"), |a, b| {
        let mut v = DVector::zeros(d);
        let deg = a + b + 2;
        if deg < n {
            v[deg - 1] = T::one();
        }
        v
    })?;
    let gamma = DMatrix::from_fn(d, d, |a, b| if a + b + 2 == n { T::one() } else { T::zero() });
    Ok((alg, gamma))
}
