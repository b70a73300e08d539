//! Pfaffians of skew-symmetric matrices.

use crate::error::{Error, Result};
use nalgebra::{ComplexField, DMatrix};

/// [`pfaffian`] that rejects non-square and odd-sized input.
pub fn checked_pfaffian<K: ComplexField + Copy>(a: &DMatrix<K>) -> Result<K> {
    if a.nrows() != a.ncols() {
        return Err(Error::InvalidParameter("pfaffian needs a square matrix".into()));
    }
    if a.nrows() % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "pfaffian of odd size {} is undefined",
            a.nrows()
        )));
    }
    Ok(pfaffian(a))
}

/// Pfaffian by skew-symmetric Gaussian elimination with pivoting
/// (Parlett-Reid).  Normalized so that `pf([[0, 1], [-1, 0]]) = 1`.
/// Odd sizes give zero.
pub fn pfaffian<K: ComplexField + Copy>(a: &DMatrix<K>) -> K {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "pfaffian needs a square matrix");
    if n % 2 == 1 {
        return K::zero();
    }
    let mut a = a.clone();
    let mut pf = K::one();
    let mut k = 0;
    while k + 1 < n {
        let mut kp = k + 1;
        let mut best = a[(k + 1, k)].modulus();
        for i in (k + 2)..n {
            let m = a[(i, k)].modulus();
            if m > best {
                best = m;
                kp = i;
            }
        }
        if kp != k + 1 {
            a.swap_rows(k + 1, kp);
            a.swap_columns(k + 1, kp);
            pf = -pf;
        }
        if a[(k + 1, k)] == K::zero() {
            return K::zero();
        }
        let piv = a[(k, k + 1)];
        pf *= piv;
        if k + 2 < n {
            let tau: Vec<K> = ((k + 2)..n).map(|j| a[(k, j)] / piv).collect();
            let col: Vec<K> = ((k + 2)..n).map(|i| a[(i, k + 1)]).collect();
            for (ii, i) in ((k + 2)..n).enumerate() {
                for (jj, j) in ((k + 2)..n).enumerate() {
                    let upd = tau[ii] * col[jj] - col[ii] * tau[jj];
                    a[(i, j)] += upd;
                }
            }
        }
        k += 2;
    }
    pf
}
