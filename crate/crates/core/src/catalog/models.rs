//! Concrete representations behind the catalog families.
//!
//! Every model works on coordinate vectors with complex entries.  Real
//! families only ever see real coordinates; complex families are complex
//! bilinear in their coordinates and get realified afterwards.

use super::octonion::HypercomplexTable;
use super::pfaffian::pfaffian;
use crate::linalg;
use crate::scalar::{Complex, Real};
use nalgebra::{DMatrix, DVector};

type C<T> = Complex<T>;

fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

fn zero<T: Real>() -> C<T> {
    c(T::zero(), T::zero())
}

fn re<T: Real>(x: T) -> C<T> {
    c(x, T::zero())
}

pub(crate) trait Model<T: Real> {
    fn ncoords(&self) -> usize;
    fn mul(&self, x: &[C<T>], y: &[C<T>]) -> Vec<C<T>>;
    fn unit(&self) -> Vec<C<T>>;
    /// Generic norm `f` with `det P_x = (f(x) / f(e))^k`.
    fn norm(&self, x: &[C<T>]) -> C<T>;
    /// Coordinates of `diag(signs)`, used for twisted isotopes.
    fn diag(&self, _signs: &[T]) -> Option<Vec<C<T>>> {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    Sym,
    Full,
    Herm,
    FullQuat,
    HermQuat,
    SkewHermQuat,
    SkewSplit,
}

pub(crate) struct MatrixModel<T: Real> {
    shape: Shape,
    m: usize,
    // Product (A W B + B W A) / 2 when set.
    twist: Option<DMatrix<C<T>>>,
    unit: DMatrix<C<T>>,
}

impl<T: Real> MatrixModel<T> {
    pub fn new(shape: Shape, m: usize) -> Self {
        let size = match shape {
            Shape::Sym | Shape::Full | Shape::Herm => m,
            _ => 2 * m,
        };
        let i = c(T::zero(), T::one());
        let (twist, unit) = match shape {
            Shape::SkewHermQuat => {
                // Lambda = diag(i I, -i I); unit is -Lambda.
                let lam = DMatrix::from_fn(size, size, |r, s| {
                    if r != s {
                        zero()
                    } else if r < m {
                        i
                    } else {
                        -i
                    }
                });
                let u = -lam.clone();
                (Some(lam), u)
            }
            Shape::SkewSplit => {
                // J = [[0, I], [-I, 0]]; unit is -J.
                let j = DMatrix::from_fn(size, size, |r, s| {
                    if s == r + m {
                        re(T::one())
                    } else if r == s + m {
                        re(-T::one())
                    } else {
                        zero()
                    }
                });
                let u = -j.clone();
                (Some(j), u)
            }
            _ => (None, DMatrix::identity(size, size)),
        };
        MatrixModel {
            shape,
            m,
            twist,
            unit,
        }
    }

    fn size(&self) -> usize {
        self.unit.nrows()
    }

    // Fills a Hermitian m x m block from real coordinates, returns count used.
    fn herm_block(&self, x: &[C<T>], z: &mut DMatrix<C<T>>) -> usize {
        let m = self.m;
        let mut k = 0;
        for i in 0..m {
            for j in i..m {
                if i == j {
                    z[(i, i)] = re(x[k].re);
                    k += 1;
                } else {
                    let v = c(x[k].re, x[k + 1].re);
                    z[(i, j)] = v;
                    z[(j, i)] = v.conj();
                    k += 2;
                }
            }
        }
        k
    }

    fn herm_coords(&self, z: &DMatrix<C<T>>, out: &mut Vec<C<T>>) {
        let m = self.m;
        for i in 0..m {
            for j in i..m {
                if i == j {
                    out.push(re(z[(i, i)].re));
                } else {
                    out.push(re(z[(i, j)].re));
                    out.push(re(z[(i, j)].im));
                }
            }
        }
    }

    // Assembles [[Z, W], [-conj W, conj Z]].
    fn quat(&self, z: &DMatrix<C<T>>, w: &DMatrix<C<T>>) -> DMatrix<C<T>> {
        let m = self.m;
        DMatrix::from_fn(2 * m, 2 * m, |r, s| match (r < m, s < m) {
            (true, true) => z[(r, s)],
            (true, false) => w[(r, s - m)],
            (false, true) => -w[(r - m, s)].conj(),
            (false, false) => z[(r - m, s - m)].conj(),
        })
    }

    pub fn to_matrix(&self, x: &[C<T>]) -> DMatrix<C<T>> {
        let m = self.m;
        match self.shape {
            Shape::Sym => {
                let mut a = DMatrix::from_element(m, m, zero());
                let mut k = 0;
                for i in 0..m {
                    for j in i..m {
                        a[(i, j)] = x[k];
                        a[(j, i)] = x[k];
                        k += 1;
                    }
                }
                a
            }
            Shape::Full => DMatrix::from_fn(m, m, |i, j| x[i * m + j]),
            Shape::Herm => {
                let mut a = DMatrix::from_element(m, m, zero());
                self.herm_block(x, &mut a);
                a
            }
            Shape::FullQuat => {
                let z = DMatrix::from_fn(m, m, |i, j| {
                    let k = 4 * (i * m + j);
                    c(x[k].re, x[k + 1].re)
                });
                let w = DMatrix::from_fn(m, m, |i, j| {
                    let k = 4 * (i * m + j);
                    c(x[k + 2].re, x[k + 3].re)
                });
                self.quat(&z, &w)
            }
            Shape::HermQuat => {
                let mut z = DMatrix::from_element(m, m, zero());
                let mut k = self.herm_block(x, &mut z);
                let mut w = DMatrix::from_element(m, m, zero());
                for i in 0..m {
                    for j in (i + 1)..m {
                        let v = c(x[k].re, x[k + 1].re);
                        w[(i, j)] = v;
                        w[(j, i)] = -v;
                        k += 2;
                    }
                }
                self.quat(&z, &w)
            }
            Shape::SkewHermQuat => {
                let mut z = DMatrix::from_element(m, m, zero());
                let mut w = DMatrix::from_element(m, m, zero());
                let mut k = 0;
                for i in 0..m {
                    for j in i..m {
                        if i == j {
                            z[(i, i)] = c(T::zero(), x[k].re);
                            k += 1;
                        } else {
                            let v = c(x[k].re, x[k + 1].re);
                            z[(i, j)] = v;
                            z[(j, i)] = -v.conj();
                            k += 2;
                        }
                    }
                }
                for i in 0..m {
                    for j in i..m {
                        let v = c(x[k].re, x[k + 1].re);
                        w[(i, j)] = v;
                        w[(j, i)] = v;
                        k += 2;
                    }
                }
                self.quat(&z, &w)
            }
            Shape::SkewSplit => {
                let n = 2 * m;
                let mut a = DMatrix::from_element(n, n, zero());
                let mut k = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        a[(i, j)] = x[k];
                        a[(j, i)] = -x[k];
                        k += 1;
                    }
                }
                a
            }
        }
    }

    pub fn from_matrix(&self, a: &DMatrix<C<T>>) -> Vec<C<T>> {
        let m = self.m;
        let mut out = Vec::with_capacity(self.ncoords());
        match self.shape {
            Shape::Sym => {
                for i in 0..m {
                    for j in i..m {
                        out.push(a[(i, j)]);
                    }
                }
            }
            Shape::Full => {
                for i in 0..m {
                    for j in 0..m {
                        out.push(a[(i, j)]);
                    }
                }
            }
            Shape::Herm => self.herm_coords(a, &mut out),
            Shape::FullQuat => {
                for i in 0..m {
                    for j in 0..m {
                        let z = a[(i, j)];
                        let w = a[(i, m + j)];
                        out.extend([re(z.re), re(z.im), re(w.re), re(w.im)]);
                    }
                }
            }
            Shape::HermQuat => {
                let z = a.view((0, 0), (m, m)).into_owned();
                self.herm_coords(&z, &mut out);
                for i in 0..m {
                    for j in (i + 1)..m {
                        let w = a[(i, m + j)];
                        out.extend([re(w.re), re(w.im)]);
                    }
                }
            }
            Shape::SkewHermQuat => {
                for i in 0..m {
                    for j in i..m {
                        let z = a[(i, j)];
                        if i == j {
                            out.push(re(z.im));
                        } else {
                            out.extend([re(z.re), re(z.im)]);
                        }
                    }
                }
                for i in 0..m {
                    for j in i..m {
                        let w = a[(i, m + j)];
                        out.extend([re(w.re), re(w.im)]);
                    }
                }
            }
            Shape::SkewSplit => {
                let n = 2 * m;
                for i in 0..n {
                    for j in (i + 1)..n {
                        out.push(a[(i, j)]);
                    }
                }
            }
        }
        out
    }
}

impl<T: Real> Model<T> for MatrixModel<T> {
    fn ncoords(&self) -> usize {
        let m = self.m;
        match self.shape {
            Shape::Sym => m * (m + 1) / 2,
            Shape::Full | Shape::Herm => m * m,
            Shape::FullQuat => 4 * m * m,
            Shape::HermQuat => m * (2 * m - 1),
            Shape::SkewHermQuat => m * (2 * m + 1),
            Shape::SkewSplit => m * (2 * m - 1),
        }
    }

    fn mul(&self, x: &[C<T>], y: &[C<T>]) -> Vec<C<T>> {
        let a = self.to_matrix(x);
        let b = self.to_matrix(y);
        let half = re(T::lit(0.5));
        let p = match &self.twist {
            None => &a * &b + &b * &a,
            Some(w) => &a * w * &b + &b * w * &a,
        };
        self.from_matrix(&p.map(|v| v * half))
    }

    fn unit(&self) -> Vec<C<T>> {
        self.from_matrix(&self.unit)
    }

    fn norm(&self, x: &[C<T>]) -> C<T> {
        let a = self.to_matrix(x);
        match self.shape {
            Shape::SkewSplit => pfaffian(&a),
            _ => linalg::det_complex(&a),
        }
    }

    fn diag(&self, signs: &[T]) -> Option<Vec<C<T>>> {
        if signs.len() != self.m {
            return None;
        }
        let n = self.size();
        let d = DMatrix::from_fn(n, n, |r, s| {
            if r == s {
                re(signs[r % self.m])
            } else {
                zero()
            }
        });
        match self.shape {
            Shape::Sym | Shape::Herm | Shape::HermQuat | Shape::Full => Some(self.from_matrix(&d)),
            _ => None,
        }
    }
}

/// `x y = (e^T Q x) y + (e^T Q y) x - (x^T Q y) e`.
pub(crate) struct QuadModel<T: Real> {
    q: DMatrix<C<T>>,
    e: DVector<C<T>>,
}

impl<T: Real> QuadModel<T> {
    pub fn new(q: &DMatrix<T>, e: &DVector<T>) -> Self {
        QuadModel {
            q: q.map(re),
            e: e.map(re),
        }
    }

    fn form(&self, x: &[C<T>], y: &[C<T>]) -> C<T> {
        let n = self.e.len();
        let mut s = zero();
        for i in 0..n {
            for j in 0..n {
                s += x[i] * self.q[(i, j)] * y[j];
            }
        }
        s
    }
}

impl<T: Real> Model<T> for QuadModel<T> {
    fn ncoords(&self) -> usize {
        self.e.len()
    }

    fn mul(&self, x: &[C<T>], y: &[C<T>]) -> Vec<C<T>> {
        let e = self.e.as_slice();
        let ex = self.form(e, x);
        let ey = self.form(e, y);
        let xy = self.form(x, y);
        (0..e.len())
            .map(|i| ex * y[i] + ey * x[i] - xy * e[i])
            .collect()
    }

    fn unit(&self) -> Vec<C<T>> {
        self.e.as_slice().to_vec()
    }

    fn norm(&self, x: &[C<T>]) -> C<T> {
        self.form(x, x)
    }
}

/// The one-dimensional field itself.
pub(crate) struct ScalarModel;

impl<T: Real> Model<T> for ScalarModel {
    fn ncoords(&self) -> usize {
        1
    }

    fn mul(&self, x: &[C<T>], y: &[C<T>]) -> Vec<C<T>> {
        vec![x[0] * y[0]]
    }

    fn unit(&self) -> Vec<C<T>> {
        vec![re(T::one())]
    }

    fn norm(&self, x: &[C<T>]) -> C<T> {
        x[0]
    }
}

/// Polynomials modulo `t^n`.
pub(crate) struct TruncModel {
    pub n: usize,
}

impl<T: Real> Model<T> for TruncModel {
    fn ncoords(&self) -> usize {
        self.n
    }

    fn mul(&self, x: &[C<T>], y: &[C<T>]) -> Vec<C<T>> {
        let mut out = vec![zero(); self.n];
        for i in 0..self.n {
            for j in 0..(self.n - i) {
                out[i + j] += x[i] * y[j];
            }
        }
        out
    }

    fn unit(&self) -> Vec<C<T>> {
        let mut u = vec![zero(); self.n];
        u[0] = re(T::one());
        u
    }

    fn norm(&self, x: &[C<T>]) -> C<T> {
        x[0]
    }
}

/// Hermitian 3 x 3 matrices over an octonion algebra.
///
/// Coordinates: `a11, a22, a33`, then the eight coefficients of each of
/// `a12`, `a23`, `a31`.
pub(crate) struct OctModel {
    pub table: HypercomplexTable,
}

type Oct<T> = [C<T>; 8];

impl OctModel {
    fn entries<T: Real>(&self, x: &[C<T>]) -> [[Oct<T>; 3]; 3] {
        let mut a = [[[zero(); 8]; 3]; 3];
        for i in 0..3 {
            a[i][i][0] = x[i];
        }
        let pairs = [(0usize, 1usize), (1, 2), (2, 0)];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let mut o = [zero(); 8];
            o.copy_from_slice(&x[3 + 8 * k..3 + 8 * k + 8]);
            a[j][i] = self.table.conj(&o);
            a[i][j] = o;
        }
        a
    }

    fn det<T: Real>(&self, x: &[C<T>]) -> C<T> {
        let a = self.entries(x);
        let (a11, a22, a33) = (a[0][0][0], a[1][1][0], a[2][2][0]);
        let t = &self.table;
        let triple = t.mul(&t.mul(&a[0][1], &a[1][2]), &a[2][0]);
        let two = re(T::lit(2.0));
        a11 * a22 * a33 - a11 * t.norm(&a[1][2]) - a22 * t.norm(&a[2][0]) - a33 * t.norm(&a[0][1])
            + two * triple[0]
    }
}

impl<T: Real> Model<T> for OctModel {
    fn ncoords(&self) -> usize {
        27
    }

    fn mul(&self, x: &[C<T>], y: &[C<T>]) -> Vec<C<T>> {
        let a = self.entries(x);
        let b = self.entries(y);
        let t = &self.table;
        let half = re(T::lit(0.5));
        let prod = |i: usize, j: usize| {
            let mut s = [zero(); 8];
            for k in 0..3 {
                let p = t.mul(&a[i][k], &b[k][j]);
                let q = t.mul(&b[i][k], &a[k][j]);
                for r in 0..8 {
                    s[r] += (p[r] + q[r]) * half;
                }
            }
            s
        };
        let mut out = Vec::with_capacity(27);
        for i in 0..3 {
            out.push(prod(i, i)[0]);
        }
        for &(i, j) in &[(0usize, 1usize), (1, 2), (2, 0)] {
            out.extend_from_slice(&prod(i, j));
        }
        out
    }

    fn unit(&self) -> Vec<C<T>> {
        let mut u = vec![zero(); 27];
        for i in 0..3 {
            u[i] = re(T::one());
        }
        u
    }

    fn norm(&self, x: &[C<T>]) -> C<T> {
        self.det(x)
    }

    fn diag(&self, signs: &[T]) -> Option<Vec<C<T>>> {
        if signs.len() != 3 {
            return None;
        }
        let mut u = vec![zero(); 27];
        for i in 0..3 {
            u[i] = re(signs[i]);
        }
        Some(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::octonion::OctonionKind;

    fn coords(xs: &[f64]) -> Vec<C<f64>> {
        xs.iter().map(|&v| re(v)).collect()
    }

    #[test]
    fn roundtrip_coordinates() {
        for shape in [
            Shape::Sym,
            Shape::Full,
            Shape::Herm,
            Shape::FullQuat,
            Shape::HermQuat,
            Shape::SkewHermQuat,
            Shape::SkewSplit,
        ] {
            let model = MatrixModel::<f64>::new(shape, 3);
            let n = model.ncoords();
            let x = coords(&(0..n).map(|k| (k as f64 * 0.37).sin()).collect::<Vec<_>>());
            let back = model.from_matrix(&model.to_matrix(&x));
            for (a, b) in x.iter().zip(back.iter()) {
                assert!((a - b).norm() < 1e-15, "{shape:?}");
            }
            let e = model.unit();
            let xe = model.mul(&x, &e);
            for (a, b) in x.iter().zip(xe.iter()) {
                assert!((a - b).norm() < 1e-14, "{shape:?} unit");
            }
        }
    }

    #[test]
    fn unit_norms() {
        for shape in [Shape::Sym, Shape::HermQuat, Shape::SkewHermQuat, Shape::SkewSplit] {
            let model = MatrixModel::<f64>::new(shape, 3);
            let f = model.norm(&model.unit());
            assert!((f.norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn octonion_unit_and_det() {
        let model = OctModel {
            table: HypercomplexTable::new(OctonionKind::Split),
        };
        let e: Vec<C<f64>> = Model::<f64>::unit(&model);
        assert!((model.det(&e) - re(1.0)).norm() < 1e-15);
        let mut x = e.clone();
        x[0] = re(2.0);
        x[1] = re(3.0);
        assert!((model.det(&x) - re(6.0)).norm() < 1e-14);
    }

    #[test]
    fn quad_unit() {
        let q = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 1.0, -1.0]));
        let e = DVector::from_vec(vec![1.0, 0.0, 0.0]);
        let model = QuadModel::new(&q, &e);
        let x = coords(&[2.0, 0.0, 1.0]);
        assert_eq!(model.norm(&x), re(3.0));
        let p = model.mul(&x, &model.unit());
        assert_eq!(p, x);
    }
}
