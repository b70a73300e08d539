//! Complex Jordan algebras and their realification.

use crate::error::{check_dim, Error, Result};
use crate::jordan::JordanAlgebra;
use crate::scalar::{Complex, Real};
use nalgebra::ComplexField;
use nalgebra::{DMatrix, DVector};

type C<T> = Complex<T>;

/// Complex Jordan algebra given by complex structure constants.
#[derive(Clone, Debug)]
pub struct ComplexAlgebra<T: Real> {
    dim: usize,
    structure: Vec<C<T>>,
    unit: DVector<C<T>>,
}

impl<T: Real> ComplexAlgebra<T> {
    pub fn from_products<F>(dim: usize, unit: Vec<C<T>>, mut product: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Vec<C<T>>,
    {
        check_dim(dim, unit.len())?;
        let mut c = vec![C::new(T::zero(), T::zero()); dim * dim * dim];
        for a in 0..dim {
            for b in a..dim {
                let p = product(a, b);
                check_dim(dim, p.len())?;
                for g in 0..dim {
                    c[(g * dim + a) * dim + b] = p[g];
                    c[(g * dim + b) * dim + a] = p[g];
                }
            }
        }
        let alg = ComplexAlgebra {
            dim,
            structure: c,
            unit: DVector::from_vec(unit),
        };
        let dev = (alg.mul_op(&alg.unit) - DMatrix::identity(dim, dim))
            .iter()
            .fold(T::zero(), |m, v| m.max(v.modulus()));
        if dev > T::lit(1e-9) {
            return Err(Error::Inconsistent("complex unit does not act as identity".into()));
        }
        Ok(alg)
    }

    /// Complex dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &DVector<C<T>> {
        &self.unit
    }

    pub fn mul_op(&self, x: &DVector<C<T>>) -> DMatrix<C<T>> {
        let n = self.dim;
        DMatrix::from_fn(n, n, |g, a| {
            let mut s = C::new(T::zero(), T::zero());
            for b in 0..n {
                s += self.structure[(g * n + a) * n + b] * x[b];
            }
            s
        })
    }

    pub fn mul(&self, x: &DVector<C<T>>, y: &DVector<C<T>>) -> DVector<C<T>> {
        self.mul_op(x) * y
    }

    pub fn quad_op(&self, x: &DVector<C<T>>) -> DMatrix<C<T>> {
        let l = self.mul_op(x);
        let x2 = &l * x;
        let two = C::new(T::lit(2.0), T::zero());
        (&l * &l).map(|v| v * two) - self.mul_op(&x2)
    }

    /// Complex trace `tr L_x`.
    pub fn trace_t(&self, x: &DVector<C<T>>) -> C<T> {
        self.mul_op(x).trace()
    }

    /// Complex trace form `g_C(x, y) = t_C(x y)`.
    pub fn bilinear_g(&self, x: &DVector<C<T>>, y: &DVector<C<T>>) -> C<T> {
        self.trace_t(&self.mul(x, y))
    }

    /// `(Re x, Im x)` to complex coordinates.
    pub fn to_complex(&self, x: &DVector<T>) -> DVector<C<T>> {
        let n = self.dim;
        DVector::from_fn(n, |i, _| C::new(x[i], x[n + i]))
    }

    pub fn to_real(&self, z: &DVector<C<T>>) -> DVector<T> {
        let n = self.dim;
        DVector::from_fn(2 * n, |i, _| if i < n { z[i].re } else { z[i - n].im })
    }

    /// Real form `[[Re M, -Im M], [Im M, Re M]]` of a complex operator.
    pub fn realify_operator(m: &DMatrix<C<T>>) -> DMatrix<T> {
        let n = m.nrows();
        DMatrix::from_fn(2 * n, 2 * n, |r, s| {
            let v = m[(r % n, s % n)];
            match (r < n, s < n) {
                (true, true) | (false, false) => v.re,
                (true, false) => -v.im,
                (false, true) => v.im,
            }
        })
    }

    /// The underlying real algebra in coordinates `(Re z, Im z)`.
    pub fn realify(&self, label: &str) -> Result<JordanAlgebra<T>> {
        let n = self.dim;
        let i = C::new(T::zero(), T::one());
        let factor = |p: usize| if p < n { (p, C::new(T::one(), T::zero())) } else { (p - n, i) };
        let unit = self.to_real(&self.unit);
        JordanAlgebra::from_products(2 * n, Some(unit), label, |p, q| {
            let (a, fa) = factor(p);
            let (b, fb) = factor(q);
            let f = fa * fb;
            DVector::from_fn(2 * n, |r, _| {
                let w = self.structure[((r % n) * n + a) * n + b] * f;
                if r < n {
                    w.re
                } else {
                    w.im
                }
            })
        })
    }
}
