//! Real Jordan algebras given by structure constants.
//!
//! An algebra of dimension `n` stores `C[g][a][b]`, the `g`-th coordinate of
//! `e_a * e_b`, symmetric in `a` and `b`.  Elements are plain column vectors
//! in the chosen basis.

use crate::error::{check_dim, Error, Result};
use crate::linalg;
use crate::report::ResidualReport;
use crate::sampling;
use crate::scalar::Real;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

pub type Element<T> = DVector<T>;

/// A simple factor inside a direct sum, located by its coordinate range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub offset: usize,
    pub dim: usize,
    pub label: String,
}

impl Block {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.dim
    }
}

#[derive(Clone, Debug)]
pub struct JordanAlgebra<T: Real> {
    dim: usize,
    structure: Vec<T>,
    unit: Option<Element<T>>,
    blocks: Vec<Block>,
    label: String,
    // tau[b] = t(e_b)
    tau: DVector<T>,
    g: DMatrix<T>,
}

impl<T: Real> JordanAlgebra<T> {
    /// Builds an algebra from a flat tensor laid out as `[(g * n + a) * n + b]`.
    ///
    /// The tensor is symmetrized in its lower indices.  A supplied unit must
    /// act as the identity.
    pub fn from_structure(
        dim: usize,
        structure: Vec<T>,
        unit: Option<Element<T>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        check_dim(dim * dim * dim, structure.len())?;
        let mut c = structure;
        let half = T::lit(0.5);
        for g in 0..dim {
            for a in 0..dim {
                for b in (a + 1)..dim {
                    let i = (g * dim + a) * dim + b;
                    let j = (g * dim + b) * dim + a;
                    let s = (c[i] + c[j]) * half;
                    c[i] = s;
                    c[j] = s;
                }
            }
        }
        let label = label.into();
        let mut tau = DVector::zeros(dim);
        for b in 0..dim {
            let mut s = T::zero();
            for a in 0..dim {
                s += c[(a * dim + a) * dim + b];
            }
            tau[b] = s;
        }
        let mut g = DMatrix::zeros(dim, dim);
        for a in 0..dim {
            for b in 0..dim {
                let mut s = T::zero();
                for k in 0..dim {
                    s += c[(k * dim + a) * dim + b] * tau[k];
                }
                g[(a, b)] = s;
            }
        }
        let alg = JordanAlgebra {
            dim,
            structure: c,
            unit: None,
            blocks: vec![Block {
                offset: 0,
                dim,
                label: label.clone(),
            }],
            label,
            tau,
            g,
        };
        match unit {
            None => Ok(alg),
            Some(e) => alg.with_unit(e),
        }
    }

    /// Builds an algebra from the products of basis vectors.
    pub fn from_products<F>(
        dim: usize,
        unit: Option<Element<T>>,
        label: impl Into<String>,
        mut product: F,
    ) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Element<T>,
    {
        let mut c = vec![T::zero(); dim * dim * dim];
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
        Self::from_structure(dim, c, unit, label)
    }

    fn with_unit(self, e: Element<T>) -> Result<Self> {
        let tol = T::machine_eps() * T::lit(1e4) * T::from_count(self.dim);
        self.with_unit_tol(e, tol)
    }

    /// Attaches a unit, accepting `|L_e - I| <= tol (1 + |C| |e|)`.
    pub fn with_unit_tol(mut self, e: Element<T>, tol: T) -> Result<Self> {
        check_dim(self.dim, e.len())?;
        let l = self.mul_op(&e);
        let dev = (&l - DMatrix::identity(self.dim, self.dim)).amax();
        let scale = T::one() + self.structure_amax() * e.amax();
        if dev > tol * scale {
            return Err(Error::Inconsistent(format!(
                "unit does not act as identity (deviation {:e})",
                dev.as_f64()
            )));
        }
        self.unit = Some(e);
        Ok(self)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        if self.blocks.len() == 1 {
            self.blocks[0].label = self.label.clone();
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn unit(&self) -> Option<&Element<T>> {
        self.unit.as_ref()
    }

    pub fn require_unit(&self) -> Result<&Element<T>> {
        self.unit
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{} has no unit", self.label)))
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Flat structure tensor, index `[(g * n + a) * n + b]`.
    pub fn structure(&self) -> &[T] {
        &self.structure
    }

    #[inline]
    pub fn coef(&self, g: usize, a: usize, b: usize) -> T {
        self.structure[(g * self.dim + a) * self.dim + b]
    }

    pub fn structure_amax(&self) -> T {
        self.structure
            .iter()
            .fold(T::zero(), |m, v| if v.abs() > m { v.abs() } else { m })
    }

    pub fn basis(&self, a: usize) -> Element<T> {
        let mut v = DVector::zeros(self.dim);
        v[a] = T::one();
        v
    }

    /// The product `x * y`.
    ///
    /// # Panics
    /// Panics when an argument has the wrong length.
    pub fn mul(&self, x: &Element<T>, y: &Element<T>) -> Element<T> {
        self.mul_op(x) * y
    }

    pub fn square(&self, x: &Element<T>) -> Element<T> {
        self.mul(x, x)
    }

    /// Multiplication operator `L_x`.
    pub fn mul_op(&self, x: &Element<T>) -> DMatrix<T> {
        let n = self.dim;
        assert_eq!(x.len(), n, "element length does not match algebra dimension");
        let mut l = DMatrix::zeros(n, n);
        for g in 0..n {
            for a in 0..n {
                let row = &self.structure[(g * n + a) * n..(g * n + a + 1) * n];
                let mut s = T::zero();
                for b in 0..n {
                    s += row[b] * x[b];
                }
                l[(g, a)] = s;
            }
        }
        l
    }

    /// Quadratic representation `P_x = 2 L_x^2 - L_{x^2}`.
    pub fn quad_op(&self, x: &Element<T>) -> DMatrix<T> {
        let l = self.mul_op(x);
        let x2 = &l * x;
        &l * &l * T::lit(2.0) - self.mul_op(&x2)
    }

    /// `t(x) = tr L_x`.
    pub fn trace_t(&self, x: &Element<T>) -> T {
        self.tau.dot(x)
    }

    /// Generic trace form `g(x, y) = t(x * y)`.
    pub fn bilinear_g(&self, x: &Element<T>, y: &Element<T>) -> T {
        linalg::bilinear(&self.g, x, y)
    }

    /// Gram matrix of `g` in the working basis.
    pub fn trace_form(&self) -> &DMatrix<T> {
        &self.g
    }

    /// Normalized Jordan identity defect `|x(x^2 y) - x^2(x y)|`.
    pub fn jordan_identity_residual(&self, x: &Element<T>, y: &Element<T>) -> T {
        let x2 = self.square(x);
        let lhs = self.mul(x, &self.mul(&x2, y));
        let rhs = self.mul(&x2, &self.mul(x, y));
        let scale = x.norm().powi(3) * y.norm() * (T::one() + self.structure_amax()).powi(3);
        (lhs - rhs).norm() / (scale + tiny())
    }

    /// Largest Jordan identity defect over `samples` seeded Gaussian pairs.
    pub fn check_jordan_identity(&self, samples: usize, seed: u64, tol: f64) -> ResidualReport {
        let mut rng = sampling::rng(seed);
        let values: Vec<f64> = (0..samples)
            .map(|_| {
                let x = sampling::gaussian::<T>(self.dim, &mut rng);
                let y = sampling::gaussian::<T>(self.dim, &mut rng);
                self.jordan_identity_residual(&x, &y).as_f64()
            })
            .collect();
        ResidualReport::from_values("jordan-identity", &values, tol)
    }

    /// Normalized defect of `P_{P_x y} = P_x P_y P_x`.
    pub fn fundamental_formula_residual(&self, x: &Element<T>, y: &Element<T>) -> T {
        let px = self.quad_op(x);
        let py = self.quad_op(y);
        let lhs = self.quad_op(&(&px * y));
        let rhs = &px * &py * &px;
        (&lhs - &rhs).norm() / (px.norm() * px.norm() * py.norm() + tiny())
    }

    /// `|det P_x| > tol`.
    pub fn is_invertible(&self, x: &Element<T>, tol: T) -> bool {
        linalg::det(&self.quad_op(x)).abs() > tol
    }

    /// Reciprocal condition number of `P_x`.
    pub fn invertibility_rcond(&self, x: &Element<T>) -> T {
        linalg::rcond(&self.quad_op(x))
    }

    /// Invertibility test with the default relative threshold on `P_x`.
    pub fn is_invertible_default(&self, x: &Element<T>) -> bool {
        self.invertibility_rcond(x) > default_rcond::<T>()
    }

    /// `x^{-1} = P_x^{-1} x`.
    pub fn inverse(&self, x: &Element<T>) -> Result<Element<T>> {
        self.require_unit()?;
        check_dim(self.dim, x.len())?;
        let p = self.quad_op(x);
        if linalg::rcond(&p) <= default_rcond::<T>() {
            return Err(Error::NotInvertible {
                det: linalg::det(&p).as_f64(),
            });
        }
        linalg::solve(&p, x).ok_or(Error::NotInvertible { det: 0.0 })
    }

    /// `u^k` with `u^0 = e`.
    pub fn power(&self, u: &Element<T>, k: usize) -> Result<Element<T>> {
        check_dim(self.dim, u.len())?;
        if k == 0 {
            return Ok(self.require_unit()?.clone());
        }
        let l = self.mul_op(u);
        let mut p = u.clone();
        for _ in 1..k {
            p = &l * p;
        }
        Ok(p)
    }

    /// `exp(u) = exp(L_u) e`.
    pub fn exp(&self, u: &Element<T>) -> Result<Element<T>> {
        let e = self.require_unit()?;
        check_dim(self.dim, u.len())?;
        Ok(linalg::expm(&self.mul_op(u)) * e)
    }

    /// Isotope with product `x *_u y = x(yu) + y(xu) - (xy)u` and unit `u^{-1}`.
    pub fn isotope(&self, u: &Element<T>) -> Result<Self> {
        let uinv = self.inverse(u)?;
        let n = self.dim;
        let lu = self.mul_op(u);
        let mut c = vec![T::zero(); n * n * n];
        for b in 0..n {
            let eb = self.basis(b);
            let lb = self.mul_op(&eb);
            let lbu = self.mul_op(&(&lu * &eb));
            let liso = &lb * &lu - &lu * &lb + lbu;
            for g in 0..n {
                for a in 0..n {
                    c[(g * n + a) * n + b] = liso[(g, a)];
                }
            }
        }
        let label = format!("{} isotope", self.label);
        let mut iso = Self::from_structure(n, c, Some(uinv), label)?;
        iso.blocks = self.blocks.clone();
        Ok(iso)
    }

    /// Isotope operators `L^{(u)}_x = L_x L_u - L_u L_x + L_{xu}`.
    pub fn isotope_mul_op(&self, u: &Element<T>, x: &Element<T>) -> DMatrix<T> {
        let lx = self.mul_op(x);
        let lu = self.mul_op(u);
        let xu = &lx * u;
        &lx * &lu - &lu * &lx + self.mul_op(&xu)
    }

    /// Rewrites the algebra in the basis given by the columns of `s`.
    pub fn change_basis(&self, s: &DMatrix<T>) -> Result<Self> {
        let n = self.dim;
        if s.nrows() != n || s.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: s.nrows(),
            });
        }
        let lu = s.clone().lu();
        let cols: Vec<Element<T>> = (0..n).map(|a| s.column(a).into_owned()).collect();
        let mut err = None;
        let alg = Self::from_products(n, None, self.label.clone(), |a, b| {
            let p = self.mul(&cols[a], &cols[b]);
            lu.solve(&p).unwrap_or_else(|| {
                err = Some(Error::Degenerate("basis change matrix is singular".into()));
                DVector::zeros(n)
            })
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        match &self.unit {
            Some(e) => {
                let ue = lu
                    .solve(e)
                    .ok_or_else(|| Error::Degenerate("basis change matrix is singular".into()))?;
                alg.with_unit(ue)
            }
            None => Ok(alg),
        }
    }

    /// Direct sum with block diagonal structure.
    pub fn direct_sum(parts: &[JordanAlgebra<T>]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("empty direct sum".into()));
        }
        let n: usize = parts.iter().map(|p| p.dim).sum();
        let mut c = vec![T::zero(); n * n * n];
        let mut blocks = Vec::new();
        let mut off = 0;
        for p in parts {
            let m = p.dim;
            for g in 0..m {
                for a in 0..m {
                    for b in 0..m {
                        c[((off + g) * n + off + a) * n + off + b] = p.coef(g, a, b);
                    }
                }
            }
            for blk in &p.blocks {
                blocks.push(Block {
                    offset: off + blk.offset,
                    dim: blk.dim,
                    label: blk.label.clone(),
                });
            }
            off += m;
        }
        let unit = if parts.iter().all(|p| p.unit.is_some()) {
            let mut e = DVector::zeros(n);
            let mut off = 0;
            for p in parts {
                e.rows_mut(off, p.dim).copy_from(p.unit.as_ref().unwrap());
                off += p.dim;
            }
            Some(e)
        } else {
            None
        };
        let label = parts
            .iter()
            .map(|p| p.label.clone())
            .collect::<Vec<_>>()
            .join(" + ");
        let mut alg = Self::from_structure(n, c, unit, label)?;
        alg.blocks = blocks;
        Ok(alg)
    }

    /// Non-degeneracy of `g`, measured by its reciprocal condition number.
    pub fn is_semisimple(&self, tol: T) -> bool {
        linalg::rcond(&self.g) > tol
    }

    /// `tr(L_u^k) = 0` for `k = 1..=n` on every sample.
    pub fn is_nil(&self, samples: &[Element<T>], tol: T) -> bool {
        samples.iter().all(|u| {
            let l = self.mul_op(u);
            let scale = T::one() + l.norm();
            let mut p = l.clone();
            for k in 1..=self.dim {
                if k > 1 {
                    p = &p * &l;
                }
                if p.trace().abs() > tol * scale.powi(k as i32) {
                    return false;
                }
            }
            true
        })
    }

    /// `tr(L_u L_v) = 0` on all basis pairs.
    pub fn has_vanishing_trace_pairing(&self, tol: T) -> bool {
        let ops: Vec<DMatrix<T>> = (0..self.dim).map(|a| self.mul_op(&self.basis(a))).collect();
        let scale = T::one() + self.structure_amax();
        for a in 0..self.dim {
            for b in a..self.dim {
                if (&ops[a] * &ops[b]).trace().abs() > tol * scale * scale {
                    return false;
                }
            }
        }
        true
    }

    /// `[L_a, L_b] = 0` on all basis pairs, which for a commutative product
    /// is associativity.
    pub fn is_associative(&self, tol: T) -> bool {
        let ops: Vec<DMatrix<T>> = (0..self.dim).map(|a| self.mul_op(&self.basis(a))).collect();
        let scale = T::one() + self.structure_amax();
        for a in 0..self.dim {
            for b in (a + 1)..self.dim {
                let c = &ops[a] * &ops[b] - &ops[b] * &ops[a];
                if c.amax() > tol * scale * scale {
                    return false;
                }
            }
        }
        true
    }

    /// `u^2` lies in `span{e, u}` for every sample.
    pub fn is_degree_two(&self, samples: &[Element<T>], tol: T) -> Result<bool> {
        let e = self.require_unit()?;
        Ok(samples.iter().all(|u| {
            let u2 = self.square(u);
            let m = DMatrix::from_columns(&[e.clone(), u.clone(), u2]);
            let (lo, hi) = linalg::singular_extremes(&m);
            lo <= tol * hi
        }))
    }

    /// Coordinates of `x` inside block `k`.
    pub fn project(&self, k: usize, x: &Element<T>) -> Element<T> {
        let b = &self.blocks[k];
        x.rows(b.offset, b.dim).into_owned()
    }

    /// Embeds block coordinates into the full algebra.
    pub fn embed(&self, k: usize, xk: &Element<T>) -> Element<T> {
        let b = &self.blocks[k];
        let mut x = DVector::zeros(self.dim);
        x.rows_mut(b.offset, b.dim).copy_from(xk);
        x
    }
}

/// Default reciprocal condition threshold used for invertibility.
pub fn default_rcond<T: Real>() -> T {
    T::machine_eps() * T::lit(1e4)
}

fn tiny<T: Real>() -> T {
    T::lit(1e-30)
}
