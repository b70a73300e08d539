use super::zeta::ZetaAt;
use crate::catalog::{canonical_gamma, CatalogEntry};
use crate::error::{check_dim, Error, Result};
use crate::jordan::{Element, JordanAlgebra};
use crate::linalg;
use crate::scalar::Real;
use nalgebra::{DMatrix, DVector};

/// A unital Jordan algebra with a non-degenerate associative symmetric form
/// normalized by `gamma(e, e) = -1`.
#[derive(Clone, Debug)]
pub struct ImmersionPair<T: Real> {
    algebra: JordanAlgebra<T>,
    gamma: DMatrix<T>,
}

impl<T: Real> ImmersionPair<T> {
    pub fn new(algebra: JordanAlgebra<T>, gamma: DMatrix<T>) -> Result<Self> {
        let n = algebra.dim();
        check_dim(n, gamma.nrows())?;
        check_dim(n, gamma.ncols())?;
        let e = algebra.require_unit()?.clone();
        let scale = gamma.amax();
        let tol = T::lit(1e-9);
        if (&gamma - gamma.transpose()).amax() > tol * scale {
            return Err(Error::Inconsistent("gamma is not symmetric".into()));
        }
        if linalg::rcond(&gamma) <= T::machine_eps() * T::lit(1e4) {
            return Err(Error::Degenerate("gamma is degenerate".into()));
        }
        let amax = algebra.structure_amax();
        for b in 0..n {
            let gl = &gamma * algebra.mul_op(&algebra.basis(b));
            if (&gl - gl.transpose()).amax() > tol * scale * (T::one() + amax) {
                return Err(Error::Inconsistent(
                    "gamma is not associative: gamma(xy, z) != gamma(x, yz)".into(),
                ));
            }
        }
        let gee = linalg::bilinear(&gamma, &e, &e);
        if (gee + T::one()).abs() > tol {
            return Err(Error::Inconsistent(format!(
                "gamma(e, e) = {} but -1 is required",
                gee.as_f64()
            )));
        }
        Ok(ImmersionPair {
            algebra,
            gamma: linalg::symmetrize(&gamma),
        })
    }

    /// Rescales `gamma` so that `gamma(e, e) = -1`.
    pub fn normalized(algebra: JordanAlgebra<T>, gamma: DMatrix<T>) -> Result<Self> {
        let e = algebra.require_unit()?.clone();
        check_dim(algebra.dim(), gamma.nrows())?;
        let gee = linalg::bilinear(&gamma, &e, &e);
        if gee.abs() <= T::machine_eps() * gamma.amax() {
            return Err(Error::Degenerate("gamma(e, e) vanishes".into()));
        }
        let scaled = gamma * (-T::one() / gee);
        Self::new(algebra, scaled)
    }

    /// `gamma = -g / n`.
    pub fn hypersphere(algebra: JordanAlgebra<T>) -> Result<Self> {
        let g = algebra.trace_form() * (-T::one() / T::from_count(algebra.dim()));
        Self::new(algebra, g)
    }

    /// The canonical pair of a catalog algebra.
    pub fn canonical(entry: &CatalogEntry<T>) -> Result<Self> {
        Self::new(entry.algebra.clone(), canonical_gamma(entry))
    }

    /// Direct sum with `gamma = sum_k w_k gamma_k`, renormalized.
    pub fn weighted_sum(parts: &[ImmersionPair<T>], weights: &[T]) -> Result<Self> {
        check_dim(parts.len(), weights.len())?;
        let algs: Vec<JordanAlgebra<T>> = parts.iter().map(|p| p.algebra.clone()).collect();
        let sum = JordanAlgebra::direct_sum(&algs)?;
        let n = sum.dim();
        let mut gamma = DMatrix::zeros(n, n);
        let mut off = 0;
        for (p, w) in parts.iter().zip(weights) {
            let d = p.algebra.dim();
            gamma.view_mut((off, off), (d, d)).copy_from(&(&p.gamma * *w));
            off += d;
        }
        Self::normalized(sum, gamma)
    }

    pub fn algebra(&self) -> &JordanAlgebra<T> {
        &self.algebra
    }

    pub fn gamma(&self) -> &DMatrix<T> {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn unit(&self) -> &Element<T> {
        self.algebra.unit().expect("pair algebras are unital")
    }

    /// Derivative data of `zeta` at `x`.
    pub fn at(&self, x: &Element<T>) -> Result<ZetaAt<'_, T>> {
        ZetaAt::new(self, x)
    }

    /// `zeta_x` as a covector.
    pub fn zeta(&self, x: &Element<T>) -> Result<DVector<T>> {
        Ok(self.at(x)?.zeta().clone())
    }

    /// Central element `z` with `L_z = gamma^{-1} g`.
    pub fn central_element(&self) -> Result<Element<T>> {
        solve_central_element(&self.algebra, &self.gamma, self.algebra.trace_form())
    }
}

/// Solves `L_z = gamma^{-1} sigma`, `z = L_z e`.
///
/// Fails when `gamma^{-1} sigma` is not a multiplication operator, i.e. when
/// `sigma` is not of the form `gamma(z ., .)`.
pub fn solve_central_element<T: Real>(
    algebra: &JordanAlgebra<T>,
    gamma: &DMatrix<T>,
    sigma: &DMatrix<T>,
) -> Result<Element<T>> {
    let e = algebra.require_unit()?;
    check_dim(algebra.dim(), gamma.nrows())?;
    check_dim(algebra.dim(), sigma.nrows())?;
    let target = linalg::solve_mat(gamma, sigma).ok_or_else(|| Error::Degenerate("gamma is singular".into()))?;
    let z = &target * e;
    let lz = algebra.mul_op(&z);
    let dev = (&lz - &target).amax();
    if dev > T::lit(1e-8) * (T::one() + target.amax()) {
        return Err(Error::Inconsistent(format!(
            "gamma^-1 sigma is not a multiplication operator (deviation {:e})",
            dev.as_f64()
        )));
    }
    Ok(z)
}
