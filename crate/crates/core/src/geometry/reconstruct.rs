use crate::error::{check_dim, Error, Result};
use crate::fd;
use crate::jordan::{Element, JordanAlgebra};
use crate::scalar::Real;
use crate::tensor::{Tensor3, Tensor4};
use nalgebra::{DMatrix, DVector};

/// Algebra recovered from a potential by finite differences.
#[derive(Clone, Debug)]
pub struct Reconstruction<T: Real> {
    pub algebra: JordanAlgebra<T>,
    /// `F''` at the base point.
    pub gamma: DMatrix<T>,
    /// `-F''^{-1} F'`, which is the unit at the base point.
    pub unit: DVector<T>,
    /// `K^g_{ab} = -1/2 F_{abd} F^{gd}`.
    pub structure: Tensor3<T>,
}

/// Rebuilds the product `K^g_{ab} = -1/2 F_{,abd} F^{,gd}` from samples of a
/// potential `f` near `x`.
pub fn algebra_from_potential<T: Real, F: Fn(&DVector<T>) -> T>(f: &F, x: &DVector<T>) -> Result<Reconstruction<T>> {
    let n = x.len();
    let grad = fd::gradient(f, x);
    let hess = fd::hessian(f, x);
    let t3 = fd::third(f, x);
    let ginv = hess
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Degenerate("Hessian of the potential is singular".into()))?;
    let mut k = Tensor3::zeros(n);
    for g in 0..n {
        for a in 0..n {
            for b in 0..n {
                let mut s = T::zero();
                for d in 0..n {
                    s += ginv[(g, d)] * t3.get(a, b, d);
                }
                k.set(g, a, b, s * T::lit(-0.5));
            }
        }
    }
    let unit = -(&ginv * grad);
    let algebra = JordanAlgebra::from_structure(n, k.data.clone(), None, "reconstructed")?
        .with_unit_tol(unit.clone(), T::lit(1e-4))?;
    Ok(Reconstruction {
        algebra,
        gamma: hess,
        unit,
        structure: k,
    })
}

/// Pullbacks of the centro-affine metric, cubic form, Tchebychev form and
/// covariant derivative of the cubic form along the level immersion of `f`.
#[derive(Clone, Debug)]
pub struct PullbackTensors<T: Real> {
    pub metric: DMatrix<T>,
    pub cubic: Tensor3<T>,
    pub tchebychev: DVector<T>,
    pub nabla_cubic: Tensor4<T>,
    /// `|F''''| + n |F''^{-1}| |F'''|^2`, a bound on the terms entering
    /// `nabla_cubic` that does not vanish with them.
    pub nabla_scale: T,
}

pub fn pullback_tensors<T: Real, F: Fn(&DVector<T>) -> T>(f: &F, x: &DVector<T>) -> Result<PullbackTensors<T>> {
    let n = x.len();
    let f1 = fd::gradient(f, x);
    let f2 = fd::hessian(f, x);
    let f3 = fd::third(f, x);
    let f4 = fd::fourth(f, x);
    let ginv = f2
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Degenerate("Hessian of the potential is singular".into()))?;
    let two = T::lit(2.0);
    let metric = &f2 + &f1 * f1.transpose();
    let mut cubic = Tensor3::zeros(n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let v = f3.get(a, b, c)
                    + two * (f2[(a, b)] * f1[c] + f2[(a, c)] * f1[b] + f2[(b, c)] * f1[a])
                    + T::lit(4.0) * f1[a] * f1[b] * f1[c];
                cubic.set(a, b, c, v);
            }
        }
    }
    let tchebychev = DVector::from_fn(n, |a, _| {
        let mut s = T::zero();
        for b in 0..n {
            for c in 0..n {
                s += f3.get(a, b, c) * ginv[(b, c)];
            }
        }
        s + two * T::from_count(n) * f1[a]
    });
    // m[a][b][s] = F^{s r} F_{abr}
    let mut m = Tensor3::zeros(n);
    for a in 0..n {
        for b in 0..n {
            for s in 0..n {
                let mut acc = T::zero();
                for r in 0..n {
                    acc += ginv[(s, r)] * f3.get(a, b, r);
                }
                m.set(a, b, s, acc);
            }
        }
    }
    let pair = |a: usize, b: usize, c: usize, d: usize| {
        let mut acc = T::zero();
        for s in 0..n {
            acc += m.get(a, b, s) * f3.get(c, d, s);
        }
        acc
    };
    let mut nabla = Tensor4::zeros(n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let q = (pair(a, b, c, d) + pair(a, c, b, d) + pair(a, d, b, c)) * T::lit(0.5);
                    nabla.set(a, b, c, d, f4.get(a, b, c, d) - q);
                }
            }
        }
    }
    Ok(PullbackTensors {
        metric,
        cubic,
        tchebychev,
        nabla_cubic: nabla,
        nabla_scale: f4.amax() + T::from_count(n) * ginv.amax() * f3.amax() * f3.amax(),
    })
}

/// `max |nabla C| / (size of its terms)`.
pub fn nabla_c_residual<T: Real>(pb: &PullbackTensors<T>) -> T {
    pb.nabla_cubic.amax() / (pb.nabla_scale + T::lit(1e-30))
}

/// `D_u log|det P_x| = 2 g(x^{-1}, u)`.
pub fn log_det_p_derivative<T: Real>(j: &JordanAlgebra<T>, x: &Element<T>, u: &Element<T>) -> Result<T> {
    check_dim(j.dim(), u.len())?;
    let xi = j.inverse(x)?;
    Ok(T::lit(2.0) * j.bilinear_g(&xi, u))
}

/// `D_u x^{-1} = -P_x^{-1} u`.
pub fn inverse_derivative<T: Real>(j: &JordanAlgebra<T>, x: &Element<T>, u: &Element<T>) -> Result<Element<T>> {
    check_dim(j.dim(), u.len())?;
    j.inverse(x)?;
    let p = j.quad_op(x);
    crate::linalg::solve(&p, u)
        .map(|v| -v)
        .ok_or(Error::NotInvertible { det: 0.0 })
}
