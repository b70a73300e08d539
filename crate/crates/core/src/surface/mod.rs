//! Level surfaces of `omega` and of log-homogeneous potentials.
//!
//! Every ray of the domain meets a level surface once, so points are produced
//! by scaling a direction in closed form.

mod calabi;
mod export;
mod nilpotent;

pub use calabi::{calabi_point, CalabiConfig, CalabiFactor};
pub use export::{export_sample, read_json_sample, ExportFormat};
pub use nilpotent::nilpotent_surface_coeff;

use crate::catalog::{make_algebra, FamilyTag, OmegaSpec};
use crate::error::{check_dim, Error, Result};
use crate::geometry::PotentialSpec;
use crate::jordan::{Element, JordanAlgebra};
use crate::linalg;
use crate::sampling;
use crate::scalar::Real;
use nalgebra::DVector;
use serde::{Deserialize, Serialize};

/// What a sample is a level set of.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LevelSpec {
    /// `omega = prod_k omega_k` on a direct sum, in closed form.
    Omega { families: Vec<FamilyTag> },
    /// `omega = |det P|^{1/2}` evaluated numerically.
    NumericOmega { dim: usize },
    Potential { potential: PotentialSpec },
    /// `log r - beta arg z` on the complex line, arg tracked along the curve.
    Spiral { beta: f64 },
}

/// A level function together with its algebra.
#[derive(Clone, Debug)]
pub struct LevelSurface<T: Real> {
    algebra: JordanAlgebra<T>,
    spec: LevelSpec,
}

impl<T: Real> LevelSurface<T> {
    pub fn omega(families: &[FamilyTag]) -> Result<Self> {
        if families.is_empty() {
            return Err(Error::InvalidParameter("no families".into()));
        }
        let parts = families
            .iter()
            .map(|f| make_algebra::<T>(f).map(|e| e.algebra))
            .collect::<Result<Vec<_>>>()?;
        let algebra = if parts.len() == 1 {
            parts.into_iter().next().unwrap()
        } else {
            JordanAlgebra::direct_sum(&parts)?
        };
        Ok(LevelSurface {
            algebra,
            spec: LevelSpec::Omega {
                families: families.to_vec(),
            },
        })
    }

    pub fn numeric_omega(algebra: JordanAlgebra<T>) -> Result<Self> {
        algebra.require_unit()?;
        let dim = algebra.dim();
        Ok(LevelSurface {
            algebra,
            spec: LevelSpec::NumericOmega { dim },
        })
    }

    pub fn potential(potential: PotentialSpec) -> Result<Self> {
        let algebra = potential.algebra()?;
        if potential.nu().abs() < 1e-14 {
            return Err(Error::InvalidParameter("homogeneity constant vanishes".into()));
        }
        Ok(LevelSurface {
            algebra,
            spec: LevelSpec::Potential { potential },
        })
    }

    pub fn algebra(&self) -> &JordanAlgebra<T> {
        &self.algebra
    }

    pub fn spec(&self) -> &LevelSpec {
        &self.spec
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The level function at `x`.
    pub fn value(&self, x: &Element<T>) -> Result<T> {
        check_dim(self.dim(), x.len())?;
        match &self.spec {
            LevelSpec::Omega { families } => {
                let mut off = 0;
                let mut w = T::one();
                for f in families {
                    let d = f.real_dim();
                    w *= OmegaSpec::new(f.clone()).omega(&x.rows(off, d).into_owned());
                    off += d;
                }
                Ok(w)
            }
            LevelSpec::NumericOmega { .. } => Ok(linalg::det(&self.algebra.quad_op(x)).abs().sqrt()),
            LevelSpec::Potential { potential } => potential.eval(x),
            LevelSpec::Spiral { .. } => Err(Error::Unsupported("spirals are traced, not evaluated".into())),
        }
    }

    /// Distance of `x` from the level `c`; relative for `omega`.
    pub fn level_residual(&self, x: &Element<T>, c: T) -> Result<T> {
        let v = self.value(x)?;
        Ok(match self.spec {
            LevelSpec::Potential { .. } => (v - c).abs(),
            _ => (v - c).abs() / c.abs(),
        })
    }

    /// The point `lambda d`, `lambda > 0`, on the level `c`.
    pub fn level_point(&self, c: T, d: &Element<T>) -> Result<Element<T>> {
        check_dim(self.dim(), d.len())?;
        if !self.algebra.is_invertible_default(d) {
            return Err(Error::Domain("direction is not invertible".into()));
        }
        match &self.spec {
            LevelSpec::Potential { potential } => {
                let phi = potential.eval(d)?;
                let lambda = ((c - phi) / T::lit(potential.nu())).exp();
                Ok(d * lambda)
            }
            _ => {
                if c <= T::zero() {
                    return Err(Error::InvalidParameter("omega level must be positive".into()));
                }
                let w = self.value(d)?;
                if w <= T::zero() {
                    return Err(Error::Domain("omega vanishes on the direction".into()));
                }
                let lambda = (c / w).powf(T::one() / T::from_count(self.dim()));
                Ok(d * lambda)
            }
        }
    }
}

/// Points on a level surface with per-point residuals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSample {
    pub spec: LevelSpec,
    pub level: f64,
    pub points: Vec<Vec<f64>>,
    pub residuals: Vec<f64>,
}

impl SurfaceSample {
    pub fn dim(&self) -> usize {
        match &self.spec {
            LevelSpec::Omega { families } => families.iter().map(FamilyTag::real_dim).sum(),
            LevelSpec::NumericOmega { dim } => *dim,
            LevelSpec::Potential { potential } => potential.dim(),
            LevelSpec::Spiral { .. } => 2,
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, r| m.max(*r))
    }
}

/// `count` points of the level `c` in the component of `e`.
///
/// Directions are `e + r u` with `u` uniform on the sphere and `r` up to half
/// of `|e|`, kept when the segment back to `e` stays invertible.
pub fn sample_surface<T: Real>(surface: &LevelSurface<T>, c: f64, count: usize, seed: u64) -> Result<SurfaceSample> {
    let mut rng = sampling::rng(seed);
    let mut points = Vec::with_capacity(count);
    let mut residuals = Vec::with_capacity(count);
    let level = T::lit(c);
    for i in 0..count {
        let d = sampling::domain_point(&surface.algebra, 0.5, &mut rng).ok_or_else(|| {
            Error::Sampling(format!(
                "no invertible direction near e after 100 draws (point {i} of {count})"
            ))
        })?;
        let p = surface.level_point(level, &d)?;
        residuals.push(surface.level_residual(&p, level)?.as_f64());
        points.push(p.iter().map(|v| v.as_f64()).collect());
    }
    Ok(SurfaceSample {
        spec: surface.spec.clone(),
        level: c,
        points,
        residuals,
    })
}

/// `pi(y) = det(P_y)^{-1/(2n)} y`, the ray projection onto `{det P = 1}`.
pub fn project_pi<T: Real>(j: &JordanAlgebra<T>, y: &Element<T>) -> Result<Element<T>> {
    check_dim(j.dim(), y.len())?;
    j.require_unit()?;
    let phi = linalg::det(&j.quad_op(y));
    if phi <= T::zero() {
        return Err(Error::Domain(format!(
            "det P_y = {} is not positive",
            phi.as_f64()
        )));
    }
    let n = T::from_count(j.dim());
    // exp(-log(phi) / 2n) stays finite when phi itself is huge.
    Ok(y * (-phi.ln() / (n + n)).exp())
}

/// The logarithmic spiral `log r - beta phi = level` as a parametrized
/// curve, `phi` running over `[phi0, phi1]`.
///
/// Residuals re-evaluate the relation from the coordinates with the argument
/// unwrapped along the curve.
pub fn spiral_curve(beta: f64, level: f64, phi0: f64, phi1: f64, count: usize) -> Result<SurfaceSample> {
    if beta == 0.0 {
        return Err(Error::InvalidParameter("beta must be non-zero".into()));
    }
    let mut points = Vec::with_capacity(count);
    let mut residuals = Vec::with_capacity(count);
    let mut prev_arg: Option<f64> = None;
    let mut arg = 0.0;
    for i in 0..count {
        let t = if count == 1 {
            phi0
        } else {
            phi0 + (phi1 - phi0) * i as f64 / (count - 1) as f64
        };
        let r = (level + beta * t).exp();
        let (x, y) = (r * t.cos(), r * t.sin());
        let a = y.atan2(x);
        arg = match prev_arg {
            None => phi0 + (a - phi0 + std::f64::consts::PI).rem_euclid(std::f64::consts::TAU) - std::f64::consts::PI,
            Some(p) => {
                let step = (a - p + std::f64::consts::PI).rem_euclid(std::f64::consts::TAU) - std::f64::consts::PI;
                arg + step
            }
        };
        prev_arg = Some(a);
        residuals.push(((x * x + y * y).sqrt().ln() - beta * arg - level).abs());
        points.push(vec![x, y]);
    }
    Ok(SurfaceSample {
        spec: LevelSpec::Spiral { beta },
        level,
        points,
        residuals,
    })
}

/// Converts a stored point back to the working scalar.
pub fn to_element<T: Real>(p: &[f64]) -> DVector<T> {
    DVector::from_iterator(p.len(), p.iter().map(|v| T::lit(*v)))
}
