use crate::catalog::{FamilyTag, OmegaSpec};
use crate::error::{check_dim, Error, Result};
use crate::sampling::Rng;
use nalgebra::DVector;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalabiFactor {
    pub family: FamilyTag,
    /// Level `c_k > 0` of the factor hypersphere.
    pub level: f64,
}

/// Factors, total level `c` and exponents `t` with
/// `sum_k n_k t_k = log c - sum_k log c_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalabiConfig {
    pub factors: Vec<CalabiFactor>,
    pub level: f64,
    pub t: Vec<f64>,
}

impl CalabiConfig {
    /// Right-hand side of the constraint.
    pub fn rhs(&self) -> f64 {
        self.level.ln() - self.factors.iter().map(|f| f.level.ln()).sum::<f64>()
    }

    pub fn validate(&self) -> Result<()> {
        if self.factors.is_empty() {
            return Err(Error::InvalidParameter("no factors".into()));
        }
        check_dim(self.factors.len(), self.t.len())?;
        if !(self.level > 0.0) || self.factors.iter().any(|f| !(f.level > 0.0)) {
            return Err(Error::InvalidParameter("levels must be positive".into()));
        }
        for f in &self.factors {
            f.family.validate()?;
        }
        let lhs: f64 = self
            .factors
            .iter()
            .zip(&self.t)
            .map(|(f, t)| f.family.real_dim() as f64 * t)
            .sum();
        let rhs = self.rhs();
        let scale = 1.0 + rhs.abs() + self.t.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        if (lhs - rhs).abs() > 1e-12 * scale {
            return Err(Error::InvalidParameter(format!(
                "constraint violated: sum n_k t_k = {lhs}, expected {rhs}"
            )));
        }
        Ok(())
    }

    /// Random `t` on the constraint and random factor levels.
    pub fn random(families: &[FamilyTag], level: f64, rng: &mut Rng) -> Result<Self> {
        let factors: Vec<CalabiFactor> = families
            .iter()
            .map(|f| {
                let z: f64 = StandardNormal.sample(rng);
                CalabiFactor {
                    family: f.clone(),
                    level: (0.5 * z).exp(),
                }
            })
            .collect();
        let dims: Vec<f64> = families.iter().map(|f| f.real_dim() as f64).collect();
        let mut t: Vec<f64> = dims.iter().map(|_| StandardNormal.sample(rng)).collect();
        let mut cfg = CalabiConfig { factors, level, t: t.clone() };
        // Project onto the hyperplane n . t = rhs.
        let nn: f64 = dims.iter().map(|d| d * d).sum();
        let shift = (cfg.rhs() - dims.iter().zip(&t).map(|(d, t)| d * t).sum::<f64>()) / nn;
        for (ti, d) in t.iter_mut().zip(&dims) {
            *ti += shift * d;
        }
        cfg.t = t;
        cfg.validate()?;
        Ok(cfg)
    }
}

/// `f = sum_k e^{t_k} x_k` on the direct sum.
///
/// Each `x_k` must lie on `omega_k = c_k`; then `omega(f) = c`.
pub fn calabi_point(config: &CalabiConfig, points: &[DVector<f64>]) -> Result<DVector<f64>> {
    config.validate()?;
    check_dim(config.factors.len(), points.len())?;
    let mut out = Vec::new();
    for ((f, x), t) in config.factors.iter().zip(points).zip(&config.t) {
        check_dim(f.family.real_dim(), x.len())?;
        let w = OmegaSpec::new(f.family.clone()).omega(x);
        if (w - f.level).abs() > 1e-8 * f.level {
            return Err(Error::InvalidParameter(format!(
                "factor point has omega = {w}, expected {}",
                f.level
            )));
        }
        out.extend(x.iter().map(|v| v * t.exp()));
    }
    Ok(DVector::from_vec(out))
}
