use super::pair::ImmersionPair;
use crate::catalog::{make_algebra, trunc, FamilyTag, OmegaSpec};
use crate::error::{check_dim, Error, Result};
use crate::jordan::{Element, JordanAlgebra};
use crate::scalar::{Complex, Real};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Coefficient of one summand of a potential.
///
/// With `f` the generic norm of the block normalized to `f(e) = 1`:
/// `real-log` gives `alpha log|f|`, `complex-log` gives `Re(c log f)` on the
/// principal branch and `trunc-log` gives `alpha (log p)(1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Coefficient {
    RealLog { alpha: f64 },
    ComplexLog { re: f64, im: f64 },
    TruncLog { alpha: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PotentialTerm {
    pub family: FamilyTag,
    pub coefficient: Coefficient,
}

/// Closed-form potential on a direct sum; blocks are laid out in order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub terms: Vec<PotentialTerm>,
}

fn ln_complex<T: Real>(z: Complex<T>) -> Complex<T> {
    Complex::new((z.re * z.re + z.im * z.im).sqrt().ln(), z.im.atan2(z.re))
}

impl PotentialSpec {
    /// Potential with `gamma = sum_k w_k (-g_k / n_k)` before normalization.
    /// Real and truncated blocks need real weights.
    pub fn weighted(families: &[FamilyTag], weights: &[Complex<f64>]) -> Result<Self> {
        check_dim(families.len(), weights.len())?;
        let terms = families
            .iter()
            .zip(weights)
            .map(|(f, w)| {
                f.validate()?;
                let k = f.exponent() as f64;
                let n = f.real_dim() as f64;
                let coefficient = if f.is_complex() {
                    Coefficient::ComplexLog {
                        re: w.re * k / n,
                        im: w.im * k / n,
                    }
                } else {
                    if w.im != 0.0 {
                        return Err(Error::InvalidParameter(format!(
                            "{} needs a real weight",
                            f.label()
                        )));
                    }
                    match f {
                        FamilyTag::TruncPoly { .. } => Coefficient::TruncLog { alpha: w.re },
                        _ => Coefficient::RealLog {
                            alpha: w.re * k / (2.0 * n),
                        },
                    }
                };
                Ok(PotentialTerm {
                    family: f.clone(),
                    coefficient,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PotentialSpec { terms })
    }

    /// The potential `(1/n) log omega` of `gamma = -g/n` on the direct sum.
    pub fn hypersphere(families: &[FamilyTag]) -> Result<Self> {
        let total: usize = families.iter().map(FamilyTag::real_dim).sum();
        let w: Vec<Complex<f64>> = families
            .iter()
            .map(|f| Complex::new(f.real_dim() as f64 / total as f64, 0.0))
            .collect();
        Self::weighted(families, &w)
    }

    pub fn validate(&self) -> Result<()> {
        if self.terms.is_empty() {
            return Err(Error::Schema("potential has no terms".into()));
        }
        for t in &self.terms {
            t.family.validate()?;
            let ok = match (&t.coefficient, &t.family) {
                (Coefficient::TruncLog { .. }, FamilyTag::TruncPoly { .. }) => true,
                (Coefficient::ComplexLog { .. }, f) => f.is_complex(),
                (Coefficient::RealLog { .. }, f) => {
                    !f.is_complex() && !matches!(f, FamilyTag::TruncPoly { .. })
                }
                _ => false,
            };
            if !ok {
                return Err(Error::Schema(format!(
                    "coefficient kind does not fit family {}",
                    t.family.label()
                )));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.terms.iter().map(|t| t.family.real_dim()).sum()
    }

    /// Block offsets in the direct sum.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = 0;
        self.terms
            .iter()
            .map(|t| {
                let o = off;
                off += t.family.real_dim();
                o
            })
            .collect()
    }

    /// Homogeneity constant: `Phi(lambda x) = Phi(x) + nu log lambda`.
    pub fn nu(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| {
                let deg = OmegaSpec::new(t.family.clone()).norm_degree();
                match t.coefficient {
                    Coefficient::RealLog { alpha } => alpha * deg,
                    Coefficient::ComplexLog { re, .. } => re * deg,
                    Coefficient::TruncLog { alpha } => alpha,
                }
            })
            .sum()
    }

    /// `Phi(x)`, principal branch for complex terms.
    pub fn eval<T: Real>(&self, x: &DVector<T>) -> Result<T> {
        check_dim(self.dim(), x.len())?;
        let mut total = T::zero();
        for (t, off) in self.terms.iter().zip(self.offsets()) {
            let d = t.family.real_dim();
            let xk = x.rows(off, d).into_owned();
            let value = match t.coefficient {
                Coefficient::TruncLog { alpha } => T::lit(alpha) * trunc::trunc_potential(&xk)?,
                Coefficient::RealLog { alpha } => {
                    let f = OmegaSpec::new(t.family.clone()).generic_norm(&xk);
                    if f.re == T::zero() {
                        return Err(Error::Domain("generic norm vanishes".into()));
                    }
                    T::lit(alpha) * f.re.abs().ln()
                }
                Coefficient::ComplexLog { re, im } => {
                    let f = OmegaSpec::new(t.family.clone()).generic_norm(&xk);
                    if f.re == T::zero() && f.im == T::zero() {
                        return Err(Error::Domain("generic norm vanishes".into()));
                    }
                    let l = ln_complex(f);
                    T::lit(re) * l.re - T::lit(im) * l.im
                }
            };
            total += value;
        }
        Ok(total)
    }

    pub fn algebra<T: Real>(&self) -> Result<JordanAlgebra<T>> {
        self.validate()?;
        let parts = self
            .terms
            .iter()
            .map(|t| make_algebra::<T>(&t.family).map(|e| e.algebra))
            .collect::<Result<Vec<_>>>()?;
        if parts.len() == 1 {
            Ok(parts.into_iter().next().unwrap())
        } else {
            JordanAlgebra::direct_sum(&parts)
        }
    }

    /// The form `gamma` whose `zeta` is `DPhi`; `gamma(e, e) = -nu`.
    pub fn gamma<T: Real>(&self) -> Result<DMatrix<T>> {
        self.validate()?;
        let n = self.dim();
        let mut gamma = DMatrix::zeros(n, n);
        for (t, off) in self.terms.iter().zip(self.offsets()) {
            let entry = make_algebra::<T>(&t.family)?;
            let d = entry.algebra.dim();
            let k = T::from_count(t.family.exponent() as usize);
            let block = match t.coefficient {
                Coefficient::TruncLog { alpha } => trunc::trunc_gamma::<T>(d) * T::lit(alpha),
                Coefficient::RealLog { alpha } => &entry.g * (T::lit(-2.0 * alpha) / k),
                Coefficient::ComplexLog { re, im } => {
                    // gamma(u, v) = g(c' u, v) with c' = -c / k acting on (Re, Im).
                    let (a, b) = (-T::lit(re) / k, -T::lit(im) / k);
                    let h = d / 2;
                    let m = DMatrix::from_fn(d, d, |r, s| {
                        if r % h != s % h {
                            T::zero()
                        } else {
                            match (r < h, s < h) {
                                (true, true) | (false, false) => a,
                                (true, false) => -b,
                                (false, true) => b,
                            }
                        }
                    });
                    m.transpose() * &entry.g
                }
            };
            gamma.view_mut((off, off), (d, d)).copy_from(&block);
        }
        Ok(gamma)
    }

    /// The normalized pair belonging to `Phi / nu`.
    pub fn to_pair<T: Real>(&self) -> Result<ImmersionPair<T>> {
        let nu = self.nu();
        if nu.abs() < 1e-14 {
            return Err(Error::Degenerate("homogeneity constant vanishes".into()));
        }
        ImmersionPair::new(self.algebra()?, self.gamma::<T>()? * T::lit(1.0 / nu))
    }

    /// `lambda d` with `Phi(lambda d) = level`.
    pub fn level_point<T: Real>(&self, d: &DVector<T>, level: f64) -> Result<DVector<T>> {
        let nu = self.nu();
        if nu.abs() < 1e-14 {
            return Err(Error::Degenerate("homogeneity constant vanishes".into()));
        }
        let phi = self.eval(d)?;
        let lambda = ((T::lit(level) - phi) / T::lit(nu)).exp();
        Ok(d * lambda)
    }
}

const GL_NODES: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683_1,
    0.0,
    0.538_469_310_105_683_1,
    0.906_179_845_938_664,
];
const GL_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189_1,
    0.478_628_670_499_366_5,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_1,
];

/// `int_0^1 zeta_{base + t (x - base)}(x - base) dt` by composite
/// five-point Gauss-Legendre on `steps` subintervals.
pub fn potential_line_integral<T: Real>(
    pair: &ImmersionPair<T>,
    x: &Element<T>,
    base: &Element<T>,
    steps: usize,
) -> Result<T> {
    segment_integral(pair, base, x, steps.max(1), T::zero(), T::one())
}

/// Integral of `zeta` along the polyline through `path`.
pub fn potential_path_integral<T: Real>(
    pair: &ImmersionPair<T>,
    path: &[Element<T>],
    steps_per_segment: usize,
) -> Result<T> {
    let mut total = T::zero();
    let segs = path.len().saturating_sub(1);
    for (i, w) in path.windows(2).enumerate() {
        let t0 = T::from_count(i) / T::from_count(segs);
        total += segment_integral(pair, &w[0], &w[1], steps_per_segment.max(1), t0, T::one() / T::from_count(segs))?;
    }
    Ok(total)
}

fn segment_integral<T: Real>(
    pair: &ImmersionPair<T>,
    a: &Element<T>,
    b: &Element<T>,
    steps: usize,
    t0: T,
    span: T,
) -> Result<T> {
    let dir = b - a;
    let h = T::one() / T::from_count(steps);
    let half = T::lit(0.5);
    let mut total = T::zero();
    for s in 0..steps {
        let mid = (T::from_count(s) + half) * h;
        for (node, weight) in GL_NODES.iter().zip(GL_WEIGHTS.iter()) {
            let t = mid + T::lit(*node) * h * half;
            let p = a + &dir * t;
            let z = pair
                .at(&p)
                .map_err(|_| Error::PathNotInvertible((t0 + t * span).as_f64()))?;
            total += T::lit(*weight) * h * half * z.zeta().dot(&dir);
        }
    }
    Ok(total)
}
