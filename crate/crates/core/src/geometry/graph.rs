use crate::error::{check_dim, Error, Result};
use crate::jordan::{Element, JordanAlgebra};
use crate::linalg;
use crate::scalar::Real;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Graph potentials on a nil algebra with a trace form `gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    /// `1/2 gamma(x, x) - 1/3 gamma(x, x^2)`.
    Cubic,
    /// `sum_{k >= 2} (-2)^{k-2} / k! gamma(x, x^{k-1})`.
    AssocSeries,
    /// `sum_{k >= 2} (-1)^k / k gamma(x, x^{k-1})`.
    JordanSeries,
}

/// Evaluates a graph potential.  The series stop at `x^{n+1}`, which must
/// vanish.
pub fn graph_potential<T: Real>(
    j: &JordanAlgebra<T>,
    gamma: &DMatrix<T>,
    x: &Element<T>,
    kind: GraphKind,
) -> Result<T> {
    let n = j.dim();
    check_dim(n, x.len())?;
    let mut powers = vec![x.clone()];
    let last = match kind {
        GraphKind::Cubic => 2,
        _ => n + 1,
    };
    let lx = j.mul_op(x);
    while powers.len() < last {
        let next = &lx * powers.last().unwrap();
        powers.push(next);
    }
    if kind != GraphKind::Cubic {
        let top = &lx * powers.last().unwrap();
        let bound = T::lit(1e-10) * (T::one() + x.norm()).powi(n as i32 + 1) * (T::one() + j.structure_amax()).powi(n as i32);
        if top.norm() > bound {
            return Err(Error::Unsupported("graph series needs a nil algebra".into()));
        }
    }
    let mut total = T::zero();
    let mut fact = T::lit(2.0);
    for k in 2..=last + 1 {
        let term = linalg::bilinear(gamma, x, &powers[k - 2]);
        let kf = T::from_count(k);
        let c = match kind {
            GraphKind::Cubic => {
                if k == 2 {
                    T::lit(0.5)
                } else {
                    T::lit(-1.0 / 3.0)
                }
            }
            GraphKind::JordanSeries => {
                let s = if k % 2 == 0 { T::one() } else { -T::one() };
                s / kf
            }
            GraphKind::AssocSeries => {
                if k > 2 {
                    fact *= kf;
                }
                T::lit(-2.0).powi(k as i32 - 2) / fact
            }
        };
        total += c * term;
    }
    Ok(total)
}
