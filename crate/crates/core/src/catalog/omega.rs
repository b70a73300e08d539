//! Closed forms of `det P` and the volume function `omega`.

use super::FamilyTag;
use crate::scalar::{Complex, Real};
use nalgebra::{ComplexField, DVector};
use serde::{Deserialize, Serialize};

/// Closed-form data for one catalog family.
///
/// With the generic norm `f` normalized to `f(e) = 1`, the quadratic
/// representation satisfies `det P_x = f(x)^k`, taken as `|f^k|^2` for
/// realified complex families.  `omega = |det P|^{1/2}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OmegaSpec {
    pub family: FamilyTag,
    pub dim: usize,
    pub exponent: u32,
    pub complex: bool,
}

impl OmegaSpec {
    pub fn new(family: FamilyTag) -> Self {
        OmegaSpec {
            dim: family.real_dim(),
            exponent: family.exponent(),
            complex: family.is_complex(),
            family,
        }
    }

    /// Homogeneity degree of `omega`.
    pub fn degree(&self) -> usize {
        self.dim
    }

    /// Degree of the generic norm under real scaling.
    pub fn norm_degree(&self) -> f64 {
        if self.complex {
            self.dim as f64 / self.exponent as f64
        } else {
            2.0 * self.dim as f64 / self.exponent as f64
        }
    }

    /// `f(x) / f(e)`.
    pub fn generic_norm<T: Real>(&self, x: &DVector<T>) -> Complex<T> {
        let model = self.family.model::<T>();
        let fx = model.norm(&self.family.to_model_coords(x));
        let fe = model.norm(&self.family.unit_coords::<T>());
        fx / fe
    }

    /// Complex `det P^C` for complex families; the real value otherwise.
    pub fn det_p_complex<T: Real>(&self, x: &DVector<T>) -> Complex<T> {
        self.generic_norm(x).powu(self.exponent)
    }

    /// Closed form of `det P_x` for the real algebra.
    pub fn det_p<T: Real>(&self, x: &DVector<T>) -> T {
        let d = self.det_p_complex(x);
        if self.complex {
            d.norm_sqr()
        } else {
            d.re
        }
    }

    pub fn omega<T: Real>(&self, x: &DVector<T>) -> T {
        let f = self.generic_norm(x).modulus();
        let k = T::from_count(self.exponent as usize);
        if self.complex {
            f.powf(k)
        } else {
            f.powf(k * T::lit(0.5))
        }
    }

    /// `log omega`, evaluated without forming large powers.
    pub fn log_omega<T: Real>(&self, x: &DVector<T>) -> T {
        let f = self.generic_norm(x).modulus().ln();
        let k = T::from_count(self.exponent as usize);
        if self.complex {
            k * f
        } else {
            k * T::lit(0.5) * f
        }
    }
}
