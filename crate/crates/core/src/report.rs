//! Residual summaries shared by the checkers and the command line.

use serde::{Deserialize, Serialize};

/// Summary of a sampled residual sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub name: String,
    pub max_abs: f64,
    pub rms: f64,
    pub samples: usize,
    pub tol: f64,
    pub pass: bool,
    /// Set when the check does not apply, e.g. hypersphere on a non-semisimple
    /// algebra. Such reports always pass.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl ResidualReport {
    pub fn from_values(name: impl Into<String>, values: &[f64], tol: f64) -> Self {
        // f64::max drops NaN, so propagate it by hand.
        let max_abs = values
            .iter()
            .fold(0.0f64, |m, v| if m.is_nan() || v.is_nan() { f64::NAN } else { m.max(v.abs()) });
        let rms = if values.is_empty() {
            0.0
        } else {
            (values.iter().map(|v| v * v).sum::<f64>() / values.len() as f64).sqrt()
        };
        ResidualReport {
            name: name.into(),
            max_abs,
            rms,
            samples: values.len(),
            tol,
            // NaN fails.
            pass: max_abs <= tol,
            note: None,
        }
    }

    pub fn not_applicable(name: impl Into<String>, why: impl Into<String>) -> Self {
        ResidualReport {
            name: name.into(),
            max_abs: 0.0,
            rms: 0.0,
            samples: 0,
            tol: 0.0,
            pass: true,
            note: Some(format!("not applicable ({})", why.into())),
        }
    }
}
