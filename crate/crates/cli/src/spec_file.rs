//! The JSON input document shared by `verify`, `eval` and `surface`.

use jordan_geom::catalog::{canonical_gamma, make_algebra, FamilyTag};
use jordan_geom::geometry::{ImmersionPair, PotentialSpec};
use jordan_geom::jordan::JordanAlgebra;
use jordan_geom::{Error, Result};
use nalgebra::{DMatrix, DVector};
use serde::Deserialize;
use serde_json::Value;
use std::path::Path;

/// Where the algebra comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum AlgebraSpec {
    Family(FamilyTag),
    /// Direct sum of catalog families, blocks in order.
    Sum(Vec<FamilyTag>),
    Custom {
        dim: usize,
        structure: Vec<f64>,
        unit: Vec<f64>,
        label: String,
    },
}

/// Choice of `gamma`.
#[derive(Clone, Debug, PartialEq)]
pub enum GammaSpec {
    /// `canonical_gamma` per block; `-g / n` on a semi-simple sum.
    Canonical,
    Matrix(Vec<Vec<f64>>),
    /// Direct sum weights `w_k` for `sum_k w_k gamma_k`.
    Weights(Vec<f64>),
}

#[derive(Clone, Debug)]
pub struct SpecFile {
    pub algebra: AlgebraSpec,
    pub gamma: GammaSpec,
    pub potential: Option<PotentialSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    #[serde(default)]
    algebra: Option<Value>,
    #[serde(default)]
    gamma: Option<Value>,
    #[serde(default)]
    potential: Option<PotentialSpec>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCustom {
    #[allow(dead_code)]
    family: String,
    dim: usize,
    structure: Vec<f64>,
    unit: Vec<f64>,
    #[serde(default)]
    label: Option<String>,
}

fn schema(e: impl std::fmt::Display) -> Error {
    Error::Schema(e.to_string())
}

fn parse_algebra(v: Value) -> Result<AlgebraSpec> {
    if let Some(parts) = v.get("sum") {
        let tags: Vec<FamilyTag> = serde_json::from_value(parts.clone()).map_err(schema)?;
        if tags.is_empty() {
            return Err(Error::Schema("empty direct sum".into()));
        }
        return Ok(AlgebraSpec::Sum(tags));
    }
    if v.get("family").and_then(Value::as_str) == Some("custom") {
        let c: RawCustom = serde_json::from_value(v).map_err(schema)?;
        if c.structure.len() != c.dim * c.dim * c.dim || c.unit.len() != c.dim {
            return Err(Error::Schema(format!(
                "custom algebra of dim {} needs {} structure constants and {} unit coordinates",
                c.dim,
                c.dim * c.dim * c.dim,
                c.dim
            )));
        }
        return Ok(AlgebraSpec::Custom {
            dim: c.dim,
            structure: c.structure,
            unit: c.unit,
            label: c.label.unwrap_or_else(|| "custom".into()),
        });
    }
    serde_json::from_value(v).map(AlgebraSpec::Family).map_err(schema)
}

fn parse_gamma(v: Option<Value>) -> Result<GammaSpec> {
    match v {
        None => Ok(GammaSpec::Canonical),
        Some(Value::String(s)) if s == "canonical-g-scaled" => Ok(GammaSpec::Canonical),
        Some(Value::String(s)) => Err(Error::Schema(format!("unknown gamma \"{s}\""))),
        Some(v @ Value::Array(_)) => serde_json::from_value(v).map(GammaSpec::Matrix).map_err(schema),
        Some(Value::Object(mut m)) => match (m.remove("weights"), m.is_empty()) {
            (Some(w), true) => serde_json::from_value(w).map(GammaSpec::Weights).map_err(schema),
            _ => Err(Error::Schema("gamma object must be {\"weights\": [...]}".into())),
        },
        Some(other) => Err(Error::Schema(format!("unsupported gamma {other}"))),
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(text).map_err(schema)?;
        let algebra = match (raw.algebra, &raw.potential) {
            (Some(a), _) => parse_algebra(a)?,
            (None, Some(p)) => match p.terms.as_slice() {
                [t] => AlgebraSpec::Family(t.family.clone()),
                ts => AlgebraSpec::Sum(ts.iter().map(|t| t.family.clone()).collect()),
            },
            (None, None) => return Err(Error::Schema("need \"algebra\" or \"potential\"".into())),
        };
        let spec = SpecFile {
            algebra,
            gamma: parse_gamma(raw.gamma)?,
            potential: raw.potential,
        };
        spec.check_consistency()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    fn check_consistency(&self) -> Result<()> {
        if let Some(p) = &self.potential {
            p.validate()?;
            let fams = self.families();
            let pf: Vec<FamilyTag> = p.terms.iter().map(|t| t.family.clone()).collect();
            if fams.as_deref() != Some(pf.as_slice()) {
                return Err(Error::Schema("potential terms do not match the algebra blocks".into()));
            }
        }
        match (&self.gamma, &self.algebra) {
            (GammaSpec::Weights(w), AlgebraSpec::Sum(t)) if w.len() != t.len() => Err(Error::Schema(format!(
                "{} weights for {} blocks",
                w.len(),
                t.len()
            ))),
            (GammaSpec::Weights(_), AlgebraSpec::Sum(_)) => Ok(()),
            (GammaSpec::Weights(_), _) => Err(Error::Schema("weights need a direct sum".into())),
            (GammaSpec::Matrix(m), _) => {
                let n = self.dim();
                if m.len() != n || m.iter().any(|r| r.len() != n) {
                    Err(Error::Schema(format!("gamma must be {n} x {n}")))
                } else {
                    Ok(())
                }
            }
            (GammaSpec::Canonical, _) => Ok(()),
        }
    }

    /// Catalog blocks, `None` for a custom tensor.
    pub fn families(&self) -> Option<Vec<FamilyTag>> {
        match &self.algebra {
            AlgebraSpec::Family(t) => Some(vec![t.clone()]),
            AlgebraSpec::Sum(ts) => Some(ts.clone()),
            AlgebraSpec::Custom { .. } => None,
        }
    }

    pub fn dim(&self) -> usize {
        match &self.algebra {
            AlgebraSpec::Custom { dim, .. } => *dim,
            _ => self.families().unwrap().iter().map(FamilyTag::real_dim).sum(),
        }
    }

    pub fn build_algebra(&self) -> Result<JordanAlgebra<f64>> {
        match &self.algebra {
            AlgebraSpec::Family(t) => Ok(make_algebra::<f64>(t)?.algebra),
            AlgebraSpec::Sum(ts) => {
                let parts = ts
                    .iter()
                    .map(|t| make_algebra::<f64>(t).map(|e| e.algebra))
                    .collect::<Result<Vec<_>>>()?;
                JordanAlgebra::direct_sum(&parts)
            }
            AlgebraSpec::Custom {
                dim,
                structure,
                unit,
                label,
            } => JordanAlgebra::from_structure(*dim, structure.clone(), Some(DVector::from_vec(unit.clone())), label.as_str()),
        }
    }

    /// The pair `(J, gamma)`; a potential, when present, fixes `gamma`.
    pub fn build_pair(&self) -> Result<ImmersionPair<f64>> {
        if let Some(p) = &self.potential {
            return p.to_pair();
        }
        let algebra = self.build_algebra()?;
        match (&self.gamma, &self.algebra) {
            (GammaSpec::Matrix(m), _) => {
                let n = self.dim();
                let g = DMatrix::from_fn(n, n, |r, c| m[r][c]);
                ImmersionPair::normalized(algebra, g)
            }
            (GammaSpec::Canonical, AlgebraSpec::Family(t)) => ImmersionPair::canonical(&make_algebra(t)?),
            (GammaSpec::Canonical, AlgebraSpec::Custom { .. }) => ImmersionPair::hypersphere(algebra),
            (GammaSpec::Canonical, AlgebraSpec::Sum(ts)) => {
                let w: Vec<f64> = ts.iter().map(|t| t.real_dim() as f64).collect();
                weighted(ts, &w)
            }
            (GammaSpec::Weights(w), AlgebraSpec::Sum(ts)) => weighted(ts, w),
            (GammaSpec::Weights(_), _) => Err(Error::Schema("weights need a direct sum".into())),
        }
    }
}

fn weighted(tags: &[FamilyTag], w: &[f64]) -> Result<ImmersionPair<f64>> {
    let parts = tags
        .iter()
        .map(|t| {
            let e = make_algebra::<f64>(t)?;
            ImmersionPair::new(e.algebra.clone(), canonical_gamma(&e))
        })
        .collect::<Result<Vec<_>>>()?;
    ImmersionPair::weighted_sum(&parts, w)
}
