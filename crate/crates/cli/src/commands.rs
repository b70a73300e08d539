use crate::run_report::RunReport;
use crate::spec_file::{AlgebraSpec, SpecFile};
use crate::verify::{self, Tolerances};
use jordan_geom::catalog::{make_algebra, table, FamilyTag, OmegaSpec};
use jordan_geom::geometry::{hypersphere_residual, parallel_cubic_residual, random_quads, Coefficient, PotentialSpec};
use jordan_geom::report::ResidualReport;
use jordan_geom::sampling::rng;
use jordan_geom::surface::{calabi_point, export_sample, CalabiConfig, ExportFormat};
use jordan_geom::surface::{sample_surface, spiral_curve, to_element, LevelSurface, SurfaceSample};
use jordan_geom::{linalg, Error, Result};
use nalgebra::DVector;
use serde::Deserialize;
use serde_json::json;
use std::path::Path;
use std::time::Instant;

/// 17 significant digits.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn catalog_list(as_json: bool, family: Option<&str>) -> Result<String> {
    let rows: Vec<_> = table()
        .into_iter()
        .filter(|r| family.map_or(true, |f| r.family.name() == f))
        .collect();
    if rows.is_empty() {
        return Err(Error::InvalidParameter(format!("no family named {}", family.unwrap_or(""))));
    }
    if as_json {
        return serde_json::to_string_pretty(&rows).map_err(|e| Error::Schema(e.to_string()));
    }
    let mut s = format!(
        "{:<44} {:<10} {:<10} {:<14} {}\n",
        "family", "space", "real dim", "range", "omega"
    );
    for r in rows {
        s.push_str(&format!(
            "{:<44} {:<10} {:<10} {:<14} {}\n",
            r.label, r.vector_space, r.real_dim_formula, r.range, r.omega
        ));
    }
    Ok(s)
}

pub fn verify(spec_path: &Path, samples: usize, tol: Option<f64>, seed: u64, command: String) -> Result<RunReport> {
    let start = Instant::now();
    let spec = SpecFile::load(spec_path)?;
    let tol = tol.map_or_else(Tolerances::defaults, Tolerances::uniform);
    let checks = verify::run(&spec, samples, tol, seed)?;
    Ok(RunReport::new(command, seed, checks, None, start.elapsed().as_secs_f64()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Quantity {
    Omega,
    Phi,
    Zeta,
    #[value(name = "detP")]
    DetP,
}

pub fn parse_point(s: &str) -> Result<Vec<f64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|e| Error::Schema(format!("bad coordinate \"{t}\": {e}"))))
        .collect()
}

/// The hypersphere potential for catalog blocks, `(1/2n) log |det P|`
/// otherwise.
fn phi(spec: &SpecFile, x: &DVector<f64>) -> Result<f64> {
    if let Some(p) = &spec.potential {
        return p.eval(x);
    }
    match spec.families() {
        Some(f) => PotentialSpec::hypersphere(&f)?.eval(x),
        None => {
            let j = spec.build_algebra()?;
            Ok(linalg::det(&j.quad_op(x)).abs().ln() / (2.0 * j.dim() as f64))
        }
    }
}

fn omega(spec: &SpecFile, x: &DVector<f64>) -> Result<f64> {
    match spec.families() {
        Some(fams) => {
            let mut off = 0;
            let mut w = 1.0f64;
            for f in fams {
                let d = f.real_dim();
                w *= OmegaSpec::new(f).omega(&x.rows(off, d).into_owned());
                off += d;
            }
            Ok(w)
        }
        None => Ok(linalg::det(&spec.build_algebra()?.quad_op(x)).abs().sqrt()),
    }
}

pub fn eval(spec_path: &Path, point: &str, what: Quantity) -> Result<Vec<f64>> {
    let spec = SpecFile::load(spec_path)?;
    let coords = parse_point(point)?;
    if coords.len() != spec.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec.dim(),
            got: coords.len(),
        });
    }
    let x = DVector::from_vec(coords);
    let j = spec.build_algebra()?;
    if !j.is_invertible_default(&x) {
        return Err(Error::NotInvertible {
            det: linalg::det(&j.quad_op(&x)),
        });
    }
    Ok(match what {
        Quantity::Omega => vec![omega(&spec, &x)?],
        Quantity::Phi => vec![phi(&spec, &x)?],
        Quantity::DetP => vec![linalg::det(&j.quad_op(&x))],
        Quantity::Zeta => spec.build_pair()?.zeta(&x)?.iter().copied().collect(),
    })
}

/// `(beta, scale)` when the potential is `Re(c log z)` on the complex line
/// with `Im c != 0`; levels of it are logarithmic spirals.
fn spiral(spec: &SpecFile) -> Option<(f64, f64)> {
    let p = spec.potential.as_ref()?;
    match p.terms.as_slice() {
        [t] if t.family == FamilyTag::ComplexField => match t.coefficient {
            Coefficient::ComplexLog { re, im } if im != 0.0 && re != 0.0 => Some((im / re, re)),
            _ => None,
        },
        _ => None,
    }
}

pub struct SurfaceArgs<'a> {
    pub spec: &'a Path,
    pub level: f64,
    pub count: usize,
    pub out: &'a Path,
    pub format: ExportFormat,
    pub seed: u64,
    pub phi_range: (f64, f64),
}

/// Number of sampled points that also get the geometric checks.
const GEOMETRY_POINTS: usize = 50;

pub fn surface(args: SurfaceArgs<'_>, command: String) -> Result<RunReport> {
    let start = Instant::now();
    let spec = SpecFile::load(args.spec)?;
    let (sample, level_tol) = match spiral(&spec) {
        // Re(c log z) = L  <=>  log r - (Im c / Re c) arg z = L / Re c
        Some((beta, re)) => (
            spiral_curve(beta, args.level / re, args.phi_range.0, args.phi_range.1, args.count)?,
            1e-8,
        ),
        None => {
            let surface = match (&spec.potential, &spec.algebra) {
                (Some(p), _) => LevelSurface::potential(p.clone())?,
                (None, AlgebraSpec::Custom { .. }) => LevelSurface::numeric_omega(spec.build_algebra()?)?,
                (None, _) => LevelSurface::omega(&spec.families().unwrap())?,
            };
            (sample_surface(&surface, args.level, args.count, args.seed)?, 1e-9)
        }
    };
    export_sample(&sample, args.format, args.out)?;
    let mut checks = vec![ResidualReport::from_values("level", &sample.residuals, level_tol)];
    checks.extend(geometry_checks(&spec, &sample, args.seed)?);
    let output = json!({
        "path": args.out.display().to_string(),
        "format": args.format,
        "rows": sample.points.len(),
        "max_level_residual": sample.max_residual(),
    });
    Ok(RunReport::new(command, args.seed, checks, Some(output), start.elapsed().as_secs_f64()))
}

fn geometry_checks(spec: &SpecFile, sample: &SurfaceSample, seed: u64) -> Result<Vec<ResidualReport>> {
    let pair = spec.build_pair()?;
    let n = pair.dim();
    let mut r = rng(seed ^ 0x5eed);
    let pts: Vec<DVector<f64>> = sample.points.iter().take(GEOMETRY_POINTS).map(|p| to_element(p)).collect();
    let cubic = pts
        .iter()
        .map(|x| parallel_cubic_residual(&pair, x, &random_quads(n, 4, &mut r)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![ResidualReport::from_values("parallel-cubic", &cubic, 1e-6)];
    let j = pair.algebra();
    let g = j.trace_form();
    let hyper = j.is_semisimple(1e-10) && (pair.gamma() + g / n as f64).amax() <= 1e-9 * pair.gamma().amax();
    if hyper {
        let vals = pts
            .iter()
            .map(|x| hypersphere_residual(&pair, x))
            .collect::<Result<Vec<_>>>()?;
        out.push(ResidualReport::from_values("hypersphere", &vals, 1e-6));
    } else {
        out.push(ResidualReport::not_applicable("hypersphere", "gamma is not -g/n"));
    }
    Ok(out)
}

#[derive(Deserialize)]
struct CalabiFile {
    #[serde(flatten)]
    config: CalabiConfig,
    /// One point per factor on its level; defaults to `c_k^{1/n_k} e_k`.
    #[serde(default)]
    points: Option<Vec<Vec<f64>>>,
}

pub fn calabi(path: &Path, seed: u64, command: String) -> Result<RunReport> {
    let start = Instant::now();
    let text = std::fs::read_to_string(path)?;
    let file: CalabiFile = serde_json::from_str(&text).map_err(|e| Error::Schema(e.to_string()))?;
    let cfg = file.config;
    cfg.validate()?;
    let points: Vec<DVector<f64>> = match file.points {
        Some(p) => {
            if p.len() != cfg.factors.len() {
                return Err(Error::Schema(format!("{} points for {} factors", p.len(), cfg.factors.len())));
            }
            p.into_iter().map(DVector::from_vec).collect()
        }
        None => cfg
            .factors
            .iter()
            .map(|f| {
                let e = make_algebra::<f64>(&f.family)?.algebra.unit().unwrap().clone();
                Ok(e * f.level.powf(1.0 / f.family.real_dim() as f64))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let f = calabi_point(&cfg, &points)?;
    let mut off = 0;
    let mut w = 1.0f64;
    for fac in &cfg.factors {
        let d = fac.family.real_dim();
        w *= OmegaSpec::new(fac.family.clone()).omega(&f.rows(off, d).into_owned());
        off += d;
    }
    let resid = (w - cfg.level).abs() / cfg.level;
    let checks = vec![ResidualReport::from_values("calabi-level", &[resid], 1e-8)];
    let output = json!({
        "point": f.iter().copied().collect::<Vec<f64>>(),
        "omega": w,
        "level": cfg.level,
        "relative_residual": resid,
    });
    Ok(RunReport::new(command, seed, checks, Some(output), start.elapsed().as_secs_f64()))
}
