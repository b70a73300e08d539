//! The `verify` check suite.

use crate::spec_file::SpecFile;
use jordan_geom::catalog::OmegaSpec;
use jordan_geom::geometry::{hypersphere_residual, parallel_cubic_residual, quadric_residual, random_quads, random_triples, ImmersionPair};
use jordan_geom::jordan::{Element, JordanAlgebra};
use jordan_geom::report::ResidualReport;
use jordan_geom::sampling::{domain_point, gaussian, rng, Rng};
use jordan_geom::{fd, linalg, Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Checks that only involve closed-form derivatives.
    pub analytic: f64,
    /// Checks backed by finite differences.
    pub fd: f64,
    /// Closed-form against numeric determinants; `None` picks a
    /// dimension-dependent default.
    pub det: Option<f64>,
}

impl Tolerances {
    pub fn defaults() -> Self {
        Tolerances {
            analytic: 1e-8,
            fd: 1e-6,
            det: None,
        }
    }

    pub fn uniform(t: f64) -> Self {
        Tolerances {
            analytic: t,
            fd: t,
            det: Some(t),
        }
    }
}

fn failed(name: &str, why: String) -> ResidualReport {
    let mut r = ResidualReport::from_values(name, &[f64::INFINITY], 0.0);
    r.samples = 0;
    r.note = Some(why);
    r
}

fn domain_points(j: &JordanAlgebra<f64>, count: usize, rng: &mut Rng) -> Result<Vec<Element<f64>>> {
    (0..count)
        .map(|i| {
            domain_point(j, 0.5, rng).ok_or_else(|| Error::Sampling(format!("no invertible point near e (sample {i})")))
        })
        .collect()
}

/// `|a - b| / (|a| + |b|)`, zero when both vanish.
fn rel(a: f64, b: f64) -> f64 {
    let s = a.abs() + b.abs();
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

/// Runs every applicable check. Only sampling failures abort the run; a pair
/// that cannot be built is reported as a failing check.
pub fn run(spec: &SpecFile, samples: usize, tol: Tolerances, seed: u64) -> Result<Vec<ResidualReport>> {
    let algebra = spec.build_algebra()?;
    let n = algebra.dim();
    let mut r = rng(seed);
    let mut out = vec![algebra.check_jordan_identity(samples, seed, tol.analytic)];

    // g(xy, z) = g(x, yz)
    let g = algebra.trace_form();
    let scale = g.amax() * (1.0 + algebra.structure_amax());
    let assoc: Vec<f64> = (0..samples)
        .map(|_| {
            let [x, y, z] = [0, 1, 2].map(|_| gaussian::<f64>(n, &mut r));
            let a = linalg::bilinear(g, &algebra.mul(&x, &y), &z);
            let b = linalg::bilinear(g, &x, &algebra.mul(&y, &z));
            (a - b).abs() / (scale * x.norm() * y.norm() * z.norm() + 1e-300)
        })
        .collect();
    out.push(ResidualReport::from_values("trace-form", &assoc, tol.analytic));

    let pair = match spec.build_pair() {
        Ok(p) => p,
        Err(e) => {
            out.push(failed("pair", format!("cannot build (J, gamma): {e}")));
            return Ok(out);
        }
    };
    let points = domain_points(&algebra, samples, &mut r)?;

    match spec.families() {
        Some(fams) => {
            let det_tol = tol.det.unwrap_or(if n >= 27 { 1e-5 } else { 1e-7 });
            let vals: Vec<f64> = points
                .iter()
                .map(|x| {
                    let mut off = 0;
                    let mut closed = 1.0;
                    for f in &fams {
                        let d = f.real_dim();
                        closed *= OmegaSpec::new(f.clone()).det_p(&x.rows(off, d).into_owned());
                        off += d;
                    }
                    rel(linalg::det(&algebra.quad_op(x)), closed)
                })
                .collect();
            out.push(ResidualReport::from_values("det-p-closed-form", &vals, det_tol));
        }
        None => out.push(ResidualReport::not_applicable("det-p-closed-form", "custom tensor")),
    }

    out.push(zeta_identities(&pair, &points, samples, tol.analytic, &mut r)?);
    out.push(zeta_fd(&pair, &points, tol.fd, &mut r)?);

    let cubic = points
        .iter()
        .map(|x| parallel_cubic_residual(&pair, x, &random_quads(n, 4, &mut r)))
        .collect::<Result<Vec<_>>>()?;
    out.push(ResidualReport::from_values("parallel-cubic", &cubic, tol.analytic));

    let semisimple = algebra.is_semisimple(1e-10);
    let hyper_gamma = semisimple && (pair.gamma() + g / n as f64).amax() <= 1e-9 * pair.gamma().amax();
    if !semisimple {
        out.push(ResidualReport::not_applicable("hypersphere", "not semi-simple"));
        out.push(ResidualReport::not_applicable("quadric", "not semi-simple"));
    } else {
        let vals = points
            .iter()
            .map(|x| hypersphere_residual(&pair, x))
            .collect::<Result<Vec<_>>>()?;
        out.push(characterization("hypersphere", &vals, tol.analytic, hyper_gamma, "gamma = -g/n"));
        if hyper_gamma {
            let sample_elems: Vec<Element<f64>> = (0..samples.min(20)).map(|_| gaussian(n, &mut r)).collect();
            let degree_two = n <= 2 || algebra.is_degree_two(&sample_elems, 1e-8)?;
            let vals = points
                .iter()
                .map(|x| quadric_residual(&pair, x, &random_triples(n, 4, &mut r)))
                .collect::<Result<Vec<_>>>()?;
            out.push(characterization("quadric", &vals, tol.analytic, degree_two, "degree two"));
        } else {
            out.push(ResidualReport::not_applicable("quadric", "gamma is not -g/n"));
        }
    }

    if let Some(p) = &spec.potential {
        let nu = p.nu();
        let vals = points
            .iter()
            .take(samples.min(10))
            .map(|x| {
                let grad = fd::gradient(&|q: &nalgebra::DVector<f64>| p.eval(q).unwrap_or(f64::NAN), x);
                let z = pair.zeta(x)? * nu;
                Ok((grad - &z).amax() / (1.0 + z.amax()))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(ResidualReport::from_values("potential-gradient", &vals, tol.fd));
    }
    Ok(out)
}

/// A residual that must vanish exactly when `expected` holds and stay above
/// `1e-3` otherwise.
fn characterization(name: &str, vals: &[f64], tol: f64, expected: bool, what: &str) -> ResidualReport {
    let mut rep = ResidualReport::from_values(name, vals, tol);
    if !expected {
        let min = vals.iter().fold(f64::INFINITY, |m, v| m.min(*v));
        rep.pass = vals.iter().all(|v| !v.is_nan()) && (vals.is_empty() || min > 1e-3);
        rep.note = Some(format!("{what} fails, so the residual must stay above 1e-3 (min {min:.3e})"));
    }
    rep
}

fn zeta_identities(
    pair: &ImmersionPair<f64>,
    points: &[Element<f64>],
    samples: usize,
    tol: f64,
    r: &mut Rng,
) -> Result<ResidualReport> {
    let j = pair.algebra();
    let n = j.dim();
    let gamma = pair.gamma();
    let e = pair.unit().clone();
    let at_e = pair.at(&e)?;
    let mut vals = vec![(at_e.dzeta() - gamma).amax() / gamma.amax()];
    for _ in 0..samples.min(20) {
        let u = gaussian::<f64>(n, r);
        let v = gaussian::<f64>(n, r);
        let v2 = j.square(&v);
        vals.push(rel(at_e.d2(&u, &v, &v), -2.0 * linalg::bilinear(gamma, &u, &v2)));
        vals.push(rel(at_e.d3(&u, &v, &v, &v), 6.0 * linalg::bilinear(gamma, &j.mul(&v, &u), &v2)));
    }
    for x in points {
        let z = pair.at(x)?;
        let u = gaussian::<f64>(n, r);
        vals.push((z.zeta().dot(x) - 1.0).abs());
        vals.push(rel(z.d1(x, &u), -z.zeta().dot(&u)));
    }
    Ok(ResidualReport::from_values("zeta-identities", &vals, tol))
}

fn zeta_fd(pair: &ImmersionPair<f64>, points: &[Element<f64>], tol: f64, r: &mut Rng) -> Result<ResidualReport> {
    let n = pair.dim();
    let mut vals = Vec::new();
    for x in points.iter().take(10) {
        let w = gaussian::<f64>(n, r);
        let h = fd::step_low(x);
        let central = |h: f64| -> Result<nalgebra::DVector<f64>> {
            Ok((pair.zeta(&(x + &w * h))? - pair.zeta(&(x - &w * h))?) / (2.0 * h))
        };
        // Richardson: points near a block boundary have large higher derivatives.
        let num = (central(h)? * 4.0 - central(2.0 * h)?) / 3.0;
        let exact = pair.at(x)?.dzeta() * &w;
        vals.push((num - &exact).amax() / (1.0 + exact.amax()));
    }
    Ok(ResidualReport::from_values("zeta-fd", &vals, tol))
}
