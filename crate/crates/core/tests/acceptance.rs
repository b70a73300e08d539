//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use jordan_geom::catalog::trunc::nil_ideal_algebra;
use jordan_geom::catalog::{make_algebra, FamilyTag};
use jordan_geom::fd;
use jordan_geom::geometry::{
    algebra_from_potential, graph_potential, hypersphere_residual, parallel_cubic_residual, random_quads,
    GraphKind, ImmersionPair, PotentialSpec,
};
use jordan_geom::jordan::JordanAlgebra;
use jordan_geom::linalg;
use jordan_geom::sampling::{cubic_perturbation, domain_point, gaussian, rng, Rng};
use jordan_geom::surface::{calabi_point, nilpotent_surface_coeff, sample_surface, CalabiConfig, LevelSurface};
use nalgebra::{DMatrix, DVector};
use rand::Rng as _;
use std::panic;
use std::time::Instant;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn table_tags() -> Vec<FamilyTag> {
    FamilyTag::catalog()
}

fn all_tags() -> Vec<FamilyTag> {
    let mut v = FamilyTag::catalog();
    v.extend(FamilyTag::twisted_catalog());
    v.extend((2..=5).map(|n| FamilyTag::TruncPoly { n }));
    v
}

fn canonical(tag: &FamilyTag) -> ImmersionPair<f64> {
    ImmersionPair::canonical(&make_algebra::<f64>(tag).unwrap()).unwrap()
}

/// `e + 0.3 g`, redrawn until well conditioned.
fn near_unit(j: &JordanAlgebra<f64>, r: &mut Rng) -> DVector<f64> {
    loop {
        let x = j.unit().unwrap() + gaussian::<f64>(j.dim(), r) * 0.3;
        if j.invertibility_rcond(&x) > 1e-3 {
            return x;
        }
    }
}

fn rel_mat(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).amax() / b.amax().max(1e-300)
}

fn catalog_integrity() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for (i, tag) in table_tags().iter().enumerate() {
        let j = make_algebra::<f64>(tag).unwrap().algebra;
        let rep = j.check_jordan_identity(200, 1000 + i as u64, 1e-9);
        worst = worst.max(rep.max_abs);
        if !rep.pass {
            bad.push(tag.label());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        bad.is_empty() && secs < 60.0 && table_tags().len() == 17,
        format!("17 families, max residual {worst:.2e}, {secs:.1} s {bad:?}"),
    )
}

fn det_p_agreement() -> Outcome {
    let mut r = rng(2);
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for tag in all_tags() {
        let e = make_algebra::<f64>(&tag).unwrap();
        let tol = if e.algebra.dim() >= 27 { 1e-5 } else { 1e-7 };
        for _ in 0..50 {
            let x = near_unit(&e.algebra, &mut r);
            let num = linalg::det(&e.algebra.quad_op(&x));
            let rel = (num - e.omega.det_p(&x)).abs() / num.abs();
            worst = worst.max(rel / tol);
            if rel > tol {
                bad.push(tag.label());
                break;
            }
        }
    }
    outcome(bad.is_empty(), format!("{} families x 50, worst error/tol {worst:.2e} {bad:?}", all_tags().len()))
}

fn omega_laws() -> Outcome {
    let mut r = rng(3);
    let (mut hom, mut sq, mut cx) = (0.0f64, 0.0f64, 0.0f64);
    for tag in all_tags() {
        let e = make_algebra::<f64>(&tag).unwrap();
        let n = e.algebra.dim() as i32;
        for _ in 0..10 {
            let x = near_unit(&e.algebra, &mut r);
            let w = e.omega.omega(&x);
            for lam in [0.5f64, 2.0, 7.0] {
                let want = lam.powi(n) * w;
                hom = hom.max((e.omega.omega(&(&x * lam)) - want).abs() / want);
            }
            let det = linalg::det(&e.algebra.quad_op(&x)).abs();
            match &e.complex {
                Some(ca) => {
                    let dc = linalg::det_complex(&ca.quad_op(&ca.to_complex(&x))).norm();
                    cx = cx.max((w - dc).abs() / dc);
                }
                None if tag.is_semisimple() => sq = sq.max((w * w - det).abs() / det),
                None => {}
            }
        }
    }
    let tol_det = 1e-5;
    outcome(
        hom <= 1e-10 && sq <= tol_det && cx <= tol_det,
        format!("homogeneity {hom:.2e}, omega^2 = |det P| {sq:.2e}, omega = |det P^C| {cx:.2e}"),
    )
}

fn identities_at_unit() -> Outcome {
    let mut r = rng(4);
    let (mut analytic, mut numeric) = (0.0f64, 0.0f64);
    for tag in all_tags() {
        let pair = canonical(&tag);
        let j = pair.algebra();
        let n = j.dim();
        let gamma = pair.gamma();
        let e = pair.unit().clone();
        let z = pair.at(&e).unwrap();
        analytic = analytic.max((z.dzeta() - gamma).amax());
        for _ in 0..5 {
            let (u, v) = (gaussian::<f64>(n, &mut r), gaussian::<f64>(n, &mut r));
            let v2 = j.square(&v);
            let w2 = -2.0 * linalg::bilinear(gamma, &u, &v2);
            let w3 = 6.0 * linalg::bilinear(gamma, &j.mul(&v, &u), &v2);
            analytic = analytic.max((z.d2(&u, &v, &v) - w2).abs() / (1.0 + w2.abs()));
            analytic = analytic.max((z.d3(&u, &v, &v, &v) - w3).abs() / (1.0 + w3.abs()));
        }
        // finite differences of the lower derivative along w
        let (u, v, s, w) = [0, 1, 2, 3].map(|_| gaussian::<f64>(n, &mut r)).into();
        let h = 1e-5 * (1.0 + e.norm());
        let zp = pair.at(&(&e + &w * h)).unwrap();
        let zm = pair.at(&(&e - &w * h)).unwrap();
        let checks = [
            ((zp.zeta().dot(&u) - zm.zeta().dot(&u)) / (2.0 * h), z.d1(&u, &w)),
            ((zp.d1(&u, &v) - zm.d1(&u, &v)) / (2.0 * h), z.d2(&u, &v, &w)),
            ((zp.d2(&u, &v, &s) - zm.d2(&u, &v, &s)) / (2.0 * h), z.d3(&u, &v, &s, &w)),
        ];
        for (num, an) in checks {
            numeric = numeric.max((num - an).abs() / (1.0 + an.abs()));
        }
    }
    outcome(
        analytic <= 1e-9 && numeric <= 1e-6,
        format!("analytic {analytic:.2e}, finite differences {numeric:.2e}"),
    )
}

fn parallel_cubic() -> Outcome {
    let mut r = rng(5);
    let mut worst = 0.0f64;
    for tag in all_tags() {
        let pair = canonical(&tag);
        for _ in 0..50 {
            let x = domain_point(pair.algebra(), 0.5, &mut r).unwrap();
            let quads = random_quads(pair.dim(), 4, &mut r);
            worst = worst.max(parallel_cubic_residual(&pair, &x, &quads).unwrap());
        }
    }
    let base = canonical(&FamilyTag::SymReal { m: 3 });
    let bent = cubic_perturbation(base.algebra(), base.gamma(), 0.2, &mut r).unwrap();
    let control = ImmersionPair::new(bent, base.gamma().clone()).unwrap();
    let x = domain_point(control.algebra(), 0.5, &mut r).unwrap();
    let neg = parallel_cubic_residual(&control, &x, &random_quads(6, 8, &mut r)).unwrap();
    outcome(
        worst <= 1e-7 && neg >= 1e-3,
        format!("max residual {worst:.2e} over {} pairs, perturbed control {neg:.2e}", all_tags().len()),
    )
}

fn hypersphere() -> Outcome {
    let mut r = rng(6);
    let mut worst = 0.0f64;
    for tag in all_tags().iter().filter(|t| t.is_semisimple()) {
        let pair = canonical(tag);
        for _ in 0..5 {
            let x = domain_point(pair.algebra(), 0.5, &mut r).unwrap();
            worst = worst.max(hypersphere_residual(&pair, &x).unwrap());
        }
    }
    // z != -n e: unequal block weights
    let parts = [canonical(&FamilyTag::RealLine), canonical(&FamilyTag::SymReal { m: 3 })];
    let mixed = ImmersionPair::weighted_sum(&parts, &[0.5, 0.5]).unwrap();
    let z = mixed.central_element().unwrap();
    let off = (z + mixed.unit() * mixed.dim() as f64).amax();
    let mut control = f64::INFINITY;
    for _ in 0..5 {
        let x = domain_point(mixed.algebra(), 0.5, &mut r).unwrap();
        control = control.min(hypersphere_residual(&mixed, &x).unwrap());
    }
    outcome(
        worst <= 1e-8 && control > 1e-3 && off > 1e-3,
        format!("gamma = -g/n: {worst:.2e}; control |z + n e| = {off:.2e}, min residual {control:.2e}"),
    )
}

fn algebraic_laws() -> Outcome {
    let tags = all_tags();
    let mut r = rng(7);
    let (mut ff, mut inv, mut ex, mut iso) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for i in 0..100 {
        let j = make_algebra::<f64>(&tags[i % tags.len()]).unwrap().algebra;
        let n = j.dim();
        let (x, y) = (gaussian::<f64>(n, &mut r), gaussian::<f64>(n, &mut r));
        ff = ff.max(j.fundamental_formula_residual(&x, &y));

        let x = near_unit(&j, &mut r);
        let xi = j.inverse(&x).unwrap();
        let pinv = j.quad_op(&x).try_inverse().unwrap();
        inv = inv.max(rel_mat(&j.quad_op(&xi), &pinv));
        inv = inv.max(rel_mat(&j.mul_op(&xi), &(j.mul_op(&x) * &pinv)));

        let u = gaussian::<f64>(n, &mut r) * 0.5;
        ex = ex.max(rel_mat(&j.quad_op(&j.exp(&u).unwrap()), &linalg::expm(&(j.mul_op(&u) * 2.0))));

        let u = near_unit(&j, &mut r);
        let z = gaussian::<f64>(n, &mut r);
        let isotope = j.isotope(&u).unwrap();
        iso = iso.max(rel_mat(&isotope.quad_op(&z), &(j.quad_op(&z) * j.quad_op(&u))));
    }
    outcome(
        ff <= 1e-8 && inv <= 1e-8 && ex <= 1e-8 && iso <= 1e-8,
        format!("fundamental {ff:.2e}, inverse {inv:.2e}, exponential {ex:.2e}, isotope {iso:.2e}"),
    )
}

fn calabi() -> Outcome {
    let mut r = rng(8);
    let pool = [
        FamilyTag::RealLine,
        FamilyTag::ComplexField,
        FamilyTag::SymReal { m: 3 },
        FamilyTag::quadratic_real(&[1.0, 1.0, -1.0]),
        FamilyTag::HermComplex { m: 3 },
        FamilyTag::SkewHermQuat { m: 2 },
    ];
    let mut worst = 0.0f64;
    let mut with_points = 0;
    for _ in 0..100 {
        let k = r.gen_range(1..=4);
        let mut fams: Vec<FamilyTag> = (0..k).map(|_| pool[r.gen_range(0..pool.len())].clone()).collect();
        if r.gen_bool(0.5) {
            fams.push(FamilyTag::RealLine);
        }
        if fams.contains(&FamilyTag::RealLine) {
            with_points += 1;
        }
        let c = r.gen_range(-1.0..1.0f64).exp();
        let cfg = CalabiConfig::random(&fams, c, &mut r).unwrap();
        let pts: Vec<DVector<f64>> = cfg
            .factors
            .iter()
            .map(|f| {
                let s = LevelSurface::<f64>::omega(&[f.family.clone()]).unwrap();
                let d = domain_point(s.algebra(), 0.5, &mut r).unwrap();
                s.level_point(f.level, &d).unwrap()
            })
            .collect();
        let f = calabi_point(&cfg, &pts).unwrap();
        let w = LevelSurface::<f64>::omega(&fams).unwrap().value(&f).unwrap();
        worst = worst.max((w - c).abs() / c);
    }
    outcome(
        worst <= 1e-8 && with_points > 0,
        format!("100 configs ({with_points} with point factors), max relative error {worst:.2e}"),
    )
}

fn reconstruction() -> Outcome {
    let mut worst_c = 0.0f64;
    let mut worst_e = 0.0f64;
    let mut tags: Vec<FamilyTag> = table_tags();
    tags.push(FamilyTag::TruncPoly { n: 3 });
    for tag in &tags {
        let spec = PotentialSpec::hypersphere(&[tag.clone()]).unwrap();
        let pair = spec.to_pair::<f64>().unwrap();
        let nu = spec.nu();
        let rec = algebra_from_potential(&|p: &DVector<f64>| spec.eval(p).unwrap() / nu, pair.unit()).unwrap();
        let diff = rec
            .structure
            .data
            .iter()
            .zip(pair.algebra().structure())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        worst_c = worst_c.max(diff);
        worst_e = worst_e.max((&rec.unit - pair.unit()).amax());
    }
    outcome(
        worst_c <= 1e-5 && worst_e <= 1e-5,
        format!("{} potentials, structure {worst_c:.2e}, unit {worst_e:.2e}", tags.len()),
    )
}

/// The closed forms for the last coefficient, transcribed independently of
/// the series solver.
fn closed_form(p: &[f64]) -> f64 {
    let p0 = p[0];
    let l = -p0 * p0.ln();
    match p.len() {
        1 => l,
        2 => l - p[1] + 0.5 * p[1] * p[1] / p0,
        3 => {
            let (p1, p2) = (p[1], p[2]);
            l - p1 + 0.5 * p1 * p1 / p0 - p2 - p1.powi(3) / (3.0 * p0 * p0) + p1 * p2 / p0
        }
        _ => {
            let (p1, p2, p3) = (p[1], p[2], p[3]);
            l - p1 + 0.5 * p1 * p1 / p0 - p2 - p1.powi(3) / (3.0 * p0 * p0) + p1 * p2 / p0 - p3
                + p1.powi(4) / (4.0 * p0.powi(3))
                - p1 * p1 * p2 / (p0 * p0)
                + p1 * p3 / p0
                + 0.5 * p2 * p2 / p0
        }
    }
}

fn nilpotent_family() -> Outcome {
    let mut r = rng(10);
    let mut worst = 0.0f64;
    for n in 2..=5 {
        for _ in 0..100 {
            let mut p: Vec<f64> = vec![r.gen_range(0.2..3.0)];
            p.extend((1..n - 1).map(|_| r.gen_range(-2.0..2.0)));
            let want = closed_form(&p);
            worst = worst.max((nilpotent_surface_coeff(&p).unwrap() - want).abs() / (1.0 + want.abs()));
        }
    }
    let mut g_nil = 0.0f64;
    for n in 2..=6 {
        let (j, _) = nil_ideal_algebra::<f64>(n).unwrap();
        g_nil = g_nil.max(j.trace_form().amax());
    }
    outcome(
        worst <= 1e-10 && g_nil <= 1e-12,
        format!("closed forms n = 2..5: {worst:.2e}; g on nil ideals {g_nil:.2e}"),
    )
}

fn orthant() -> Outcome {
    let s = LevelSurface::<f64>::omega(&[FamilyTag::RealLine, FamilyTag::RealLine, FamilyTag::RealLine]).unwrap();
    let sample = sample_surface(&s, 1.0, 100, 11).unwrap();
    let mut worst = 0.0f64;
    let mut positive = true;
    for p in &sample.points {
        positive &= p.iter().all(|v| *v > 0.0);
        worst = worst.max((p[0] * p[1] * p[2] - 1.0).abs());
    }
    // the equal-weight member of the direct-sum family is -g/n
    let parts: Vec<_> = (0..3).map(|_| canonical(&FamilyTag::RealLine)).collect();
    let pair = ImmersionPair::weighted_sum(&parts, &[1.0, 1.0, 1.0]).unwrap();
    let g = pair.algebra().trace_form() / -3.0;
    let hyper = sample
        .points
        .iter()
        .map(|p| hypersphere_residual(&pair, &DVector::from_column_slice(p)).unwrap())
        .fold(0.0f64, f64::max);
    let same = (pair.gamma() - g).amax();
    outcome(
        worst <= 1e-9 && positive && sample.max_residual() <= 1e-9 && hyper <= 1e-8 && same < 1e-15,
        format!("100 points, |x1 x2 x3 - 1| {worst:.2e}, hypersphere {hyper:.2e}"),
    )
}

/// Nil ideal of R[t]/(t^n) in a random basis, with its transported form.
fn seeded_nil(n: usize, seed: u64) -> (JordanAlgebra<f64>, DMatrix<f64>) {
    let (j, gamma) = nil_ideal_algebra::<f64>(n).unwrap();
    let d = j.dim();
    let mut r = rng(seed);
    let s = DMatrix::<f64>::identity(d, d) + DMatrix::from_column_slice(d, d, gaussian::<f64>(d * d, &mut r).as_slice()) * 0.3;
    (j.change_basis(&s).unwrap(), s.transpose() * gamma * &s)
}

/// `|F'''' - 1/2 sym(F''' F''^{-1} F''')|`, normalized by its inputs.
fn graph_nabla_c(f: &dyn Fn(&DVector<f64>) -> f64, x: &DVector<f64>) -> f64 {
    let n = x.len();
    let hinv = fd::hessian(&f, x).try_inverse().unwrap();
    let f3 = fd::third(&f, x);
    let f4 = fd::fourth(&f, x);
    let pair = |a: usize, b: usize, c: usize, d: usize| {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                s += f3.get(a, b, p) * hinv[(p, q)] * f3.get(c, d, q);
            }
        }
        s
    };
    let mut worst = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let q = 0.5 * (pair(a, b, c, d) + pair(a, c, b, d) + pair(a, d, b, c));
                    worst = worst.max((f4.get(a, b, c, d) - q).abs());
                }
            }
        }
    }
    worst / (f4.amax() + n as f64 * hinv.amax() * f3.amax() * f3.amax() + 1e-30)
}

fn graph_potentials() -> Outcome {
    let (j, g) = seeded_nil(5, 4);
    let f = |x: &DVector<f64>| graph_potential(&j, &g, x, GraphKind::JordanSeries).unwrap();
    let mut r = rng(12);
    let mut series = 0.0f64;
    for _ in 0..3 {
        let x = gaussian::<f64>(j.dim(), &mut r) * 0.5;
        series = series.max(graph_nabla_c(&f, &x));
    }

    let (j, g) = seeded_nil(4, 11);
    let nil = j.is_nil(&[gaussian::<f64>(j.dim(), &mut r)], 1e-10);
    let trace_free = j.has_vanishing_trace_pairing(1e-12);
    let f = |x: &DVector<f64>| graph_potential(&j, &g, x, GraphKind::Cubic).unwrap();
    let (x, y) = (gaussian::<f64>(j.dim(), &mut r), gaussian::<f64>(j.dim(), &mut r));
    let (t1, t2) = (fd::third(&f, &x), fd::third(&f, &y));
    let flat = t1.max_abs_diff(&t2) / (1.0 + t1.amax());
    let d0 = linalg::det(&g);
    let det = (linalg::det(&fd::hessian(&f, &x)) - d0).abs() / (1.0 + d0.abs());
    outcome(
        series <= 1e-4 && nil && trace_free && flat <= 1e-6 && det <= 1e-6,
        format!(
            "jordan series {series:.2e}; cubic: nil {nil}, tr(L_u L_v) = 0 {trace_free}, F''' drift {flat:.2e}, det F'' drift {det:.2e}"
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("catalog integrity", catalog_integrity),
        ("det P agreement", det_p_agreement),
        ("omega laws", omega_laws),
        ("geometry identities at e", identities_at_unit),
        ("parallel cubic form", parallel_cubic),
        ("hypersphere characterization", hypersphere),
        ("algebraic laws", algebraic_laws),
        ("Calabi products", calabi),
        ("reconstruction round trip", reconstruction),
        ("nilpotent family", nilpotent_family),
        ("orthant sanity", orthant),
        ("graph potentials", graph_potentials),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        let status = if res.pass { "PASS" } else { "FAIL" };
        if !res.pass {
            failures += 1;
        }
        println!(
            "{status} {:>2}. {name}: {} [{:.1} s]",
            i + 1,
            res.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
