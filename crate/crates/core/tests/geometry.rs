use jordan_geom::catalog::{make_algebra, FamilyTag};
use jordan_geom::geometry::*;
use jordan_geom::jordan::JordanAlgebra;
use jordan_geom::linalg;
use jordan_geom::sampling::{cubic_perturbation, domain_point, gaussian, rng};
use nalgebra::{DMatrix, DVector};

fn pairs() -> Vec<(String, ImmersionPair<f64>)> {
    let mut tags = FamilyTag::catalog();
    tags.extend(FamilyTag::twisted_catalog());
    tags.extend((2..=5).map(|n| FamilyTag::TruncPoly { n }));
    tags.iter()
        .map(|t| {
            let e = make_algebra::<f64>(t).unwrap();
            (t.label(), ImmersionPair::canonical(&e).unwrap())
        })
        .collect()
}

fn small_pairs() -> Vec<(String, ImmersionPair<f64>)> {
    pairs().into_iter().filter(|(_, p)| p.dim() <= 16).collect()
}

#[test]
fn identities_at_unit() {
    let mut r = rng(1);
    for (name, pair) in pairs() {
        let j = pair.algebra();
        let e = pair.unit().clone();
        let z = pair.at(&e).unwrap();
        assert!((z.dzeta() - pair.gamma()).amax() < 1e-12, "{name}");
        assert!((z.zeta().dot(&e) - 1.0).abs() < 1e-12, "{name}");
        for _ in 0..3 {
            let u = gaussian::<f64>(j.dim(), &mut r);
            let v = gaussian::<f64>(j.dim(), &mut r);
            let v2 = j.square(&v);
            let d2 = z.d2(&u, &v, &v);
            let want2 = -2.0 * linalg::bilinear(pair.gamma(), &u, &v2);
            assert!((d2 - want2).abs() < 1e-9 * (1.0 + want2.abs()), "{name}: {d2} {want2}");
            let d3 = z.d3(&u, &v, &v, &v);
            let want3 = 6.0 * linalg::bilinear(pair.gamma(), &j.mul(&v, &u), &v2);
            assert!((d3 - want3).abs() < 1e-9 * (1.0 + want3.abs()), "{name}: {d3} {want3}");
        }
    }
}

#[test]
fn derivatives_agree_with_finite_differences() {
    let mut r = rng(2);
    for (name, pair) in small_pairs() {
        let n = pair.dim();
        let x = domain_point(pair.algebra(), 0.5, &mut r).unwrap();
        let u = gaussian::<f64>(n, &mut r);
        let v = gaussian::<f64>(n, &mut r);
        let w = gaussian::<f64>(n, &mut r);
        let s = gaussian::<f64>(n, &mut r);
        let h = 1e-5 * (1.0 + x.norm());
        let z = pair.at(&x).unwrap();
        let zp = pair.at(&(&x + &w * h)).unwrap();
        let zm = pair.at(&(&x - &w * h)).unwrap();
        // Dzeta(u, w) from zeta
        let fd1 = (zp.zeta().dot(&u) - zm.zeta().dot(&u)) / (2.0 * h);
        let an1 = z.d1(&u, &w);
        assert!((fd1 - an1).abs() < 1e-6 * (1.0 + an1.abs()), "{name} d1");
        // D2zeta(u, v, w) from Dzeta
        let fd2 = (zp.d1(&u, &v) - zm.d1(&u, &v)) / (2.0 * h);
        let an2 = z.d2(&u, &v, &w);
        assert!((fd2 - an2).abs() < 1e-6 * (1.0 + an2.abs()), "{name} d2 {fd2} {an2}");
        // symmetry
        assert!((z.d2(&w, &u, &v) - an2).abs() < 1e-9 * (1.0 + an2.abs()), "{name} d2 sym");
        assert!((z.d2_covector(&u, &v).dot(&w) - an2).abs() < 1e-9 * (1.0 + an2.abs()));
        // D3zeta(u, v, s, w) from D2zeta
        let fd3 = (zp.d2(&u, &v, &s) - zm.d2(&u, &v, &s)) / (2.0 * h);
        let an3 = z.d3(&u, &v, &s, &w);
        assert!((fd3 - an3).abs() < 1e-6 * (1.0 + an3.abs()), "{name} d3 {fd3} {an3}");
        assert!((z.d3(&w, &s, &u, &v) - an3).abs() < 1e-9 * (1.0 + an3.abs()), "{name} d3 sym");
    }
}

#[test]
fn inversion_invariance() {
    let mut r = rng(3);
    for (name, pair) in small_pairs() {
        let j = pair.algebra();
        let x = domain_point(j, 0.5, &mut r).unwrap();
        let xi = j.inverse(&x).unwrap();
        let u = gaussian::<f64>(j.dim(), &mut r);
        let v = gaussian::<f64>(j.dim(), &mut r);
        let p = j.quad_op(&x);
        let ut = -linalg::solve(&p, &u).unwrap();
        let vt = -linalg::solve(&p, &v).unwrap();
        let (zx, zi) = (pair.at(&x).unwrap(), pair.at(&xi).unwrap());
        let a = zi.zeta().dot(&ut);
        let b = -zx.zeta().dot(&u);
        assert!((a - b).abs() < 1e-9 * (1.0 + b.abs()), "{name}");
        assert!((zi.d1(&ut, &vt) - zx.d1(&u, &v)).abs() < 1e-8 * (1.0 + zx.d1(&u, &v).abs()), "{name}");
    }
}

#[test]
fn parallel_cubic_form_holds() {
    let mut r = rng(4);
    for (name, pair) in pairs() {
        for _ in 0..3 {
            let x = domain_point(pair.algebra(), 0.5, &mut r).unwrap();
            let quads = random_quads(pair.dim(), 8, &mut r);
            let res = parallel_cubic_residual(&pair, &x, &quads).unwrap();
            assert!(res < 1e-9, "{name}: {res:e}");
        }
    }
}

#[test]
fn parallel_cubic_negative_control() {
    let base = ImmersionPair::canonical(&make_algebra::<f64>(&FamilyTag::SymReal { m: 3 }).unwrap()).unwrap();
    let mut r = rng(5);
    let bent = cubic_perturbation(base.algebra(), base.gamma(), 0.2, &mut r).unwrap();
    let jres = bent.check_jordan_identity(50, 9, 1e-9);
    assert!(jres.max_abs > 1e-4, "{:e}", jres.max_abs);
    let pair = ImmersionPair::new(bent, base.gamma().clone()).unwrap();
    let quads = random_quads(pair.dim(), 8, &mut r);
    // At e the identity reduces to a tautology, so probe away from it.
    let x = domain_point(pair.algebra(), 0.5, &mut r).unwrap();
    let res = parallel_cubic_residual(&pair, &x, &quads).unwrap();
    assert!(res > 1e-3, "{res:e}");
}

#[test]
fn hypersphere_iff_canonical() {
    let mut r = rng(6);
    for (name, pair) in pairs() {
        if name.starts_with("TruncPoly") {
            continue;
        }
        let x = domain_point(pair.algebra(), 0.5, &mut r).unwrap();
        let res = hypersphere_residual(&pair, &x).unwrap();
        assert!(res < 1e-9, "{name}: {res:e}");
        let z = pair.central_element().unwrap();
        let want = pair.unit() * (-(pair.dim() as f64));
        assert!((z - want).amax() < 1e-8, "{name}");
    }
    // Mixed weights give z != -n e.
    let r1 = ImmersionPair::canonical(&make_algebra::<f64>(&FamilyTag::RealLine).unwrap()).unwrap();
    let s3 = ImmersionPair::canonical(&make_algebra::<f64>(&FamilyTag::SymReal { m: 3 }).unwrap()).unwrap();
    let mixed = ImmersionPair::weighted_sum(&[r1, s3], &[0.5, 0.5]).unwrap();
    let x = domain_point(mixed.algebra(), 0.5, &mut r).unwrap();
    assert!(hypersphere_residual(&mixed, &x).unwrap() > 1e-3);
    let quads = random_quads(mixed.dim(), 8, &mut r);
    assert!(parallel_cubic_residual(&mixed, &x, &quads).unwrap() < 1e-9);
}

#[test]
fn central_element_examples() {
    let r1 = make_algebra::<f64>(&FamilyTag::RealLine).unwrap().algebra;
    let rr = JordanAlgebra::direct_sum(&[r1.clone(), r1]).unwrap();
    let gamma = DMatrix::from_diagonal(&DVector::from_vec(vec![-0.5, -0.5]));
    let z = solve_central_element(&rr, &gamma, rr.trace_form()).unwrap();
    assert!((z - DVector::from_vec(vec![-2.0, -2.0])).amax() < 1e-14);
}

#[test]
fn quadric_detects_spin_factor() {
    let mut r = rng(7);
    let q = ImmersionPair::canonical(&make_algebra::<f64>(&FamilyTag::quadratic_real(&[1.0, 1.0, -1.0])).unwrap()).unwrap();
    let s = ImmersionPair::canonical(&make_algebra::<f64>(&FamilyTag::SymReal { m: 3 }).unwrap()).unwrap();
    for _ in 0..5 {
        let x = domain_point(q.algebra(), 0.5, &mut r).unwrap();
        let t = random_triples(3, 8, &mut r);
        assert!(quadric_residual(&q, &x, &t).unwrap() < 1e-10);
        let y = domain_point(s.algebra(), 0.5, &mut r).unwrap();
        let t = random_triples(6, 8, &mut r);
        assert!(quadric_residual(&s, &y, &t).unwrap() > 1e-3);
    }
}

#[test]
fn difference_tensor_recovers_product_at_unit() {
    for (name, pair) in small_pairs() {
        let k = difference_tensor(&pair, pair.unit()).unwrap();
        let j = pair.algebra();
        let n = j.dim();
        for g in 0..n {
            for a in 0..n {
                for b in 0..n {
                    assert!((k.get(g, a, b) - j.coef(g, a, b)).abs() < 1e-10, "{name}");
                }
            }
        }
        let mut r = rng(8);
        let x = domain_point(j, 0.5, &mut r).unwrap();
        let u = gaussian::<f64>(n, &mut r);
        let kxu = difference_apply(&pair, &x, &x, &u).unwrap();
        assert!((kxu - &u).amax() < 1e-9 * (1.0 + u.amax()), "{name}: K(x, u) = u");
    }
}

#[test]
fn potential_gradient_is_zeta() {
    use jordan_geom::scalar::Complex;
    let mut r = rng(10);
    let specs = vec![
        PotentialSpec::hypersphere(&[FamilyTag::SymReal { m: 3 }]).unwrap(),
        PotentialSpec::hypersphere(&[FamilyTag::RealLine, FamilyTag::HermQuat { m: 3 }]).unwrap(),
        PotentialSpec::weighted(
            &[FamilyTag::ComplexField, FamilyTag::RealLine],
            &[Complex::new(0.7, 0.4), Complex::new(0.3, 0.0)],
        )
        .unwrap(),
        PotentialSpec::weighted(&[FamilyTag::TruncPoly { n: 4 }], &[Complex::new(1.0, 0.0)]).unwrap(),
        PotentialSpec::weighted(
            &[FamilyTag::SymComplex { m: 3 }, FamilyTag::QuadraticFactorComplex { m: 3 }],
            &[Complex::new(0.5, -0.8), Complex::new(0.5, 0.3)],
        )
        .unwrap(),
    ];
    for spec in specs {
        let pair = spec.to_pair::<f64>().unwrap();
        let nu = spec.nu();
        assert!(spec.eval(pair.unit()).unwrap().abs() < 1e-14);
        for _ in 0..3 {
            let x = domain_point(pair.algebra(), 0.3, &mut r).unwrap();
            let grad = jordan_geom::fd::gradient(&|p: &DVector<f64>| spec.eval(p).unwrap(), &x);
            let z = pair.zeta(&x).unwrap() * nu;
            assert!((grad - &z).amax() < 1e-6 * (1.0 + z.amax()), "{spec:?}");
            let lam = 2.5;
            let lhs = spec.eval(&(&x * lam)).unwrap();
            let rhs = spec.eval(&x).unwrap() + nu * lam.ln();
            assert!((lhs - rhs).abs() < 1e-9);
            // quadrature oracle
            let li = potential_line_integral(&pair, &x, pair.unit(), 16).unwrap() * nu;
            let phi = spec.eval(&x).unwrap();
            assert!((li - phi).abs() < 1e-6, "{li} {phi}");
        }
    }
}

#[test]
fn sym3_potential_value() {
    let spec = PotentialSpec::hypersphere(&[FamilyTag::SymReal { m: 3 }]).unwrap();
    let entry = make_algebra::<f64>(&FamilyTag::SymReal { m: 3 }).unwrap();
    let a = FamilyTag::SymReal { m: 3 }
        .from_representation(&DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 3.0])).map(|v| jordan_geom::scalar::Complex::new(v, 0.0)))
        .unwrap();
    let phi = spec.eval(&a).unwrap();
    let det_p = linalg::det(&entry.algebra.quad_op(&a));
    assert!((det_p - 1296.0).abs() < 1e-9);
    assert!((phi - det_p.ln() / 12.0).abs() < 1e-12);
    assert!((phi - 6f64.ln() / 3.0).abs() < 1e-12);
}

#[test]
fn spiral_branch_tracking() {
    use jordan_geom::scalar::Complex;
    // c = i: Phi = -arg z, principal branch jumps at the negative axis.
    let spec = PotentialSpec::weighted(&[FamilyTag::ComplexField], &[Complex::new(1.0, 1.0)]).unwrap();
    let pair_spec = PotentialSpec::weighted(&[FamilyTag::ComplexField], &[Complex::new(1.0, 1.0)]).unwrap();
    let pair = pair_spec.to_pair::<f64>().unwrap();
    let nu = spec.nu();
    let path: Vec<DVector<f64>> = (0..=40)
        .map(|k| {
            let t = 3.0 * std::f64::consts::PI / 2.0 * k as f64 / 40.0;
            DVector::from_vec(vec![t.cos(), t.sin()])
        })
        .collect();
    let tracked = potential_path_integral(&pair, &path, 8).unwrap() * nu;
    // Re((1 + i) log z) on the unit circle is -arg z, tracked continuously.
    assert!((tracked + 1.5 * std::f64::consts::PI).abs() < 1e-6, "{tracked}");
    let principal = spec.eval(path.last().unwrap()).unwrap();
    assert!((principal - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
}

#[test]
fn log_derivative_identities() {
    let mut r = rng(11);
    let j = make_algebra::<f64>(&FamilyTag::SymReal { m: 3 }).unwrap().algebra;
    for _ in 0..5 {
        let x = domain_point(&j, 0.5, &mut r).unwrap();
        let u = gaussian::<f64>(6, &mut r);
        let h = 1e-5;
        let fd = (j.inverse(&(&x + &u * h)).unwrap() - j.inverse(&(&x - &u * h)).unwrap()) / (2.0 * h);
        assert!((fd - inverse_derivative(&j, &x, &u).unwrap()).amax() < 1e-6);
        let ld = |p: &DVector<f64>| linalg::det(&j.quad_op(p)).abs().ln();
        let fd = (ld(&(&x + &u * h)) - ld(&(&x - &u * h))) / (2.0 * h);
        let an = log_det_p_derivative(&j, &x, &u).unwrap();
        assert!((fd - an).abs() < 1e-6 * (1.0 + an.abs()));
    }
}

#[test]
fn reconstruction_round_trip() {
    for tag in [FamilyTag::SymReal { m: 3 }, FamilyTag::QuadraticFactorComplex { m: 3 }, FamilyTag::TruncPoly { n: 3 }] {
        let spec = PotentialSpec::hypersphere(&[tag.clone()]).unwrap();
        let pair = spec.to_pair::<f64>().unwrap();
        let nu = spec.nu();
        let rec = algebra_from_potential(&|p: &DVector<f64>| spec.eval(p).unwrap() / nu, pair.unit()).unwrap();
        let j = pair.algebra();
        let diff = rec
            .structure
            .data
            .iter()
            .zip(j.structure())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        assert!(diff < 1e-5, "{tag:?}: {diff:e}");
        assert!((&rec.unit - pair.unit()).amax() < 1e-5);
        assert!((&rec.gamma - pair.gamma()).amax() < 1e-6);
    }
}
