//! Randomized algebraic laws, checked with proptest over a fixed set of
//! catalog algebras.

use jordan_geom::catalog::{make_algebra, FamilyTag};
use jordan_geom::geometry::{parallel_cubic_residual, random_quads, ImmersionPair, PotentialSpec};
use jordan_geom::jordan::JordanAlgebra;
use jordan_geom::linalg;
use jordan_geom::sampling::rng;
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

fn tags() -> Vec<FamilyTag> {
    vec![
        FamilyTag::RealLine,
        FamilyTag::ComplexField,
        FamilyTag::quadratic_real(&[1.0, 1.0, -1.0]),
        FamilyTag::SymReal { m: 3 },
        FamilyTag::FullReal { m: 3 },
        FamilyTag::HermComplex { m: 3 },
        FamilyTag::SymComplex { m: 3 },
        FamilyTag::SkewSplitQuatReal { m: 3 },
        FamilyTag::TruncPoly { n: 3 },
    ]
}

fn algebra(i: usize) -> JordanAlgebra<f64> {
    make_algebra::<f64>(&tags()[i]).unwrap().algebra
}

fn pair(i: usize) -> ImmersionPair<f64> {
    ImmersionPair::canonical(&make_algebra::<f64>(&tags()[i]).unwrap()).unwrap()
}

/// An algebra index with two coordinate vectors of matching length.
fn two_vectors() -> impl Strategy<Value = (usize, Vec<f64>, Vec<f64>)> {
    (0..tags().len()).prop_flat_map(|i| {
        let n = tags()[i].real_dim();
        (
            Just(i),
            prop::collection::vec(-1.0..1.0f64, n),
            prop::collection::vec(-1.0..1.0f64, n),
        )
    })
}

/// `e + 0.4 v`, kept only when well conditioned.
fn near_unit(j: &JordanAlgebra<f64>, v: &[f64]) -> Option<DVector<f64>> {
    let x = j.unit().unwrap() + DVector::from_column_slice(v) * 0.4;
    (j.invertibility_rcond(&x) > 1e-3).then_some(x)
}

fn rel(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).amax() / (1.0 + b.amax())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fundamental_formula((i, x, y) in two_vectors()) {
        let j = algebra(i);
        let r = j.fundamental_formula_residual(&DVector::from_vec(x), &DVector::from_vec(y));
        prop_assert!(r < 1e-12, "{r:e}");
    }

    #[test]
    fn inverse_laws((i, v, _w) in two_vectors()) {
        let j = algebra(i);
        let Some(x) = near_unit(&j, &v) else { return Ok(()) };
        let xi = j.inverse(&x).unwrap();
        let pinv = j.quad_op(&x).try_inverse().unwrap();
        prop_assert!(rel(&j.quad_op(&xi), &pinv) < 1e-9);
        prop_assert!(rel(&j.mul_op(&xi), &(j.mul_op(&x) * &pinv)) < 1e-9);
        prop_assert!((j.mul(&x, &xi) - j.unit().unwrap()).amax() < 1e-10);
    }

    #[test]
    fn exponential_law((i, u, _w) in two_vectors()) {
        let j = algebra(i);
        let u = DVector::from_vec(u);
        let p = j.quad_op(&j.exp(&u).unwrap());
        let want = linalg::expm(&(j.mul_op(&u) * 2.0));
        prop_assert!(rel(&p, &want) < 1e-10);
    }

    #[test]
    fn isotope_laws((i, v, x) in two_vectors()) {
        let j = algebra(i);
        let Some(u) = near_unit(&j, &v) else { return Ok(()) };
        let x = DVector::from_vec(x);
        let iso = j.isotope(&u).unwrap();
        let want = j.quad_op(&x) * j.quad_op(&u);
        prop_assert!(rel(&iso.quad_op(&x), &want) < 1e-10);
        // (J^(u))^(u^-2) = J
        let back = iso.isotope(&j.inverse(&j.square(&u)).unwrap()).unwrap();
        let dev = back
            .structure()
            .iter()
            .zip(j.structure())
            .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
        prop_assert!(dev < 1e-8, "{dev:e}");
        prop_assert!((back.unit().unwrap() - j.unit().unwrap()).amax() < 1e-8);
    }

    #[test]
    fn homothety((i, v, _w) in two_vectors(), lam in 0.2..5.0f64, seed in 0u64..1000) {
        let p = pair(i);
        let Some(x) = near_unit(p.algebra(), &v) else { return Ok(()) };
        let z = p.zeta(&x).unwrap();
        let zl = p.zeta(&(&x * lam)).unwrap();
        prop_assert!((zl * lam - &z).amax() < 1e-9 * (1.0 + z.amax()));
        let quads = random_quads::<f64>(p.dim(), 8, &mut rng(seed));
        let r0 = parallel_cubic_residual(&p, &x, &quads).unwrap();
        let r1 = parallel_cubic_residual(&p, &(&x * lam), &quads).unwrap();
        prop_assert!(r0 < 1e-8 && r1 < 1e-8, "{r0:e} {r1:e}");
    }

    #[test]
    fn position_vector_identities((i, v, u) in two_vectors()) {
        let p = pair(i);
        let Some(x) = near_unit(p.algebra(), &v) else { return Ok(()) };
        let u = DVector::from_vec(u);
        let z = p.at(&x).unwrap();
        let zx = z.zeta().dot(&x);
        prop_assert!((zx - 1.0).abs() < 1e-10);
        let du = z.d1(&x, &u);
        prop_assert!((du + z.zeta().dot(&u)).abs() < 1e-9 * (1.0 + du.abs()));
        prop_assert!((z.d1(&x, &x) + 1.0).abs() < 1e-9);
    }

    #[test]
    fn direct_sum_additivity(
        (i, v1, _a) in two_vectors(),
        (k, v2, _b) in two_vectors(),
        w1 in 0.2..3.0f64,
        w2 in 0.2..3.0f64,
    ) {
        let (p1, p2) = (pair(i), pair(k));
        let Some(x1) = near_unit(p1.algebra(), &v1) else { return Ok(()) };
        let Some(x2) = near_unit(p2.algebra(), &v2) else { return Ok(()) };
        let sum = ImmersionPair::weighted_sum(&[p1.clone(), p2.clone()], &[w1, w2]).unwrap();
        let x = DVector::from_iterator(x1.len() + x2.len(), x1.iter().chain(x2.iter()).copied());
        let z = sum.zeta(&x).unwrap();
        let z1 = p1.zeta(&x1).unwrap() * (w1 / (w1 + w2));
        let z2 = p2.zeta(&x2).unwrap() * (w2 / (w1 + w2));
        let want = DVector::from_iterator(x.len(), z1.iter().chain(z2.iter()).copied());
        prop_assert!((z - &want).amax() < 1e-9 * (1.0 + want.amax()));

        let (t1, t2) = (tags()[i].clone(), tags()[k].clone());
        let spec = PotentialSpec::hypersphere(&[t1.clone(), t2.clone()]).unwrap();
        let s1 = PotentialSpec::hypersphere(&[t1]).unwrap();
        let s2 = PotentialSpec::hypersphere(&[t2]).unwrap();
        let n = x.len() as f64;
        let phi = spec.eval(&x).unwrap();
        let parts = x1.len() as f64 / n * s1.eval(&x1).unwrap() + x2.len() as f64 / n * s2.eval(&x2).unwrap();
        prop_assert!((phi - parts).abs() < 1e-10 * (1.0 + phi.abs()));
    }
}
