use super::pair::ImmersionPair;
use crate::error::{Error, Result};
use crate::jordan::Element;
use crate::sampling::{unit_vector, Rng};
use crate::scalar::Real;
use crate::tensor::Tensor3;
use nalgebra::DVector;

/// Random direction quadruples; every fourth one is diagonal `(v, v, v, v)`.
pub fn random_quads<T: Real>(n: usize, count: usize, rng: &mut Rng) -> Vec<[Element<T>; 4]> {
    (0..count)
        .map(|i| {
            if i % 4 == 0 {
                let v = unit_vector(n, rng);
                [v.clone(), v.clone(), v.clone(), v]
            } else {
                [
                    unit_vector(n, rng),
                    unit_vector(n, rng),
                    unit_vector(n, rng),
                    unit_vector(n, rng),
                ]
            }
        })
        .collect()
}

pub fn random_triples<T: Real>(n: usize, count: usize, rng: &mut Rng) -> Vec<[Element<T>; 3]> {
    (0..count)
        .map(|_| [unit_vector(n, rng), unit_vector(n, rng), unit_vector(n, rng)])
        .collect()
}

fn tiny<T: Real>() -> T {
    T::lit(1e-30)
}

/// Defect of the parallel cubic form condition
/// `D^3 zeta(a,b,c,d) = 1/2 [Psi(D^2 zeta(a,b,.), D^2 zeta(c,d,.)) + (ac)(bd) + (ad)(bc)]`
/// over the given direction quadruples, relative to the size of the terms.
pub fn parallel_cubic_residual<T: Real>(
    pair: &ImmersionPair<T>,
    x: &Element<T>,
    quads: &[[Element<T>; 4]],
) -> Result<T> {
    let z = pair.at(x)?;
    let psi = z.psi()?;
    let half = T::lit(0.5);
    let mut num = T::zero();
    let mut den = T::zero();
    for [a, b, c, d] in quads {
        let lhs = z.d3(a, b, c, d);
        let kab = z.d2_covector(a, b);
        let kcd = z.d2_covector(c, d);
        let kac = z.d2_covector(a, c);
        let kbd = z.d2_covector(b, d);
        let kad = z.d2_covector(a, d);
        let kbc = z.d2_covector(b, c);
        let t1 = kab.dot(&(&psi * &kcd));
        let t2 = kac.dot(&(&psi * &kbd));
        let t3 = kad.dot(&(&psi * &kbc));
        let rhs = (t1 + t2 + t3) * half;
        num = num.max((lhs - rhs).abs());
        den = den.max(lhs.abs() + (t1.abs() + t2.abs() + t3.abs()) * half);
    }
    Ok(num / (den + tiny()))
}

/// Defect of `D^2 zeta_{abc} Psi^{bc} + 2 n zeta_a = 0`.
pub fn hypersphere_residual<T: Real>(pair: &ImmersionPair<T>, x: &Element<T>) -> Result<T> {
    let z = pair.at(x)?;
    let j = pair.algebra();
    let n = j.dim();
    let ginv = pair
        .gamma()
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::Degenerate("gamma is singular".into()))?;
    // Psi P^{-1} = gamma^{-1} removes the inverse of Dzeta from the trace.
    let mut acc = DVector::zeros(n);
    for c in 0..n {
        acc += z.dp_apply(&j.basis(c), &ginv.column(c).into_owned());
    }
    let t = -(z.dzeta() * acc);
    let two_n = T::lit(2.0) * T::from_count(n);
    let r = &t + z.zeta() * two_n;
    Ok(r.norm() / (t.norm() + z.zeta().norm() * two_n + tiny()))
}

/// Defect of the quadric condition
/// `D^2 zeta_{abc} + 2 (Dzeta_{ab} zeta_c + Dzeta_{ac} zeta_b + Dzeta_{bc} zeta_a) + 4 zeta_a zeta_b zeta_c = 0`.
pub fn quadric_residual<T: Real>(
    pair: &ImmersionPair<T>,
    x: &Element<T>,
    triples: &[[Element<T>; 3]],
) -> Result<T> {
    let z = pair.at(x)?;
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    let mut num = T::zero();
    let mut den = T::zero();
    for [a, b, c] in triples {
        let (za, zb, zc) = (z.zeta().dot(a), z.zeta().dot(b), z.zeta().dot(c));
        let d2 = z.d2(a, b, c);
        let m1 = z.d1(a, b) * zc * two;
        let m2 = z.d1(a, c) * zb * two;
        let m3 = z.d1(b, c) * za * two;
        let cube = za * zb * zc * four;
        num = num.max((d2 + m1 + m2 + m3 + cube).abs());
        den = den.max(d2.abs() + m1.abs() + m2.abs() + m3.abs() + cube.abs());
    }
    Ok(num / (den + tiny()))
}

/// `K(u, v) = -1/2 Psi(D^2 zeta(u, v, .))`.
pub fn difference_apply<T: Real>(
    pair: &ImmersionPair<T>,
    x: &Element<T>,
    u: &Element<T>,
    v: &Element<T>,
) -> Result<Element<T>> {
    let z = pair.at(x)?;
    Ok(z.psi()? * z.d2_covector(u, v) * T::lit(-0.5))
}

/// Full difference tensor `K[g][a][b]`.
pub fn difference_tensor<T: Real>(pair: &ImmersionPair<T>, x: &Element<T>) -> Result<Tensor3<T>> {
    let z = pair.at(x)?;
    let psi = z.psi()?;
    let j = pair.algebra();
    let n = j.dim();
    let mut k = Tensor3::zeros(n);
    for a in 0..n {
        for b in a..n {
            let col = &psi * z.d2_covector(&j.basis(a), &j.basis(b)) * T::lit(-0.5);
            for g in 0..n {
                k.set(g, a, b, col[g]);
                k.set(g, b, a, col[g]);
            }
        }
    }
    Ok(k)
}
