use super::pair::ImmersionPair;
use crate::error::{check_dim, Error, Result};
use crate::jordan::Element;
use crate::linalg;
use crate::scalar::Real;
use crate::tensor::Tensor3;
use nalgebra::{DMatrix, DVector};

/// Analytic derivatives of `zeta` at one invertible point.
///
/// `Dzeta = gamma P_x^{-1}` and, writing `D_w P_x = 2(L_x L_w + L_w L_x - L_{xw})`,
/// `D^2 zeta(u, v, w) = -gamma(u, P^{-1} (D_w P) P^{-1} v)`.
pub struct ZetaAt<'a, T: Real> {
    pair: &'a ImmersionPair<T>,
    x: Element<T>,
    lx: DMatrix<T>,
    pinv: DMatrix<T>,
    dz: DMatrix<T>,
    zeta: DVector<T>,
}

impl<'a, T: Real> ZetaAt<'a, T> {
    pub(super) fn new(pair: &'a ImmersionPair<T>, x: &Element<T>) -> Result<Self> {
        let j = pair.algebra();
        check_dim(j.dim(), x.len())?;
        let p = j.quad_op(x);
        if linalg::rcond(&p) <= crate::jordan::default_rcond::<T>() {
            return Err(Error::NotInvertible {
                det: linalg::det(&p).as_f64(),
            });
        }
        let pinv = p
            .clone()
            .try_inverse()
            .ok_or(Error::NotInvertible { det: 0.0 })?;
        let dz = linalg::symmetrize(&(pair.gamma() * &pinv));
        let xinv = &pinv * x;
        let zeta = -(pair.gamma() * xinv);
        Ok(ZetaAt {
            pair,
            lx: j.mul_op(x),
            x: x.clone(),
            pinv,
            dz,
            zeta,
        })
    }

    pub fn point(&self) -> &Element<T> {
        &self.x
    }

    /// `zeta_x` as a covector.
    pub fn zeta(&self) -> &DVector<T> {
        &self.zeta
    }

    /// `Dzeta` as a symmetric matrix.
    pub fn dzeta(&self) -> &DMatrix<T> {
        &self.dz
    }

    pub fn p_inverse(&self) -> &DMatrix<T> {
        &self.pinv
    }

    /// `Psi = Dzeta^{-1}`, refusing condition numbers above `1e12`.
    pub fn psi(&self) -> Result<DMatrix<T>> {
        if linalg::rcond(&self.dz) < T::lit(1e-12) {
            return Err(Error::Degenerate("Dzeta is singular".into()));
        }
        self.dz
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Degenerate("Dzeta is singular".into()))
    }

    fn mul(&self, a: &Element<T>, b: &Element<T>) -> Element<T> {
        self.pair.algebra().mul(a, b)
    }

    /// `(D_w P_x) y`.
    pub fn dp_apply(&self, w: &Element<T>, y: &Element<T>) -> Element<T> {
        let wy = self.mul(w, y);
        let xy = &self.lx * y;
        let xw = &self.lx * w;
        (&self.lx * wy + self.mul(w, &xy) - self.mul(&xw, y)) * T::lit(2.0)
    }

    /// `(D_s D_w P) y = 2 (s(wy) + w(sy) - (sw)y)`.
    fn ddp_apply(&self, s: &Element<T>, w: &Element<T>, y: &Element<T>) -> Element<T> {
        let sw = self.mul(s, w);
        (self.mul(s, &self.mul(w, y)) + self.mul(w, &self.mul(s, y)) - self.mul(&sw, y)) * T::lit(2.0)
    }

    /// `D_w P_x` as a matrix.
    pub fn dp(&self, w: &Element<T>) -> DMatrix<T> {
        let j = self.pair.algebra();
        let lw = j.mul_op(w);
        let xw = &self.lx * w;
        (&self.lx * &lw + &lw * &self.lx - j.mul_op(&xw)) * T::lit(2.0)
    }

    pub fn d1(&self, u: &Element<T>, v: &Element<T>) -> T {
        linalg::bilinear(&self.dz, u, v)
    }

    pub fn d2(&self, u: &Element<T>, v: &Element<T>, w: &Element<T>) -> T {
        let y = &self.pinv * v;
        -(&self.dz * u).dot(&self.dp_apply(w, &y))
    }

    /// The covector `w -> D^2 zeta(u, v, w)`.
    pub fn d2_covector(&self, u: &Element<T>, v: &Element<T>) -> DVector<T> {
        let j = self.pair.algebra();
        let y = &self.pinv * v;
        let ly = j.mul_op(&y);
        let xy = &self.lx * &y;
        let b = (&self.lx * &ly + j.mul_op(&xy) - &ly * &self.lx) * T::lit(2.0);
        -(b.transpose() * (&self.dz * u))
    }

    /// Full tensor `D^2 zeta[u][v][w]`.
    pub fn d2_tensor(&self) -> Tensor3<T> {
        let n = self.x.len();
        let j = self.pair.algebra();
        let mut t = Tensor3::zeros(n);
        for w in 0..n {
            let m = -(&self.dz * self.dp(&j.basis(w)) * &self.pinv);
            for u in 0..n {
                for v in 0..n {
                    t.set(u, v, w, m[(u, v)]);
                }
            }
        }
        t
    }

    pub fn d3(&self, u: &Element<T>, v: &Element<T>, w: &Element<T>, s: &Element<T>) -> T {
        let du = &self.dz * u;
        let y = &self.pinv * v;
        let a = self.dp_apply(s, &(&self.pinv * self.dp_apply(w, &y)));
        let b = self.dp_apply(w, &(&self.pinv * self.dp_apply(s, &y)));
        let c = self.ddp_apply(s, w, &y);
        du.dot(&(a + b - c))
    }
}
