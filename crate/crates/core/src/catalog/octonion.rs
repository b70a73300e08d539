//! Eight-dimensional composition algebras used by the exceptional families.
//!
//! Both tables use a basis whose first element is the identity.  Products of
//! basis elements are signed basis elements.

use crate::scalar::{Complex, Real};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OctonionKind {
    Division,
    Split,
}

/// Multiplication table `e_r e_s = sign * e_index` plus the diagonal of the
/// norm form.
#[derive(Clone, Debug)]
pub struct HypercomplexTable {
    pub kind: OctonionKind,
    pub table: [[(usize, i8); 8]; 8],
    pub norm_signs: [i8; 8],
}

// Split basis order: 1, j, k, jk, l, jl, kl, (jk)l.
const SPLIT: [[(usize, i8); 8]; 8] = [
    [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)],
    [(1, 1), (0, 1), (3, 1), (2, 1), (5, 1), (4, 1), (7, -1), (6, -1)],
    [(2, 1), (3, -1), (0, 1), (1, -1), (6, 1), (7, 1), (4, 1), (5, 1)],
    [(3, 1), (2, -1), (1, 1), (0, -1), (7, 1), (6, 1), (5, -1), (4, -1)],
    [(4, 1), (5, -1), (6, -1), (7, -1), (0, 1), (1, -1), (2, -1), (3, -1)],
    [(5, 1), (4, -1), (7, -1), (6, -1), (1, 1), (0, -1), (3, 1), (2, 1)],
    [(6, 1), (7, 1), (4, -1), (5, 1), (2, 1), (3, -1), (0, -1), (1, -1)],
    [(7, 1), (6, 1), (5, -1), (4, 1), (3, 1), (2, -1), (1, 1), (0, 1)],
];

fn quat_mul(a: [i32; 4], b: [i32; 4]) -> [i32; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
        a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
    ]
}

fn quat_conj(a: [i32; 4]) -> [i32; 4] {
    [a[0], -a[1], -a[2], -a[3]]
}

// Cayley-Dickson doubling: (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
fn cd_mul(x: [i32; 8], y: [i32; 8]) -> [i32; 8] {
    let (a, b) = ([x[0], x[1], x[2], x[3]], [x[4], x[5], x[6], x[7]]);
    let (c, d) = ([y[0], y[1], y[2], y[3]], [y[4], y[5], y[6], y[7]]);
    let p = quat_mul(a, c);
    let q = quat_mul(quat_conj(d), b);
    let r = quat_mul(d, a);
    let s = quat_mul(b, quat_conj(c));
    let mut out = [0; 8];
    for i in 0..4 {
        out[i] = p[i] - q[i];
        out[i + 4] = r[i] + s[i];
    }
    out
}

fn division_table() -> [[(usize, i8); 8]; 8] {
    let mut t = [[(0usize, 0i8); 8]; 8];
    for r in 0..8 {
        for s in 0..8 {
            let mut x = [0; 8];
            let mut y = [0; 8];
            x[r] = 1;
            y[s] = 1;
            let z = cd_mul(x, y);
            let idx = z.iter().position(|v| *v != 0).expect("basis product is nonzero");
            t[r][s] = (idx, z[idx] as i8);
        }
    }
    t
}

impl HypercomplexTable {
    pub fn new(kind: OctonionKind) -> Self {
        match kind {
            OctonionKind::Division => HypercomplexTable {
                kind,
                table: division_table(),
                norm_signs: [1; 8],
            },
            OctonionKind::Split => HypercomplexTable {
                kind,
                table: SPLIT,
                norm_signs: [1, -1, -1, 1, -1, 1, 1, -1],
            },
        }
    }

    pub fn mul<T: Real>(&self, a: &[Complex<T>], b: &[Complex<T>]) -> [Complex<T>; 8] {
        let mut c = [Complex::new(T::zero(), T::zero()); 8];
        for r in 0..8 {
            if a[r] == Complex::new(T::zero(), T::zero()) {
                continue;
            }
            for s in 0..8 {
                let (i, sg) = self.table[r][s];
                let p = a[r] * b[s];
                if sg > 0 {
                    c[i] += p;
                } else {
                    c[i] -= p;
                }
            }
        }
        c
    }

    /// Negates every imaginary unit coefficient.
    pub fn conj<T: Real>(&self, a: &[Complex<T>]) -> [Complex<T>; 8] {
        let mut c = [Complex::new(T::zero(), T::zero()); 8];
        c[0] = a[0];
        for i in 1..8 {
            c[i] = -a[i];
        }
        c
    }

    /// Quadratic norm `a conj(a)`, bilinear in complex coefficients.
    pub fn norm<T: Real>(&self, a: &[Complex<T>]) -> Complex<T> {
        let mut s = Complex::new(T::zero(), T::zero());
        for i in 0..8 {
            let t = a[i] * a[i];
            if self.norm_signs[i] > 0 {
                s += t;
            } else {
                s -= t;
            }
        }
        s
    }
}
