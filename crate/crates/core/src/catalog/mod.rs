//! Catalog of simple Jordan algebras carrying hyperbolic-type immersions.

mod complex;
mod models;
pub mod octonion;
mod omega;
pub mod pfaffian;
pub mod trunc;

pub use complex::ComplexAlgebra;
pub use omega::OmegaSpec;

use crate::error::{Error, Result};
use crate::jordan::JordanAlgebra;
use crate::scalar::{Complex, Real};
use models::{MatrixModel, Model, OctModel, QuadModel, ScalarModel, Shape, TruncModel};
use nalgebra::{DMatrix, DVector};
use octonion::{HypercomplexTable, OctonionKind};
use serde::{Deserialize, Serialize};

/// Base algebras admitting a diagonal twist `A *_G B = (A G B + B G A) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwistBase {
    SymReal,
    HermComplex,
    HermQuat,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params")]
pub enum FamilyTag {
    RealLine,
    ComplexField,
    /// Real spin factor for a symmetric `q`; the unit defaults to
    /// `e_1 / sqrt(q_11)`.
    QuadraticFactorReal {
        q: Vec<Vec<f64>>,
        #[serde(default)]
        unit: Option<Vec<f64>>,
    },
    QuadraticFactorComplex { m: usize },
    SymReal { m: usize },
    SymComplex { m: usize },
    FullReal { m: usize },
    FullComplex { m: usize },
    HermComplex { m: usize },
    FullQuat { m: usize },
    HermQuat { m: usize },
    SkewHermQuat { m: usize },
    SkewSplitQuatReal { m: usize },
    SkewSplitQuatComplex { m: usize },
    /// Hermitian 3 x 3 division octonion matrices, twisted by
    /// `diag(1, 1, -1)` when `negatives = 1`.
    OctHerm3 {
        #[serde(default)]
        negatives: usize,
    },
    SplitOctHerm3Real,
    SplitOctHerm3Complex,
    /// Twist of `base` by `diag(1, .., 1, -1, .., -1)` with `negatives`
    /// trailing minus signs.
    TwistedIsotope {
        base: TwistBase,
        m: usize,
        negatives: usize,
    },
    TruncPoly { n: usize },
}

/// One row of the machine-readable classification table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub family: FamilyTag,
    pub label: String,
    pub vector_space: String,
    pub real_dim: usize,
    pub real_dim_formula: String,
    pub range: String,
    pub potential: String,
    pub omega: String,
    pub det_p: String,
    pub complex: bool,
}

/// An algebra produced by the catalog together with its trace form and
/// closed-form data.
#[derive(Clone, Debug)]
pub struct CatalogEntry<T: Real> {
    pub tag: FamilyTag,
    pub algebra: JordanAlgebra<T>,
    pub g: DMatrix<T>,
    pub omega: OmegaSpec,
    pub complex: Option<ComplexAlgebra<T>>,
}

impl FamilyTag {
    /// Quadratic factor with `Q = diag(signs)` and unit `e_1`.
    pub fn quadratic_real(signs: &[f64]) -> Self {
        let m = signs.len();
        let q = (0..m)
            .map(|i| (0..m).map(|j| if i == j { signs[i] } else { 0.0 }).collect())
            .collect();
        FamilyTag::QuadraticFactorReal { q, unit: None }
    }

    /// The seventeen families of the classification, each at its smallest
    /// admissible parameter.
    pub fn catalog() -> Vec<FamilyTag> {
        use FamilyTag::*;
        vec![
            ComplexField,
            QuadraticFactorComplex { m: 3 },
            SymComplex { m: 3 },
            FullComplex { m: 3 },
            SkewSplitQuatComplex { m: 3 },
            SplitOctHerm3Complex,
            RealLine,
            FamilyTag::quadratic_real(&[1.0, 1.0, -1.0]),
            FullReal { m: 3 },
            FullQuat { m: 2 },
            SymReal { m: 3 },
            HermComplex { m: 3 },
            HermQuat { m: 3 },
            SkewSplitQuatReal { m: 3 },
            SkewHermQuat { m: 2 },
            OctHerm3 { negatives: 0 },
            SplitOctHerm3Real,
        ]
    }

    /// Twisted variants at their smallest parameters.
    pub fn twisted_catalog() -> Vec<FamilyTag> {
        use FamilyTag::*;
        vec![
            TwistedIsotope {
                base: TwistBase::SymReal,
                m: 3,
                negatives: 1,
            },
            TwistedIsotope {
                base: TwistBase::HermComplex,
                m: 3,
                negatives: 1,
            },
            TwistedIsotope {
                base: TwistBase::HermQuat,
                m: 3,
                negatives: 1,
            },
            OctHerm3 { negatives: 1 },
        ]
    }

    pub fn label(&self) -> String {
        use FamilyTag::*;
        match self {
            RealLine => "RealLine".into(),
            ComplexField => "ComplexField".into(),
            QuadraticFactorReal { q, .. } => format!("QuadraticFactorReal({})", q.len()),
            QuadraticFactorComplex { m } => format!("QuadraticFactorComplex({m})"),
            SymReal { m } => format!("SymReal({m})"),
            SymComplex { m } => format!("SymComplex({m})"),
            FullReal { m } => format!("FullReal({m})"),
            FullComplex { m } => format!("FullComplex({m})"),
            HermComplex { m } => format!("HermComplex({m})"),
            FullQuat { m } => format!("FullQuat({m})"),
            HermQuat { m } => format!("HermQuat({m})"),
            SkewHermQuat { m } => format!("SkewHermQuat({m})"),
            SkewSplitQuatReal { m } => format!("SkewSplitQuatReal({m})"),
            SkewSplitQuatComplex { m } => format!("SkewSplitQuatComplex({m})"),
            OctHerm3 { negatives: 0 } => "OctHerm3".into(),
            OctHerm3 { negatives } => format!("OctHerm3(twist {negatives})"),
            SplitOctHerm3Real => "SplitOctHerm3Real".into(),
            SplitOctHerm3Complex => "SplitOctHerm3Complex".into(),
            TwistedIsotope { base, m, negatives } => {
                format!("TwistedIsotope({base:?}({m}), {negatives} negative)")
            }
            TruncPoly { n } => format!("TruncPoly({n})"),
        }
    }

    /// Short family name, independent of parameters.
    pub fn name(&self) -> &'static str {
        use FamilyTag::*;
        match self {
            RealLine => "RealLine",
            ComplexField => "ComplexField",
            QuadraticFactorReal { .. } => "QuadraticFactorReal",
            QuadraticFactorComplex { .. } => "QuadraticFactorComplex",
            SymReal { .. } => "SymReal",
            SymComplex { .. } => "SymComplex",
            FullReal { .. } => "FullReal",
            FullComplex { .. } => "FullComplex",
            HermComplex { .. } => "HermComplex",
            FullQuat { .. } => "FullQuat",
            HermQuat { .. } => "HermQuat",
            SkewHermQuat { .. } => "SkewHermQuat",
            SkewSplitQuatReal { .. } => "SkewSplitQuatReal",
            SkewSplitQuatComplex { .. } => "SkewSplitQuatComplex",
            OctHerm3 { .. } => "OctHerm3",
            SplitOctHerm3Real => "SplitOctHerm3Real",
            SplitOctHerm3Complex => "SplitOctHerm3Complex",
            TwistedIsotope { .. } => "TwistedIsotope",
            TruncPoly { .. } => "TruncPoly",
        }
    }

    /// Complex families are realified; their coordinates are `(Re z, Im z)`.
    pub fn is_complex(&self) -> bool {
        use FamilyTag::*;
        matches!(
            self,
            ComplexField
                | QuadraticFactorComplex { .. }
                | SymComplex { .. }
                | FullComplex { .. }
                | SkewSplitQuatComplex { .. }
                | SplitOctHerm3Complex
        )
    }

    pub fn is_semisimple(&self) -> bool {
        !matches!(self, FamilyTag::TruncPoly { .. })
    }

    /// Number of model coordinates (complex dimension for complex families).
    fn ncoords(&self) -> usize {
        use FamilyTag::*;
        match self {
            RealLine | ComplexField => 1,
            QuadraticFactorReal { q, .. } => q.len(),
            QuadraticFactorComplex { m } => *m,
            SymReal { m } | SymComplex { m } => m * (m + 1) / 2,
            FullReal { m } | FullComplex { m } | HermComplex { m } => m * m,
            FullQuat { m } => 4 * m * m,
            HermQuat { m } | SkewSplitQuatReal { m } | SkewSplitQuatComplex { m } => m * (2 * m - 1),
            SkewHermQuat { m } => m * (2 * m + 1),
            OctHerm3 { .. } | SplitOctHerm3Real | SplitOctHerm3Complex => 27,
            TwistedIsotope { base, m, .. } => match base {
                TwistBase::SymReal => m * (m + 1) / 2,
                TwistBase::HermComplex => m * m,
                TwistBase::HermQuat => m * (2 * m - 1),
            },
            TruncPoly { n } => *n,
        }
    }

    pub fn real_dim(&self) -> usize {
        if self.is_complex() {
            2 * self.ncoords()
        } else {
            self.ncoords()
        }
    }

    /// The exponent `k` with `det P_x = f(x)^k` for the generic norm `f`.
    pub fn exponent(&self) -> u32 {
        use FamilyTag::*;
        let k = match self {
            RealLine | ComplexField => 2,
            QuadraticFactorReal { q, .. } => q.len(),
            QuadraticFactorComplex { m } => *m,
            SymReal { m } | SymComplex { m } => m + 1,
            FullReal { m } | FullComplex { m } | HermComplex { m } => 2 * m,
            FullQuat { m } => 4 * m,
            HermQuat { m } => 2 * m - 1,
            SkewHermQuat { m } => 2 * m + 1,
            SkewSplitQuatReal { m } | SkewSplitQuatComplex { m } => 2 * (2 * m - 1),
            OctHerm3 { .. } | SplitOctHerm3Real | SplitOctHerm3Complex => 18,
            TwistedIsotope { base, m, .. } => match base {
                TwistBase::SymReal => m + 1,
                TwistBase::HermComplex => 2 * m,
                TwistBase::HermQuat => 2 * m - 1,
            },
            TruncPoly { n } => 2 * n,
        };
        k as u32
    }

    /// Checks the parameter ranges of the classification.
    pub fn validate(&self) -> Result<()> {
        use FamilyTag::*;
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!("{}: {what}", self.label())))
            }
        };
        match self {
            RealLine | ComplexField | SplitOctHerm3Real | SplitOctHerm3Complex => Ok(()),
            QuadraticFactorReal { q, unit } => {
                let m = q.len();
                need(m >= 3, "requires m >= 3")?;
                need(q.iter().all(|r| r.len() == m), "q must be square")?;
                for i in 0..m {
                    for j in 0..m {
                        need((q[i][j] - q[j][i]).abs() <= 1e-12, "q must be symmetric")?;
                    }
                }
                match unit {
                    Some(e) => {
                        need(e.len() == m, "unit length must match q")?;
                        let mut s = 0.0;
                        for i in 0..m {
                            for j in 0..m {
                                s += e[i] * q[i][j] * e[j];
                            }
                        }
                        need((s - 1.0).abs() <= 1e-12, "unit must satisfy e^T q e = 1")
                    }
                    None => need(q[0][0] > 0.0, "default unit needs q_11 > 0"),
                }
            }
            QuadraticFactorComplex { m }
            | SymReal { m }
            | SymComplex { m }
            | FullReal { m }
            | FullComplex { m }
            | HermComplex { m }
            | HermQuat { m }
            | SkewSplitQuatReal { m }
            | SkewSplitQuatComplex { m } => need(*m >= 3, "requires m >= 3"),
            FullQuat { m } | SkewHermQuat { m } => need(*m >= 2, "requires m >= 2"),
            OctHerm3 { negatives } => need(*negatives <= 1, "twist has at most one negative entry"),
            TwistedIsotope { m, negatives, .. } => {
                need(*m >= 3, "requires m >= 3")?;
                need(2 * negatives <= *m, "twist needs at least as many +1 as -1 entries")
            }
            TruncPoly { n } => need(*n >= 1, "requires n >= 1"),
        }
    }

    fn quad_data<T: Real>(q: &[Vec<f64>], unit: &Option<Vec<f64>>) -> (DMatrix<T>, DVector<T>) {
        let m = q.len();
        let qm = DMatrix::from_fn(m, m, |i, j| T::lit(q[i][j]));
        let e = match unit {
            Some(e) => DVector::from_iterator(m, e.iter().map(|v| T::lit(*v))),
            None => {
                let mut e = DVector::zeros(m);
                e[0] = T::lit(1.0 / q[0][0].sqrt());
                e
            }
        };
        (qm, e)
    }

    pub(crate) fn model<T: Real>(&self) -> Box<dyn Model<T>> {
        use FamilyTag::*;
        match self {
            RealLine | ComplexField => Box::new(ScalarModel),
            QuadraticFactorReal { q, unit } => {
                let (qm, e) = Self::quad_data::<T>(q, unit);
                Box::new(QuadModel::new(&qm, &e))
            }
            QuadraticFactorComplex { m } => {
                let qm = DMatrix::identity(*m, *m);
                let mut e = DVector::zeros(*m);
                e[0] = T::one();
                Box::new(QuadModel::new(&qm, &e))
            }
            SymReal { m } | SymComplex { m } => Box::new(MatrixModel::new(Shape::Sym, *m)),
            FullReal { m } | FullComplex { m } => Box::new(MatrixModel::new(Shape::Full, *m)),
            HermComplex { m } => Box::new(MatrixModel::new(Shape::Herm, *m)),
            FullQuat { m } => Box::new(MatrixModel::new(Shape::FullQuat, *m)),
            HermQuat { m } => Box::new(MatrixModel::new(Shape::HermQuat, *m)),
            SkewHermQuat { m } => Box::new(MatrixModel::new(Shape::SkewHermQuat, *m)),
            SkewSplitQuatReal { m } | SkewSplitQuatComplex { m } => {
                Box::new(MatrixModel::new(Shape::SkewSplit, *m))
            }
            OctHerm3 { .. } => Box::new(OctModel {
                table: HypercomplexTable::new(OctonionKind::Division),
            }),
            SplitOctHerm3Real | SplitOctHerm3Complex => Box::new(OctModel {
                table: HypercomplexTable::new(OctonionKind::Split),
            }),
            TwistedIsotope { base, m, .. } => match base {
                TwistBase::SymReal => Box::new(MatrixModel::new(Shape::Sym, *m)),
                TwistBase::HermComplex => Box::new(MatrixModel::new(Shape::Herm, *m)),
                TwistBase::HermQuat => Box::new(MatrixModel::new(Shape::HermQuat, *m)),
            },
            TruncPoly { n } => Box::new(TruncModel { n: *n }),
        }
    }

    /// Diagonal signs of the twist element, if any.
    fn twist_signs(&self) -> Option<Vec<f64>> {
        let signs = |m: usize, neg: usize| {
            (0..m)
                .map(|i| if i + neg >= m { -1.0 } else { 1.0 })
                .collect::<Vec<_>>()
        };
        match self {
            FamilyTag::TwistedIsotope { m, negatives, .. } => Some(signs(*m, *negatives)),
            FamilyTag::OctHerm3 { negatives } if *negatives > 0 => Some(signs(3, *negatives)),
            _ => None,
        }
    }

    /// Unit of the catalog algebra in model coordinates.
    pub(crate) fn unit_coords<T: Real>(&self) -> Vec<Complex<T>> {
        let model = self.model::<T>();
        match self.twist_signs() {
            Some(s) => {
                let st: Vec<T> = s.iter().map(|v| T::lit(*v)).collect();
                model.diag(&st).expect("twist base supports diagonal elements")
            }
            None => model.unit(),
        }
    }

    /// Model coordinates of a real working-basis vector.
    pub(crate) fn to_model_coords<T: Real>(&self, x: &DVector<T>) -> Vec<Complex<T>> {
        let n = self.ncoords();
        if self.is_complex() {
            (0..n).map(|i| Complex::new(x[i], x[n + i])).collect()
        } else {
            (0..n).map(|i| Complex::new(x[i], T::zero())).collect()
        }
    }

    /// Working-basis vector from model coordinates.
    pub(crate) fn from_model_coords<T: Real>(&self, z: &[Complex<T>]) -> DVector<T> {
        let n = self.ncoords();
        if self.is_complex() {
            DVector::from_fn(2 * n, |i, _| if i < n { z[i].re } else { z[i - n].im })
        } else {
            DVector::from_fn(n, |i, _| z[i].re)
        }
    }

    /// Matrix (or octonion) representation of a working-basis element, for
    /// display and cross-checks.  `None` for non-matrix families.
    pub fn representation<T: Real>(&self, x: &DVector<T>) -> Option<DMatrix<Complex<T>>> {
        use FamilyTag::*;
        let z = self.to_model_coords(x);
        let mm = |shape, m| Some(MatrixModel::<T>::new(shape, m).to_matrix(&z));
        match self {
            SymReal { m } | SymComplex { m } => mm(Shape::Sym, *m),
            FullReal { m } | FullComplex { m } => mm(Shape::Full, *m),
            HermComplex { m } => mm(Shape::Herm, *m),
            FullQuat { m } => mm(Shape::FullQuat, *m),
            HermQuat { m } => mm(Shape::HermQuat, *m),
            SkewHermQuat { m } => mm(Shape::SkewHermQuat, *m),
            SkewSplitQuatReal { m } | SkewSplitQuatComplex { m } => mm(Shape::SkewSplit, *m),
            TwistedIsotope { base, m, .. } => match base {
                TwistBase::SymReal => mm(Shape::Sym, *m),
                TwistBase::HermComplex => mm(Shape::Herm, *m),
                TwistBase::HermQuat => mm(Shape::HermQuat, *m),
            },
            _ => None,
        }
    }

    /// Inverse of [`FamilyTag::representation`].
    pub fn from_representation<T: Real>(&self, a: &DMatrix<Complex<T>>) -> Option<DVector<T>> {
        use FamilyTag::*;
        let mm = |shape, m| Some(self.from_model_coords(&MatrixModel::<T>::new(shape, m).from_matrix(a)));
        match self {
            SymReal { m } | SymComplex { m } => mm(Shape::Sym, *m),
            FullReal { m } | FullComplex { m } => mm(Shape::Full, *m),
            HermComplex { m } => mm(Shape::Herm, *m),
            FullQuat { m } => mm(Shape::FullQuat, *m),
            HermQuat { m } => mm(Shape::HermQuat, *m),
            SkewHermQuat { m } => mm(Shape::SkewHermQuat, *m),
            SkewSplitQuatReal { m } | SkewSplitQuatComplex { m } => mm(Shape::SkewSplit, *m),
            TwistedIsotope { base, m, .. } => match base {
                TwistBase::SymReal => mm(Shape::Sym, *m),
                TwistBase::HermComplex => mm(Shape::Herm, *m),
                TwistBase::HermQuat => mm(Shape::HermQuat, *m),
            },
            _ => None,
        }
    }

    pub fn table_row(&self) -> TableRow {
        use FamilyTag::*;
        let s = |x: &str| x.to_string();
        let (space, dimf, range, phi, omega, detp) = match self {
            ComplexField => (s("C"), s("2"), s(""), s("Re(c log x)"), s("|x|^2"), s("x^2")),
            QuadraticFactorComplex { .. } => (
                s("C^m"),
                s("2m"),
                s("m >= 3"),
                s("Re(c log x^T x)"),
                s("|x^T x|^m"),
                s("(x^T x)^m"),
            ),
            SymComplex { .. } => (
                s("S_m(C)"),
                s("m(m+1)"),
                s("m >= 3"),
                s("Re(c log det A)"),
                s("|det A|^(m+1)"),
                s("(det A)^(m+1)"),
            ),
            FullComplex { .. } => (
                s("M_m(C)"),
                s("2m^2"),
                s("m >= 3"),
                s("Re(c log det A)"),
                s("|det A|^(2m)"),
                s("(det A)^(2m)"),
            ),
            SkewSplitQuatComplex { .. } => (
                s("A_2m(C)"),
                s("2m(2m-1)"),
                s("m >= 3"),
                s("Re(c log pf A)"),
                s("|pf A|^(2(2m-1))"),
                s("(pf A)^(2(2m-1))"),
            ),
            SplitOctHerm3Complex => (
                s("H_3(O,C)"),
                s("54"),
                s(""),
                s("Re(c log det A)"),
                s("|det A|^18"),
                s("(det A)^18"),
            ),
            RealLine => (s("R"), s("1"), s(""), s("a log|x|"), s("|x|"), s("x^2")),
            QuadraticFactorReal { .. } => (
                s("R^m"),
                s("m"),
                s("m >= 3"),
                s("a log|x^T Q x|"),
                s("|x^T Q x|^(m/2)"),
                s("(x^T Q x)^m"),
            ),
            FullReal { .. } => (
                s("M_m(R)"),
                s("m^2"),
                s("m >= 3"),
                s("a log|det A|"),
                s("|det A|^m"),
                s("(det A)^(2m)"),
            ),
            FullQuat { .. } => (
                s("M_m(H)"),
                s("4m^2"),
                s("m >= 2"),
                s("a log det S"),
                s("(det S)^(2m)"),
                s("(det S)^(4m)"),
            ),
            SymReal { .. } => (
                s("S_m(R)"),
                s("m(m+1)/2"),
                s("m >= 3"),
                s("a log|det A|"),
                s("|det A|^((m+1)/2)"),
                s("(det A)^(m+1)"),
            ),
            HermComplex { .. } => (
                s("H_m(C)"),
                s("m^2"),
                s("m >= 3"),
                s("a log|det A|"),
                s("|det A|^m"),
                s("(det A)^(2m)"),
            ),
            HermQuat { .. } => (
                s("H_m(H)"),
                s("m(2m-1)"),
                s("m >= 3"),
                s("a log det S"),
                s("(det S)^(m-1/2)"),
                s("(det S)^(2m-1)"),
            ),
            SkewSplitQuatReal { .. } => (
                s("A_2m(R)"),
                s("m(2m-1)"),
                s("m >= 3"),
                s("a log|pf A|"),
                s("|pf A|^(2m-1)"),
                s("(pf A)^(2(2m-1))"),
            ),
            SkewHermQuat { .. } => (
                s("SH_m(H)"),
                s("m(2m+1)"),
                s("m >= 2"),
                s("a log det S"),
                s("(det S)^(m+1/2)"),
                s("(det S)^(2m+1)"),
            ),
            OctHerm3 { negatives } => (
                if *negatives == 0 {
                    s("H_3(O)")
                } else {
                    s("H_3(O, G)")
                },
                s("27"),
                s(""),
                s("a log|det A|"),
                s("|det A|^9"),
                s("(det A)^18"),
            ),
            SplitOctHerm3Real => (
                s("H_3(O,R)"),
                s("27"),
                s(""),
                s("a log|det A|"),
                s("|det A|^9"),
                s("(det A)^18"),
            ),
            TwistedIsotope { base, .. } => {
                let (sp, dimf, om, dp) = match base {
                    TwistBase::SymReal => ("S_m(R, G)", "m(m+1)/2", "|det A|^((m+1)/2)", "+-(det A)^(m+1)"),
                    TwistBase::HermComplex => ("H_m(C, G)", "m^2", "|det A|^m", "(det A)^(2m)"),
                    TwistBase::HermQuat => ("H_m(H, G)", "m(2m-1)", "|det S|^(m-1/2)", "(det S)^(2m-1)"),
                };
                (s(sp), s(dimf), s("m >= 3"), s("a log|det A|"), s(om), s(dp))
            }
            TruncPoly { .. } => (
                s("R[t]/(t^n)"),
                s("n"),
                s("n >= 1"),
                s("(log p)(1)"),
                s("|p_0|^n"),
                s("p_0^(2n)"),
            ),
        };
        TableRow {
            family: self.clone(),
            label: self.label(),
            vector_space: space,
            real_dim: self.real_dim(),
            real_dim_formula: dimf,
            range,
            potential: phi,
            omega,
            det_p: detp,
            complex: self.is_complex(),
        }
    }
}

/// Builds the catalog algebra for `tag`.
pub fn make_algebra<T: Real>(tag: &FamilyTag) -> Result<CatalogEntry<T>> {
    tag.validate()?;
    let model = tag.model::<T>();
    let n = model.ncoords();
    let basis = |a: usize| {
        let mut v = vec![Complex::new(T::zero(), T::zero()); n];
        v[a] = Complex::new(T::one(), T::zero());
        v
    };
    let (algebra, complex) = if tag.is_complex() {
        let ca = ComplexAlgebra::from_products(n, model.unit(), |a, b| model.mul(&basis(a), &basis(b)))?;
        (ca.realify(&tag.label())?, Some(ca))
    } else {
        let unit = DVector::from_iterator(n, model.unit().iter().map(|z| z.re));
        let base = JordanAlgebra::from_products(n, Some(unit), tag.label(), |a, b| {
            DVector::from_iterator(n, model.mul(&basis(a), &basis(b)).iter().map(|z| z.re))
        })?;
        match tag.twist_signs() {
            Some(_) => {
                let gamma = tag.from_model_coords::<T>(&tag.unit_coords::<T>());
                (base.isotope(&gamma)?.with_label(tag.label()), None)
            }
            None => (base, None),
        }
    };
    let g = algebra.trace_form().clone();
    Ok(CatalogEntry {
        tag: tag.clone(),
        algebra,
        g,
        omega: OmegaSpec::new(tag.clone()),
        complex,
    })
}

/// The canonical trace form attached to a catalog algebra: `-g / n` for the
/// semi-simple families and `-(p q)(1)` for truncated polynomials.
pub fn canonical_gamma<T: Real>(entry: &CatalogEntry<T>) -> DMatrix<T> {
    match entry.tag {
        FamilyTag::TruncPoly { n } => trunc::trunc_gamma(n),
        _ => &entry.g * (-T::one() / T::from_count(entry.algebra.dim())),
    }
}

/// Machine-readable classification table.
pub fn table() -> Vec<TableRow> {
    FamilyTag::catalog()
        .iter()
        .chain(FamilyTag::twisted_catalog().iter())
        .chain(std::iter::once(&FamilyTag::TruncPoly { n: 3 }))
        .map(FamilyTag::table_row)
        .collect()
}
