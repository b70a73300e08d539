//! Jordan algebras and the centro-affine hypersurfaces with parallel cubic
//! form they generate.
//!
//! The numerical core is generic over [`scalar::Real`] (`f32` or `f64`); the
//! aliases below fix the scalar for the common case.

pub mod catalog;
pub mod error;
pub mod fd;
pub mod geometry;
pub mod jordan;
pub mod linalg;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod surface;
pub mod tensor;

pub use error::{Error, Result};

pub type Algebra = jordan::JordanAlgebra<f64>;
pub type Algebra32 = jordan::JordanAlgebra<f32>;
pub type Pair = geometry::ImmersionPair<f64>;
pub type Pair32 = geometry::ImmersionPair<f32>;
pub type Entry = catalog::CatalogEntry<f64>;
pub type Entry32 = catalog::CatalogEntry<f32>;
