use crate::catalog::trunc;
use crate::error::{Error, Result};
use nalgebra::DVector;

/// The last coefficient `p_{n-1}` that puts `p` on `(log p)(1) = 0`, given
/// `p_0, .., p_{n-2}` with `p_0 > 0`.
///
/// `(log p)(1)` depends on `p_{n-1}` only through the term `p_{n-1} / p_0`,
/// so the solve is one evaluation.
pub fn nilpotent_surface_coeff(prefix: &[f64]) -> Result<f64> {
    let p0 = *prefix
        .first()
        .ok_or_else(|| Error::InvalidParameter("need at least p_0".into()))?;
    if !(p0 > 0.0) {
        return Err(Error::Domain(format!("p_0 = {p0} must be positive")));
    }
    let mut p = prefix.to_vec();
    p.push(0.0);
    let rest = trunc::trunc_potential(&DVector::from_vec(p))?;
    Ok(-p0 * rest)
}
