//! Centro-affine immersions attached to a Jordan algebra and a trace form.
//!
//! For a pair `(J, gamma)` the immersion is described through the one-form
//! `zeta_x(u) = -gamma(u, x^{-1})` on the invertible elements, together with
//! its derivatives.

mod graph;
mod pair;
mod potential;
mod reconstruct;
mod residuals;
mod zeta;

pub use graph::{graph_potential, GraphKind};
pub use pair::{solve_central_element, ImmersionPair};
pub use potential::{
    potential_line_integral, potential_path_integral, Coefficient, PotentialSpec, PotentialTerm,
};
pub use reconstruct::{
    algebra_from_potential, inverse_derivative, log_det_p_derivative, nabla_c_residual,
    pullback_tensors, PullbackTensors, Reconstruction,
};
pub use residuals::{
    difference_apply, difference_tensor, hypersphere_residual, parallel_cubic_residual,
    quadric_residual, random_quads, random_triples,
};
pub use zeta::ZetaAt;
