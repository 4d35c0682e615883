//! Finite-gap spectral data: the even product function Ξ, the spectral
//! constant Q, solutions by quadrature, and the identities tying the
//! hyperelliptic description of the two-gap operator to the elliptic one.

pub mod lame;
pub mod reduction;
pub mod xi;

pub use lame::{
    eval_lambda_integral, hk_parameters_lame2, monodromy_multiplier_elliptic,
    monodromy_multiplier_hyperelliptic, q_lame2_closed, wp_alpha_lame2, xi_lame2, HKAnsatz,
};
pub use reduction::{verify_reduction_identities, KappaIdentity, ReductionReport};
pub use xi::{build_xi_even, compute_q, potential, potential_prime, q_spread, SpectralData, XiTerm};

