//! Painlevé VI from the isomonodromic deformation of the deformed finite-gap
//! operator: apparency of the extra singularity, the accessory ↔ ansatz maps,
//! closed two-parameter solution families, the frame change to the rational
//! variables, and finite-difference residuals against three independent forms
//! of the equation.

pub mod apparency;
pub mod families;
pub mod frame;
pub mod hk_maps;
pub mod residual;

pub use apparency::{
    apparency_p, frobenius_apparency_check, hamiltonian_rational, kappa_quarter, kappas_of_l,
    DeformedOperator,
};
pub use families::{family_b1, Family, FamilyKind};
pub use frame::{frame_hamiltonian, frame_map, P6Frame};
pub use hk_maps::{
    hk_forward_l0000, hk_forward_l1000, hk_inversion_l0000, hk_inversion_l1000, q_l0000, q_l1000,
    xi_and_q, DressedXi,
};
pub use residual::{p6_residual, p6_residual_curve, P6Residual, ResidualMode};
