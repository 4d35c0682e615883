//! Direct numerical monodromy: adaptive Runge-Kutta transport of second-order
//! ODE solutions along paths, Floquet matrices over lattice shifts, and loop
//! monodromy around apparent singularities. This is the oracle side of every
//! closed-form multiplier claim.

pub mod mono;
pub mod ode;
pub mod rk;

pub use mono::{
    det2, eigenvalues, floquet_multipliers, fundamental_curve, loop_matrix, mat_mul,
    monodromy_matrix, pair_mismatch, transport_curve, transport_polyline, M2,
};
pub use ode::Ode2;
pub use rk::{rk45, RkStats};
