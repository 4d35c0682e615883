pub mod lattice;
pub mod log;
pub mod phi;
pub mod theta;

pub use lattice::{Ev, Lattice, MIN_IM_TAU};
pub use log::{agm, carlson_rf, gamma2_reduce, tau_from_t};
pub use theta::{theta1_derivs, theta_constants, Theta1};
