//! Adaptive complex-line quadrature, singularity-avoiding path planning, and
//! branch-continuous square roots along paths.

pub mod branch;
pub mod gk;
pub mod path;

pub use branch::{
    integrate_branched, integrate_over_sqrt, integrate_over_sqrt_from_base, SqrtTracker,
};
pub use gk::{adaptive_01, Quad};
pub use path::{build_safe_path, PathPolyline};
