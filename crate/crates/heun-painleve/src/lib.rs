//! Finite-gap Heun/Lame spectra and explicit Painleve VI families, numerically.
//!
//! The library is organized as a chain of small numerical engines that check
//! each other:
//!
//! * [`elliptic`]: Weierstrass lattice data from theta series, the sigma /
//!   zeta / wp ladder, Floquet-type building blocks, elliptic logarithms and
//!   the inverse modular map `tau_from_t`.
//! * [`quad`]: adaptive complex contour quadrature with explicit square-root
//!   branch tracking, endpoint singularity substitutions, and obstacle-aware
//!   path construction.
//! * [`spectral`]: spectral polynomials of finite-gap operators, closed-form
//!   Hermite-Krichever data for the low cases, and the integral route to the
//!   same data for cross-validation.
//! * [`modular`]: closed-form tau-derivatives of lattice quantities, checked
//!   against finite differences.
//! * [`monodromy`]: direct ODE transport around cycles and punctures,
//!   the independent referee for every closed-form multiplier.
//! * [`painleve`]: apparent-singularity constraints, the explicit two-parameter
//!   solution families, and residual meters for both the elliptic and the
//!   rational form of Painleve VI.
//! * [`report`] / [`suites`]: deterministic check reports and the named
//!   verification suites exposed by the CLI.

pub mod config;
pub mod elliptic;
pub mod error;
pub mod modular;
pub mod monodromy;
pub mod painleve;
pub mod quad;
pub mod report;
pub mod spectral;
pub mod suites;

pub use error::{Error, Result};

/// Complex double used everywhere in this crate.
pub type C64 = num_complex::Complex64;

/// Shorthand constructor, `c(re, im)`.
#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Real axis embedding.
#[inline]
pub fn cr(re: f64) -> C64 {
    C64::new(re, 0.0)
}

pub(crate) const PI: f64 = std::f64::consts::PI;

/// `i*pi` as a complex constant.
#[inline]
pub fn i_pi() -> C64 {
    C64::new(0.0, PI)
}
