//! Reduction identities for the two-gap operator: the hyperelliptic
//! integrals over the spectral curve w² = P(Ẽ) reduce to elliptic integrals,
//! and the pair (α, κ) can be recovered either way.
//!
//! Two identities are checked per spectral point:
//!  * the abelian-integral form of the elliptic log,
//!      ∫_∞^{℘(α)} dz/√(4z³−g₂z−g₃)  =  −(3/2) ∫_∞^{E} Ẽ dẼ/√P ,
//!    which holds modulo the period lattice (both sides are elliptic logs);
//!  * κ as a difference of integrals based at corresponding branch points,
//!      κ = −(1/2)∫_{3e_i}^{E} (Ẽ²−3g₂/2) dẼ/√P + ∫_{e_i}^{℘(α)} z dz/√(4z³−g₂z−g₃),
//!    and its matched single-integral form (integrand combined through the
//!    substitution z = ξ(Ẽ)), which holds on the nose up to the common sign.
//!
//! Infinite tails are handled by u = 1/√z, base-point singularities by the
//! z = a + u² substitution of the quadrature layer.

use super::lame::wp_alpha_lame2;
use crate::elliptic::Lattice;
use crate::error::Result;
use crate::quad::{integrate_branched, integrate_over_sqrt_from_base};
use crate::C64;

#[derive(Debug, Clone)]
pub struct KappaIdentity {
    /// which branch-point pair (3e_i on the quintic, e_i on the cubic)
    pub base_index: usize,
    /// −I_h/2 + I_e with the principal seeds on both legs
    pub two_leg: C64,
    /// distance to ±κ, minimized over leg signs and quasi-period shifts
    pub two_leg_mismatch: f64,
    /// the (m, n) of the optimal shift 2mη₁ + 2nη₃ (0,0 when on the nose)
    pub eta_shift: (i64, i64),
    /// single-integral form with the matched integrand, principal seed
    pub matched: C64,
    /// distance of the matched form to ±κ (no shifts allowed)
    pub matched_mismatch: f64,
}

#[derive(Debug, Clone)]
pub struct ReductionReport {
    pub energy: C64,
    /// κ reference value: (2/3)√(−Q)/(E²−3g₂), principal branch
    pub kappa_ref: C64,
    /// elliptic log of ℘(α) computed as ∫_∞^{℘(α)}, one branch
    pub alpha_log: C64,
    /// the hyperelliptic side −(3/2)∫_∞^E, one branch
    pub energy_log: C64,
    /// distance between the two logs mod the period lattice, minimized over
    /// the relative sign
    pub log_mismatch: f64,
    pub kappa: [KappaIdentity; 3],
}

/// P(Ẽ) = −(Ẽ²−3g₂) Π(Ẽ−3e_i), the quintic of the two-gap spectral curve.
fn quintic(lat: &Lattice, z: C64) -> C64 {
    let mut p = -(z * z - 3.0 * lat.g2);
    for i in 0..3 {
        p *= z - 3.0 * lat.e[i];
    }
    p
}

fn cubic(lat: &Lattice, z: C64) -> C64 {
    4.0 * z * z * z - lat.g2 * z - lat.g3
}

/// ∫_∞^{target} dz/√(4z³−g₂z−g₃) via z = 1/u²:
/// equals −2 ∫_0^{1/√target} du/√(4−g₂u⁴−g₃u⁶), seed √W(0) = +2.
fn elliptic_log_tail(lat: &Lattice, target: C64, tol: f64) -> Result<C64> {
    let u1 = target.sqrt().inv();
    let (g2, g3) = (lat.g2, lat.g3);
    let w2 = move |s: f64| -> Result<C64> {
        let u = u1 * s;
        let u2 = u * u;
        Ok(4.0 - g2 * u2 * u2 - g3 * u2 * u2 * u2)
    };
    let q = integrate_branched(w2, C64::new(2.0, 0.0), |_, w| Ok(u1 / w), tol)?;
    Ok(-2.0 * q.value)
}

/// −(3/2)∫_∞^{target} Ẽ dẼ/√P via Ẽ = 1/u²:
/// equals 3 ∫_0^{1/√target} du/√W₂ with W₂(u) = −(1−3g₂u⁴) Π(1−3e_i u²),
/// seed √W₂(0) = +i.
fn energy_log_tail(lat: &Lattice, target: C64, tol: f64) -> Result<C64> {
    let ue = target.sqrt().inv();
    let (g2, e) = (lat.g2, lat.e);
    let w2 = move |s: f64| -> Result<C64> {
        let u = ue * s;
        let u2 = u * u;
        let mut w = -(1.0 - 3.0 * g2 * u2 * u2);
        for ei in e {
            w *= 1.0 - 3.0 * ei * u2;
        }
        Ok(w)
    };
    let q = integrate_branched(w2, C64::new(0.0, 1.0), |_, w| Ok(ue / w), tol)?;
    Ok(3.0 * q.value)
}

/// Smallest |v − (2mη₁ + 2nη₃)| over |m|,|n| ≤ 2, with the minimizing shift.
fn dist_mod_eta(lat: &Lattice, v: C64) -> (f64, (i64, i64)) {
    let mut best = (f64::INFINITY, (0i64, 0i64));
    for m in -2i64..=2 {
        for n in -2i64..=2 {
            let d = (v - 2.0 * lat.eta1 * (m as f64) - 2.0 * lat.eta3 * (n as f64)).norm();
            if d < best.0 {
                best = (d, (m, n));
            }
        }
    }
    best
}

pub fn verify_reduction_identities(
    energy: C64,
    lat: &Lattice,
    quad_tol: f64,
) -> Result<ReductionReport> {
    let xi = wp_alpha_lame2(energy, lat)?;
    let den = energy * energy - 3.0 * lat.g2;
    let kappa_ref = 2.0 / 3.0 * (-super::lame::q_lame2_closed(energy, lat)).sqrt() / den;

    let alpha_log = elliptic_log_tail(lat, xi, quad_tol)?;
    let energy_log = energy_log_tail(lat, energy, quad_tol)?;
    let log_mismatch = [alpha_log - energy_log, alpha_log + energy_log]
        .iter()
        .map(|d| lat.dist_to_lattice(*d))
        .fold(f64::INFINITY, f64::min);

    let (g2, g3) = (lat.g2, lat.g3);
    let xi_of = move |z: C64| -(z * z * z - 27.0 * g3) / (9.0 * (z * z - 3.0 * g2));

    let one_base = |i: usize| -> Result<KappaIdentity> {
        let bi = 3.0 * lat.e[i];
        // quintic seed: P'(3e_i) = −(9e_i²−3g₂)·Π_{j≠i}(3e_i−3e_j)
        let mut dp = -(9.0 * lat.e[i] * lat.e[i] - 3.0 * g2);
        for j in 0..3 {
            if j != i {
                dp *= bi - 3.0 * lat.e[j];
            }
        }
        let ih = integrate_over_sqrt_from_base(
            bi,
            energy,
            |z| Ok(quintic(lat, z)),
            |z| Ok(z * z - 1.5 * g2),
            dp.sqrt(),
            quad_tol,
        )?
        .value;
        // cubic seed: (4z³−g₂z−g₃)'(e_i) = 12e_i²−g₂
        let dc = 12.0 * lat.e[i] * lat.e[i] - g2;
        let ie = integrate_over_sqrt_from_base(
            lat.e[i],
            xi,
            |z| Ok(cubic(lat, z)),
            |z| Ok(z),
            dc.sqrt(),
            quad_tol,
        )?
        .value;
        let mut best = (f64::INFINITY, (0i64, 0i64), C64::new(0.0, 0.0));
        for &sh in &[1.0, -1.0] {
            for &se in &[1.0, -1.0] {
                for &sk in &[1.0, -1.0] {
                    let v = -sh * ih / 2.0 + se * ie - sk * kappa_ref;
                    let (d, shift) = dist_mod_eta(lat, v);
                    if d < best.0 {
                        best = (d, shift, -sh * ih / 2.0 + se * ie);
                    }
                }
            }
        }
        let im = integrate_over_sqrt_from_base(
            bi,
            energy,
            |z| Ok(quintic(lat, z)),
            |z| Ok(-(z * z - 1.5 * g2) / 2.0 - 1.5 * xi_of(z) * z),
            dp.sqrt(),
            quad_tol,
        )?
        .value;
        let matched_mismatch = (im - kappa_ref).norm().min((im + kappa_ref).norm());
        Ok(KappaIdentity {
            base_index: i,
            two_leg: best.2,
            two_leg_mismatch: best.0,
            eta_shift: best.1,
            matched: im,
            matched_mismatch,
        })
    };
    let kappa = [one_base(0)?, one_base(1)?, one_base(2)?];

    Ok(ReductionReport {
        energy,
        kappa_ref,
        alpha_log,
        energy_log,
        log_mismatch,
        kappa,
    })
}
