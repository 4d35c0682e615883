//! Jacobi theta series with certified truncation tails.
//!
//! Everything is parametrized by tau directly (never by a precomputed nome),
//! so fractional powers of the nome are exact exponentials and stay on one
//! branch as tau moves.

use crate::error::{Error, Result};
use crate::{C64, PI};

/// Values of theta_1 and its first three v-derivatives at one point,
/// with per-order absolute error bounds.
#[derive(Debug, Clone, Copy)]
pub struct Theta1 {
    /// d^k/dv^k theta_1(v | tau) for k = 0..=3.
    pub d: [C64; 4],
    /// Absolute error bound for each order (series tail + round-off).
    pub err: [f64; 4],
}

const N_MAX: usize = 96;
const EXP_GUARD: f64 = 700.0;

/// theta_1 and derivatives via the sum over exp(i pi tau (n+1/2)^2 +- i(2n+1)v).
///
/// Intended for arguments with |Im v| <= pi Im(tau) / 2 + O(1) (i.e. lattice
/// arguments already reduced to the fundamental cell); in that regime the
/// series terms decay like exp(-pi Im(tau) (n^2 - 1/4)).
pub fn theta1_derivs(v: C64, tau: C64) -> Result<Theta1> {
    if tau.im <= 0.0 {
        return Err(Error::domain("tau must lie in the upper half-plane"));
    }
    let i = C64::i();
    let pit = i * PI * tau;
    let mut acc = [C64::new(0.0, 0.0); 4];
    let mut maxmag = [0f64; 4];
    let mut tail = [0f64; 4];
    let mut used = 0usize;
    let mut converged = false;

    for n in 0..N_MAX {
        let np = n as f64 + 0.5;
        let k = 2.0 * n as f64 + 1.0;
        let a = pit * (np * np) + i * k * v;
        let b = pit * (np * np) - i * k * v;
        if a.re > EXP_GUARD || b.re > EXP_GUARD {
            return Err(Error::precision(
                "theta argument too far from the fundamental cell",
            ));
        }
        let ea = a.exp();
        let eb = b.exp();
        let sgn = if n % 2 == 0 { 1.0 } else { -1.0 };
        let ik = i * k;
        let mik = -ik;
        // d^j/dv^j picks up (i k)^j on the +v exponential and (-i k)^j on the other
        let mut fa = C64::new(1.0, 0.0);
        let mut fb = C64::new(1.0, 0.0);
        for j in 0..4 {
            let term = -i * sgn * (fa * ea - fb * eb);
            acc[j] += term;
            let mag = (ea.norm() + eb.norm()) * k.powi(j as i32);
            if mag > maxmag[j] {
                maxmag[j] = mag;
            }
            fa *= ik;
            fb *= mik;
        }
        used = n + 1;
        let scale = acc[1].norm().max(1e-300);
        let this = (ea.norm() + eb.norm()) * k * k * k;
        if n >= 2 && this < 1e-19 * scale {
            // next term is smaller by at least exp(-2 pi Im tau); a factor 2
            // on the current term bounds the whole geometric tail
            for (j, t) in tail.iter_mut().enumerate() {
                *t = 2.0 * (ea.norm() + eb.norm()) * k.powi(j as i32);
            }
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::precision(
            "theta series did not converge; Im(tau) too small",
        ));
    }
    let mut err = [0f64; 4];
    for j in 0..4 {
        err[j] = f64::EPSILON * (used as f64) * 4.0 * maxmag[j] + tail[j];
    }
    Ok(Theta1 { d: acc, err })
}

/// Null values (theta_2, theta_3, theta_4)(0 | tau).
pub fn theta_constants(tau: C64) -> Result<(C64, C64, C64)> {
    if tau.im <= 0.0 {
        return Err(Error::domain("tau must lie in the upper half-plane"));
    }
    let pit = C64::i() * PI * tau;
    let mut t2 = C64::new(0.0, 0.0);
    let mut t3 = C64::new(1.0, 0.0);
    let mut t4 = C64::new(1.0, 0.0);
    let mut done2 = false;
    let mut done34 = false;
    for n in 0..N_MAX {
        if !done2 {
            let np = n as f64 + 0.5;
            let term = 2.0 * (pit * (np * np)).exp();
            t2 += term;
            if n >= 2 && term.norm() < 1e-19 * t2.norm().max(1.0) {
                done2 = true;
            }
        }
        if !done34 && n >= 1 {
            let nn = (n * n) as f64;
            let term = 2.0 * (pit * nn).exp();
            t3 += term;
            t4 += if n % 2 == 0 { term } else { -term };
            if term.norm() < 1e-19 {
                done34 = true;
            }
        }
        if done2 && done34 {
            return Ok((t2, t3, t4));
        }
    }
    Err(Error::precision(
        "theta constants did not converge; Im(tau) too small",
    ))
}
