//! Floquet-type building blocks Phi_i(x, alpha) and their x-derivatives.
//!
//! Phi_i(x, alpha) = sigma(x + om_i - alpha) / sigma(x + om_i) * exp(zeta(alpha) x).
//!
//! Under x -> x + 2 om_k every Phi_i picks up the same factor
//! exp(-2 eta_k alpha + 2 om_k zeta(alpha)), independent of i; that factor is
//! what the closed-form Floquet multipliers are made of.

use super::lattice::{Ev, Lattice};
use crate::error::{Error, Result};
use crate::{C64, Result as CResult};

impl Lattice {
    /// Phi_i(x, alpha) for i in 0..=3 (om_0 = 0).
    pub fn phi(&self, i: usize, x: C64, alpha: C64) -> CResult<Ev> {
        let (num, den, zx) = self.phi_parts(i, x, alpha)?;
        let val = num.v / den.v * zx;
        let rel = num.e / num.v.norm().max(1e-300) + den.e / den.v.norm().max(1e-300);
        Ok(Ev::new(val, val.norm() * (rel + 1e-14)))
    }

    /// d/dx Phi_i(x, alpha).
    pub fn phi_dx(&self, i: usize, x: C64, alpha: C64) -> CResult<Ev> {
        let p = self.phi(i, x, alpha)?;
        let u = self.phi_logdx(i, x, alpha)?;
        let val = p.v * u.v;
        Ok(Ev::new(val, val.norm() * 1e-12 + p.e * u.v.norm() + u.e * p.v.norm()))
    }

    /// d^2/dx^2 Phi_i(x, alpha).
    pub fn phi_d2x(&self, i: usize, x: C64, alpha: C64) -> CResult<Ev> {
        let p = self.phi(i, x, alpha)?;
        let u = self.phi_logdx(i, x, alpha)?;
        let w = x + self.om[i];
        let du = -self.wp(w - alpha)?.v + self.wp(w)?.v;
        let val = p.v * (u.v * u.v + du);
        Ok(Ev::new(val, val.norm() * 1e-11 + p.e * (u.v * u.v + du).norm()))
    }

    /// Logarithmic derivative (d/dx) log Phi_i = zeta(x+om_i-alpha) - zeta(x+om_i) + zeta(alpha).
    pub fn phi_logdx(&self, i: usize, x: C64, alpha: C64) -> CResult<Ev> {
        let w = x + self.om[i];
        let a = self.zeta(w - alpha)?;
        let b = self.zeta(w)?;
        let za = self.zeta(alpha)?;
        Ok(Ev::new(a.v - b.v + za.v, a.e + b.e + za.e))
    }

    /// The common Floquet factor of Phi under x -> x + 2 om_k:
    /// exp(-2 eta_k alpha + 2 om_k zeta(alpha)).
    pub fn floquet_factor(&self, k: usize, alpha: C64) -> CResult<C64> {
        let eta = self.eta();
        let za = self.zeta(alpha)?.v;
        Ok((-2.0 * eta[k] * alpha + 2.0 * self.om[k] * za).exp())
    }

    fn phi_parts(&self, i: usize, x: C64, alpha: C64) -> Result<(Ev, Ev, C64)> {
        if i > 3 {
            return Err(Error::usage("half-period index must be 0..=3"));
        }
        let w = x + self.om[i];
        if self.dist_to_lattice(w) < 1e-11 {
            return Err(Error::domain("x + om_i hits a lattice point (pole of Phi_i)"));
        }
        let num = self.sigma(w - alpha)?;
        let den = self.sigma(w)?;
        let zx = (self.zeta(alpha)?.v * x).exp();
        Ok((num, den, zx))
    }
}
