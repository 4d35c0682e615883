//! The Weierstrass lattice dictionary for a given tau.
//!
//! Conventions used throughout the crate: half-periods om1 = 1/2, om3 = tau/2,
//! om0 = 0, om2 = -om1 - om3, so the period lattice is Z + Z tau. Branch
//! points are e_i = wp(om_i) and satisfy e1 + e2 + e3 = 0.

use super::theta::{theta1_derivs, theta_constants, Theta1};
use crate::error::{Error, Result};
use crate::{c, C64, PI};

/// Minimum Im(tau) for which the theta series are certified here.
pub const MIN_IM_TAU: f64 = 5e-3;

#[derive(Debug, Clone)]
pub struct Lattice {
    pub tau: C64,
    /// Half-periods [om0, om1, om2, om3] = [0, 1/2, -1/2 - tau/2, tau/2].
    pub om: [C64; 4],
    pub eta1: C64,
    pub eta3: C64,
    /// Branch points [e1, e2, e3] with e_i = wp(om_i).
    pub e: [C64; 3],
    pub g2: C64,
    pub g3: C64,
    /// theta_1'(0), cached for sigma.
    th1p0: C64,
}

impl Lattice {
    pub fn from_tau(tau: C64) -> Result<Lattice> {
        if tau.im <= 0.0 {
            return Err(Error::domain("tau must satisfy Im(tau) > 0"));
        }
        if tau.im < MIN_IM_TAU {
            return Err(Error::precision(format!(
                "Im(tau) = {} is below the certified threshold {MIN_IM_TAU}",
                tau.im
            )));
        }
        let om1 = c(0.5, 0.0);
        let om3 = tau * 0.5;
        let om2 = -om1 - om3;
        let t0 = theta1_derivs(c(0.0, 0.0), tau)?;
        let (t2, t3, t4) = theta_constants(tau)?;
        // eta1 = -pi^2/(12 om1) * theta1'''(0)/theta1'(0)
        let eta1 = -(PI * PI / 6.0) * t0.d[3] / t0.d[1];
        // Legendre relation eta1 om3 - eta3 om1 = i pi / 2
        let eta3 = eta1 * tau - c(0.0, PI);
        let s2 = PI * PI / 3.0; // pi^2/(12 om1^2)
        let t2q = t2.powu(4);
        let t3q = t3.powu(4);
        let t4q = t4.powu(4);
        let e1 = s2 * (t3q + t4q);
        let e2 = s2 * (t2q - t4q);
        let e3 = -s2 * (t2q + t3q);
        let g2 = -4.0 * (e1 * e2 + e2 * e3 + e3 * e1);
        let g3 = 4.0 * e1 * e2 * e3;
        Ok(Lattice {
            tau,
            om: [c(0.0, 0.0), om1, om2, om3],
            eta1,
            eta3,
            e: [e1, e2, e3],
            g2,
            g3,
            th1p0: t0.d[1],
        })
    }

    /// Quasi-period increments [eta0, eta1, eta2, eta3] = [0, eta1, -eta1-eta3, eta3],
    /// aligned with `om` so that zeta(z + 2 om_k) = zeta(z) + 2 eta_k.
    pub fn eta(&self) -> [C64; 4] {
        [c(0.0, 0.0), self.eta1, -self.eta1 - self.eta3, self.eta3]
    }

    /// Writes z = z_red + m + n tau with m, n integers and z_red in the cell
    /// |a|, |b| <= 1/2 of z_red = a + b tau. Ties round to even so the result
    /// is reproducible across platforms.
    pub fn reduce(&self, z: C64) -> (C64, i64, i64) {
        let b = z.im / self.tau.im;
        let a = z.re - b * self.tau.re;
        let m = a.round_ties_even();
        let n = b.round_ties_even();
        let zr = z - c(m, 0.0) - self.tau * n;
        (zr, m as i64, n as i64)
    }

    /// All lattice translates of the representatives `reps` that fall within
    /// `margin` of the bounding box of the segment a..b. Used to route
    /// integration paths around periodic singularity families.
    pub fn translates_near(&self, reps: &[C64], a: C64, b: C64, margin: f64) -> Vec<C64> {
        let re_lo = a.re.min(b.re) - margin;
        let re_hi = a.re.max(b.re) + margin;
        let im_lo = a.im.min(b.im) - margin;
        let im_hi = a.im.max(b.im) + margin;
        let mut out = Vec::new();
        for &s in reps {
            let n_lo = ((im_lo - s.im) / self.tau.im).floor() as i64 - 1;
            let n_hi = ((im_hi - s.im) / self.tau.im).ceil() as i64 + 1;
            for n in n_lo..=n_hi {
                let base = s + self.tau * (n as f64);
                let m_lo = (re_lo - base.re).floor() as i64 - 1;
                let m_hi = (re_hi - base.re).ceil() as i64 + 1;
                for m in m_lo..=m_hi {
                    let p = base + c(m as f64, 0.0);
                    if p.re >= re_lo && p.re <= re_hi && p.im >= im_lo && p.im <= im_hi {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    /// Distance from z to the nearest lattice point, in the euclidean metric.
    pub fn dist_to_lattice(&self, z: C64) -> f64 {
        let (zr, _, _) = self.reduce(z);
        let mut best = f64::INFINITY;
        for m in -1..=1 {
            for n in -1..=1 {
                let d = (zr - c(m as f64, 0.0) - self.tau * (n as f64)).norm();
                if d < best {
                    best = d;
                }
            }
        }
        best
    }

    /// theta_1 data at v = pi z, the common kernel of sigma/zeta/wp.
    fn th(&self, z: C64) -> Result<Theta1> {
        theta1_derivs(PI * z, self.tau)
    }

    /// Modular invariant t = (e3 - e1)/(e2 - e1).
    pub fn t(&self) -> C64 {
        (self.e[2] - self.e[0]) / (self.e[1] - self.e[0])
    }

    /// sigma(z) with an error estimate.
    pub fn sigma(&self, z: C64) -> Result<Ev> {
        let (zr, m, n) = self.reduce(z);
        let th = self.th(zr)?;
        let core = (self.eta1 * zr * zr).exp() * th.d[0] / (PI * self.th1p0);
        let rel = th.err[0] / th.d[0].norm().max(1e-300) + 1e-15;
        if m == 0 && n == 0 {
            return Ok(Ev::new(core, core.norm() * rel));
        }
        let (mf, nf) = (m as f64, n as f64);
        let sgn = if (m + n + m * n) % 2 == 0 { 1.0 } else { -1.0 };
        let expo =
            (2.0 * mf * self.eta1 + 2.0 * nf * self.eta3) * (zr + mf * self.om[1] + nf * self.om[3]);
        let val = sgn * expo.exp() * core;
        Ok(Ev::new(val, val.norm() * (rel + 1e-14 * expo.norm())))
    }

    /// zeta(z) with an error estimate. Errors out on lattice points.
    pub fn zeta(&self, z: C64) -> Result<Ev> {
        let (zr, m, n) = self.reduce(z);
        self.pole_guard(zr)?;
        let th = self.th(zr)?;
        let u1 = th.d[1] / th.d[0];
        let val =
            2.0 * self.eta1 * zr + PI * u1 + 2.0 * (m as f64) * self.eta1 + 2.0 * (n as f64) * self.eta3;
        let rel0 = th.err[0] / th.d[0].norm().max(1e-300);
        let rel1 = th.err[1] / th.d[1].norm().max(1e-300);
        let err = PI * u1.norm() * (rel0 + rel1) + 1e-15 * val.norm() + 1e-16;
        Ok(Ev::new(val, err))
    }

    /// wp(z) with an error estimate. Errors out on lattice points.
    pub fn wp(&self, z: C64) -> Result<Ev> {
        let (zr, _, _) = self.reduce(z);
        self.pole_guard(zr)?;
        let th = self.th(zr)?;
        let u1 = th.d[1] / th.d[0];
        let u2 = th.d[2] / th.d[0];
        let val = -2.0 * self.eta1 + PI * PI * (u1 * u1 - u2);
        let rel0 = th.err[0] / th.d[0].norm().max(1e-300);
        let rel1 = th.err[1] / th.d[1].norm().max(1e-300);
        let rel2 = th.err[2] / th.d[2].norm().max(1e-300);
        let err = PI * PI
            * (2.0 * u1.norm() * u1.norm() * (rel0 + rel1) + u2.norm() * (rel0 + rel2))
            + 1e-14 * val.norm()
            + 1e-15;
        Ok(Ev::new(val, err))
    }

    /// wp'(z) with an error estimate. Errors out on lattice points.
    pub fn wp_prime(&self, z: C64) -> Result<Ev> {
        let (zr, _, _) = self.reduce(z);
        self.pole_guard(zr)?;
        let th = self.th(zr)?;
        let u1 = th.d[1] / th.d[0];
        let u2 = th.d[2] / th.d[0];
        let u3 = th.d[3] / th.d[0];
        let val = PI.powi(3) * (3.0 * u1 * u2 - 2.0 * u1 * u1 * u1 - u3);
        let rel: f64 = (0..4)
            .map(|k| th.err[k] / th.d[k].norm().max(1e-300))
            .sum();
        let mag = PI.powi(3)
            * (3.0 * (u1 * u2).norm() + 2.0 * u1.norm().powi(3) + u3.norm());
        Ok(Ev::new(val, mag * rel + 1e-14 * val.norm() + 1e-15))
    }

    fn pole_guard(&self, zr: C64) -> Result<()> {
        if self.dist_to_lattice(zr) < 1e-11 {
            return Err(Error::domain(
                "argument is (numerically) a lattice point; wp/zeta have a pole there",
            ));
        }
        Ok(())
    }
}

/// A complex value together with a conservative absolute error bound.
#[derive(Debug, Clone, Copy)]
pub struct Ev {
    pub v: C64,
    pub e: f64,
}

impl Ev {
    pub fn new(v: C64, e: f64) -> Self {
        Ev { v, e }
    }
}
