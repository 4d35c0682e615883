//! Elliptic logarithm (inversion of wp) and the inverse modular map t -> tau.

use super::lattice::Lattice;
use crate::error::{Error, Result};
use crate::{c, C64, PI};

/// Carlson symmetric integral R_F for complex arguments, principal branches.
///
/// Used only as a seed for Newton refinement, so branch-cut artifacts on the
/// negative real axis are tolerable; the refinement plus candidate matching
/// downstream repair them.
pub fn carlson_rf(mut x: C64, mut y: C64, mut z: C64) -> C64 {
    for _ in 0..64 {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) * 0.25;
        y = (y + lam) * 0.25;
        z = (z + lam) * 0.25;
        let mu = (x + y + z) / 3.0;
        let eps = [(x - mu).norm(), (y - mu).norm(), (z - mu).norm()]
            .into_iter()
            .fold(0.0f64, f64::max)
            / mu.norm().max(1e-300);
        if eps < 1e-10 {
            break;
        }
    }
    let mu = (x + y + z) / 3.0;
    let dx = (mu - x) / mu;
    let dy = (mu - y) / mu;
    let dz = (mu - z) / mu;
    let e2 = dx * dy + dy * dz + dz * dx;
    let e3 = dx * dy * dz;
    let series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
    series / mu.sqrt()
}

impl Lattice {
    /// Inverts w = wp(x): returns the preimage x (reduced to the fundamental
    /// cell). wp(-x) = wp(x), so the preimage is two-valued; `branch_seed`
    /// picks the candidate closest to it, otherwise a deterministic canonical
    /// representative (Im >= 0, ties by Re >= 0) is returned.
    ///
    /// At branch points w = e_i the two preimages collide and the half-period
    /// om_i is returned exactly.
    pub fn elliptic_log(&self, w: C64, branch_seed: Option<C64>) -> Result<C64> {
        let scale = self.e.iter().map(|e| e.norm()).fold(1.0f64, f64::max);
        for i in 0..3 {
            if (w - self.e[i]).norm() < 1e-10 * scale {
                return Ok(self.om[i + 1]);
            }
        }
        let seed = carlson_rf(w - self.e[0], w - self.e[1], w - self.e[2]);
        let x = match self.newton_wp(seed, w) {
            Some(x) => x,
            None => self.grid_seed(w)?,
        };
        let (xr, _, _) = self.reduce(x);
        let (xm, _, _) = self.reduce(-x);
        let pick_canonical = |a: C64, b: C64| -> C64 {
            // prefer upper half of the cell, then right half
            let key = |z: C64| (z.im, z.re);
            if key(a) >= key(b) {
                a
            } else {
                b
            }
        };
        let out = match branch_seed {
            Some(s) => {
                let mut best = xr;
                let mut bd = f64::INFINITY;
                for base in [xr, xm] {
                    for m in -2i64..=2 {
                        for n in -2i64..=2 {
                            let cand = base + c(m as f64, 0.0) + self.tau * (n as f64);
                            let d = (cand - s).norm();
                            if d < bd {
                                bd = d;
                                best = cand;
                            }
                        }
                    }
                }
                best
            }
            None => pick_canonical(xr, xm),
        };
        let back = self.wp(out)?.v;
        if (back - w).norm() > 1e-8 * (1.0 + w.norm()) {
            return Err(Error::numeric(format!(
                "elliptic log failed to verify: |wp(x) - w| = {:e}",
                (back - w).norm()
            )));
        }
        Ok(out)
    }

    fn newton_wp(&self, seed: C64, w: C64) -> Option<C64> {
        let mut x = seed;
        for _ in 0..60 {
            if self.dist_to_lattice(x) < 1e-9 {
                return None;
            }
            let p = self.wp(x).ok()?;
            let dp = self.wp_prime(x).ok()?;
            if dp.v.norm() < 1e-12 {
                // at a branch point the residual decides
                return if (p.v - w).norm() < 1e-8 * (1.0 + w.norm()) {
                    Some(x)
                } else {
                    None
                };
            }
            let step = (p.v - w) / dp.v;
            x -= step;
            if step.norm() < 1e-14 * (1.0 + x.norm()) {
                let p2 = self.wp(x).ok()?;
                return if (p2.v - w).norm() < 1e-9 * (1.0 + w.norm()) {
                    Some(x)
                } else {
                    None
                };
            }
        }
        None
    }

    /// Fallback: coarse scan of the fundamental cell, then Newton.
    fn grid_seed(&self, w: C64) -> Result<C64> {
        let n = 36;
        let mut best = c(0.25, 0.0) + self.tau * 0.25;
        let mut bd = f64::INFINITY;
        for i in 0..n {
            for j in 0..n {
                let a = (i as f64 + 0.5) / n as f64 - 0.5;
                let b = (j as f64 + 0.5) / n as f64 - 0.5;
                let z = c(a, 0.0) + self.tau * b;
                if self.dist_to_lattice(z) < 0.05 {
                    continue;
                }
                if let Ok(p) = self.wp(z) {
                    let d = (p.v - w).norm();
                    if d < bd {
                        bd = d;
                        best = z;
                    }
                }
            }
        }
        self.newton_wp(best, w)
            .ok_or_else(|| Error::numeric("elliptic log: Newton failed from grid seed"))
    }
}

/// Complex AGM with the standard branch choice |a - b| <= |a + b| at each step.
pub fn agm(mut a: C64, mut b: C64) -> C64 {
    for _ in 0..64 {
        let am = (a + b) * 0.5;
        let mut gm = (a * b).sqrt();
        if (am - gm).norm() > (am + gm).norm() {
            gm = -gm;
        }
        a = am;
        b = gm;
        if (a - b).norm() < 1e-16 * a.norm().max(1e-300) {
            break;
        }
    }
    (a + b) * 0.5
}

/// Reduces tau into the Gamma(2) fundamental domain
/// { |Re tau| <= 1, |2 tau + 1| >= 1, |2 tau - 1| >= 1 }.
/// The modular invariant t is unchanged by these moves.
pub fn gamma2_reduce(mut tau: C64) -> C64 {
    for _ in 0..256 {
        let shift = 2.0 * (tau.re / 2.0).round_ties_even();
        tau -= c(shift, 0.0);
        if (2.0 * tau + 1.0).norm() < 1.0 - 1e-12 {
            tau = tau / (2.0 * tau + 1.0);
            continue;
        }
        if (2.0 * tau - 1.0).norm() < 1.0 - 1e-12 {
            tau = tau / (1.0 - 2.0 * tau);
            continue;
        }
        break;
    }
    tau
}

/// Inverse of the modular invariant t(tau) = (e3 - e1)/(e2 - e1): finds tau in
/// the Gamma(2) fundamental domain with t(tau) = t.
///
/// Seeded by the arithmetic-geometric mean, polished by Newton with the
/// closed-form derivative dt/dtau = (e2 - e1) t (t - 1) / (i pi).
pub fn tau_from_t(t: C64) -> Result<C64> {
    if t.norm() < 1e-12 || (t - 1.0).norm() < 1e-12 {
        return Err(Error::domain("t must avoid the degenerate values 0 and 1"));
    }
    // t = 1/(1 - lambda)  <=>  lambda = (t - 1)/t
    let lam = (t - 1.0) / t;
    let m1 = agm(c(1.0, 0.0), (1.0 - lam).sqrt());
    let m2 = agm(c(1.0, 0.0), lam.sqrt());
    if m2.norm() < 1e-14 {
        return Err(Error::numeric("agm degenerated; t too close to 1"));
    }
    let mut tau = gamma2_reduce(C64::i() * m1 / m2);
    if tau.im <= 0.0 {
        return Err(Error::numeric("agm seed left the upper half-plane"));
    }
    let mut last_res = f64::INFINITY;
    for _ in 0..48 {
        let lat = Lattice::from_tau(tau)?;
        let tv = lat.t();
        let res = (tv - t).norm();
        if res < 1e-13 * t.norm().max(1.0) {
            return Ok(tau);
        }
        let dt = (lat.e[1] - lat.e[0]) * tv * (tv - 1.0) / c(0.0, PI);
        if dt.norm() < 1e-300 {
            return Err(Error::numeric("dt/dtau vanished during Newton"));
        }
        let mut step = (tv - t) / dt;
        // keep Newton inside the half-plane
        while (tau - step).im < MINIM {
            step *= 0.5;
            if step.norm() < 1e-18 {
                break;
            }
        }
        tau -= step;
        if res > 10.0 * last_res.max(1e-30) && res > 1e-6 {
            return Err(Error::numeric("Newton for tau_from_t diverged"));
        }
        last_res = res;
    }
    let lat = Lattice::from_tau(tau)?;
    if (lat.t() - t).norm() < 1e-10 * t.norm().max(1.0) {
        Ok(tau)
    } else {
        Err(Error::numeric("tau_from_t did not reach the requested accuracy"))
    }
}

const MINIM: f64 = super::lattice::MIN_IM_TAU;
