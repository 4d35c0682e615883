//! Residual checks that a family b₁(τ) actually solves the sixth Painlevé
//! equation, in three independent forms: the elliptic form in δ₁(τ), the
//! classical rational form in λ(t), and the Hamiltonian system in (δ, γ).
//! All derivatives are high-order finite differences in τ; no closed form
//! being tested ever enters its own verification.

use super::apparency::kappas_of_l;
use super::families::Family;
use crate::elliptic::Lattice;
use crate::error::{Error, Result};
use crate::{i_pi, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualMode {
    /// δ₁'' = −(1/8π²) Σ (l_i+½)² ℘'(δ₁+ω_i)
    Elliptic,
    /// the second-order rational equation for λ(t), resampled through t(τ)
    Rational,
    /// 2πi dδ/dτ = γ, 2πi dγ/dτ = ½ Σ (l_i+½)² ℘'(δ+ω_i)
    Hamiltonian,
}

#[derive(Debug, Clone)]
pub struct P6Residual {
    pub residual: f64,
    /// 2πi dδ/dτ at the center point (Hamiltonian mode)
    pub gamma: Option<C64>,
    /// ½(γ² − Σ (l_i+½)² ℘(δ+ω_i)) at the center point (Hamiltonian mode)
    pub cal_h: Option<C64>,
}

/// Seven-point first derivative, sixth order: f has entries f(x+kh), k=-3..3.
fn d1_stencil(f: &[C64; 7], h: f64) -> C64 {
    (-f[0] + 9.0 * f[1] - 45.0 * f[2] + 45.0 * f[4] - 9.0 * f[5] + f[6]) / (60.0 * h)
}

/// Seven-point second derivative, sixth order.
fn d2_stencil(f: &[C64; 7], h: f64) -> C64 {
    (2.0 * f[0] - 27.0 * f[1] + 270.0 * f[2] - 490.0 * f[3] + 270.0 * f[4] - 27.0 * f[5]
        + 2.0 * f[6])
        / (180.0 * h * h)
}

fn stencil_lattices(tau: C64, h: f64) -> Result<[Lattice; 7]> {
    let mk = |k: i32| Lattice::from_tau(tau + C64::new(h * k as f64, 0.0));
    Ok([mk(-3)?, mk(-2)?, mk(-1)?, mk(0)?, mk(1)?, mk(2)?, mk(3)?])
}

/// δ₁ along the stencil, all on the branch of the center value.
fn delta_stencil<F>(b1_of: &F, lats: &[Lattice; 7]) -> Result<[C64; 7]>
where
    F: Fn(&Lattice) -> Result<C64>,
{
    let b1c = b1_of(&lats[3])?;
    let dc = lats[3].elliptic_log(b1c, None)?;
    let mut out = [dc; 7];
    for (k, lat) in lats.iter().enumerate() {
        if k == 3 {
            continue;
        }
        let b1 = b1_of(lat)?;
        let d = lat.elliptic_log(b1, Some(dc))?;
        if (d - dc).norm() > 0.05 * (1.0 + dc.norm()) {
            return Err(Error::numeric(
                "δ₁ jumped branches across the stencil; the trajectory crossed a cell boundary",
            ));
        }
        out[k] = d;
    }
    Ok(out)
}

/// Σ (l_i+½)² ℘'(δ+ω_i) and Σ (l_i+½)² ℘(δ+ω_i), direct half-period indexing.
fn weighted_sums(l: [u32; 4], lat: &Lattice, delta: C64) -> Result<(C64, C64)> {
    let mut sp = C64::new(0.0, 0.0);
    let mut s = C64::new(0.0, 0.0);
    for i in 0..4 {
        let w = (l[i] as f64 + 0.5) * (l[i] as f64 + 0.5);
        sp += w * lat.wp_prime(delta + lat.om[i])?.v;
        s += w * lat.wp(delta + lat.om[i])?.v;
    }
    Ok((sp, s))
}

/// Residual of an arbitrary curve τ ↦ b₁ against the Painlevé VI forms for
/// the weight pattern `l`. The closed families wrap this; tests also feed it
/// deliberately wrong curves as negative controls.
pub fn p6_residual_curve<F>(
    b1_of: F,
    l: [u32; 4],
    tau: C64,
    mode: ResidualMode,
    h: f64,
) -> Result<P6Residual>
where
    F: Fn(&Lattice) -> Result<C64>,
{
    if !(h > 0.0) || h > 0.05 {
        return Err(Error::usage("stencil width h must lie in (0, 0.05]"));
    }
    let lats = stencil_lattices(tau, h)?;
    match mode {
        ResidualMode::Elliptic => {
            let d = delta_stencil(&b1_of, &lats)?;
            let d2 = d2_stencil(&d, h);
            let (sp, _) = weighted_sums(l, &lats[3], d[3])?;
            let rhs = -sp / (8.0 * std::f64::consts::PI * std::f64::consts::PI);
            let scale = d2.norm().max(rhs.norm()).max(1.0);
            Ok(P6Residual {
                residual: (d2 - rhs).norm() / scale,
                gamma: None,
                cal_h: None,
            })
        }
        ResidualMode::Hamiltonian => {
            let d = delta_stencil(&b1_of, &lats)?;
            let gamma = 2.0 * i_pi() * d1_stencil(&d, h);
            let lhs = 2.0 * i_pi() * 2.0 * i_pi() * d2_stencil(&d, h);
            let (sp, s) = weighted_sums(l, &lats[3], d[3])?;
            let rhs = sp / 2.0;
            let scale = lhs.norm().max(rhs.norm()).max(1.0);
            let cal_h = (gamma * gamma - s) / 2.0;
            Ok(P6Residual {
                residual: (lhs - rhs).norm() / scale,
                gamma: Some(gamma),
                cal_h: Some(cal_h),
            })
        }
        ResidualMode::Rational => {
            let mut lam = [C64::new(0.0, 0.0); 7];
            for (k, lat) in lats.iter().enumerate() {
                let b1 = b1_of(lat)?;
                lam[k] = (b1 - lat.e[0]) / (lat.e[1] - lat.e[0]);
            }
            let lat = &lats[3];
            let t = lat.t();
            let de = lat.e[1] - lat.e[0];
            let t_tau = de * t * (t - 1.0) / i_pi();
            let dde = -(2.0 * lat.eta1 + lat.e[2]) * de / i_pi();
            let t_tautau = (dde * t * (t - 1.0) + de * t_tau * (2.0 * t - 1.0)) / i_pi();
            let l_tau = d1_stencil(&lam, h);
            let l_tautau = d2_stencil(&lam, h);
            let l_t = l_tau / t_tau;
            let l_tt = (l_tautau * t_tau - l_tau * t_tautau) / (t_tau * t_tau * t_tau);

            let w = lam[3];
            let [k0, k1, kt, kinf] = kappas_of_l(l);
            let half_sq = |k: C64| k * k / 2.0;
            let curly = half_sq(kinf) - half_sq(k0) * t / (w * w)
                + half_sq(k1) * (t - 1.0) / ((w - 1.0) * (w - 1.0))
                + (0.5 - half_sq(kt)) * t * (t - 1.0) / ((w - t) * (w - t));
            let rhs = 0.5 * (w.inv() + (w - 1.0).inv() + (w - t).inv()) * l_t * l_t
                - (t.inv() + (t - 1.0).inv() + (w - t).inv()) * l_t
                + w * (w - 1.0) * (w - t) / (t * t * (t - 1.0) * (t - 1.0)) * curly;
            let scale = l_tt.norm().max(rhs.norm()).max(1.0);
            Ok(P6Residual {
                residual: (l_tt - rhs).norm() / scale,
                gamma: None,
                cal_h: None,
            })
        }
    }
}

/// Residual of a closed family at one τ.
pub fn p6_residual(family: &Family, tau: C64, mode: ResidualMode, h: f64) -> Result<P6Residual> {
    p6_residual_curve(|lat| family.b1(lat), family.weights(), tau, mode, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    #[test]
    fn hitchin_solves_all_three_forms() {
        let fam = Family::Hitchin {
            c1: c(0.31, 0.12),
            c3: c(0.47, -0.23),
        };
        let tau = c(0.05, 1.08);
        let e = p6_residual(&fam, tau, ResidualMode::Elliptic, 2.5e-3).unwrap();
        assert!(e.residual < 1e-6, "elliptic residual {}", e.residual);
        let r = p6_residual(&fam, tau, ResidualMode::Rational, 2.5e-3).unwrap();
        assert!(r.residual < 1e-5, "rational residual {}", r.residual);
        let ham = p6_residual(&fam, tau, ResidualMode::Hamiltonian, 2.5e-3).unwrap();
        assert!(ham.residual < 1e-6, "hamiltonian residual {}", ham.residual);
        assert!(ham.gamma.is_some() && ham.cal_h.is_some());
    }

    #[test]
    fn non_solution_curve_is_rejected() {
        // a smooth curve through the right region that solves nothing
        let junk = |lat: &Lattice| -> crate::error::Result<C64> {
            Ok(lat.e[0] + 0.4 * (lat.e[1] - lat.e[0]) * (0.3 * lat.tau).exp())
        };
        for mode in [ResidualMode::Elliptic, ResidualMode::Rational, ResidualMode::Hamiltonian] {
            let r = p6_residual_curve(junk, [0; 4], c(0.05, 1.08), mode, 2.5e-3).unwrap();
            assert!(r.residual > 1e-3, "{mode:?} residual only {}", r.residual);
        }
    }
}
