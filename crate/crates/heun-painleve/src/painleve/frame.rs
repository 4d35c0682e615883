//! The change of frame between the accessory data (b₁, μ₁) of the deformed
//! operator and the rational Painlevé VI variables (t, λ, μ, H), together
//! with the elliptic position δ₁ with ℘(δ₁) = b₁.

use super::apparency::{apparency_p, hamiltonian_rational, kappas_of_l};
use crate::elliptic::Lattice;
use crate::error::Result;
use crate::C64;

#[derive(Debug, Clone)]
pub struct P6Frame {
    pub tau: C64,
    pub t: C64,
    pub lambda: C64,
    /// elliptic position: ℘(δ₁) = b₁, branch picked by the seed
    pub delta1: C64,
    /// μ = (e₂−e₁)μ₁, present when the source fixes μ₁
    pub mu: Option<C64>,
    /// rational-frame Hamiltonian, present when μ is
    pub h_vi: Option<C64>,
    /// 2πi dδ/dτ, filled by the Hamiltonian-mode residual
    pub gamma: Option<C64>,
    /// ½(γ² − Σ(l_i+½)²℘(δ+ω_i)), filled alongside gamma
    pub cal_h: Option<C64>,
}

/// Maps one accessory point into the rational frame:
/// λ = (b₁−e₁)/(e₂−e₁), μ = (e₂−e₁)μ₁, t = (e₃−e₁)/(e₂−e₁), and δ₁ is an
/// elliptic log of b₁ (seed it from the previous grid point to stay on one
/// branch along a trajectory).
pub fn frame_map(
    l: [u32; 4],
    b1: C64,
    mu1: Option<C64>,
    lat: &Lattice,
    delta1_seed: Option<C64>,
) -> Result<P6Frame> {
    let de = lat.e[1] - lat.e[0];
    let lambda = (b1 - lat.e[0]) / de;
    let t = lat.t();
    let mu = mu1.map(|m| de * m);
    let h_vi = mu.map(|m| hamiltonian_rational(kappas_of_l(l), t, lambda, m));
    let delta1 = lat.elliptic_log(b1, delta1_seed)?;
    Ok(P6Frame {
        tau: lat.tau,
        t,
        lambda,
        delta1,
        mu,
        h_vi,
        gamma: None,
        cal_h: None,
    })
}

/// The Hamiltonian straight from the accessory frame:
/// H = ((p + K e₃)/(4(e₂−e₁)) + λ(1−λ)μ) / (t(1−t)),
/// K = (l₁+l₂+l₃+l₀+1)(l₁+l₂+l₃−l₀), p the apparency constant. Agrees with
/// `hamiltonian_rational` on the image of the frame map.
pub fn frame_hamiltonian(l: [u32; 4], b1: C64, mu1: C64, lat: &Lattice) -> Result<C64> {
    let p = apparency_p(l, b1, mu1, lat)?;
    let s123 = (l[1] + l[2] + l[3]) as f64;
    let s0 = l[0] as f64;
    let kbig = (s123 + s0 + 1.0) * (s123 - s0);
    let de = lat.e[1] - lat.e[0];
    let lambda = (b1 - lat.e[0]) / de;
    let mu = de * mu1;
    let t = lat.t();
    Ok(((p + kbig * lat.e[2]) / (4.0 * de) + lambda * (1.0 - lambda) * mu) / (t * (1.0 - t)))
}
