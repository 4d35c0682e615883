//! Two-parameter solution families b₁(τ; K₁, K₃) of the sixth Painlevé
//! equation in elliptic disguise: the weightless family (Hitchin's solution),
//! its l₀ = 1 counterpart, and the degenerate branches where the spectral
//! constant Q of the deformed operator vanishes identically.

use super::hk_maps::hk_inversion_l1000;
use crate::elliptic::Lattice;
use crate::error::{Error, Result};
use crate::C64;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// l = (0,0,0,0), generic (C₁, C₃)
    Hitchin { c1: C64, c3: C64 },
    /// l = (1,0,0,0), generic (C₁, C₃)
    ExplicitL1 { c1: C64, c3: C64 },
    /// l = (0,0,0,0) with μ₁ ≡ 0
    DegenerateMu0 { d1: C64, d3: C64 },
    /// l = (0,0,0,0) with μ₁ = 1/(2(b₁−e_i)), i in 1..=3
    DegenerateMui { i: usize, d1: C64, d3: C64 },
    /// l = (1,0,0,0) with the cubic normalizer vanishing
    DegenerateL1Cubic { d1: C64, d3: C64 },
    /// l = (1,0,0,0) with the i-th linear factor of Q vanishing, i in 1..=3
    DegenerateL1Ei { i: usize, d1: C64, d3: C64 },
}

/// ω = K₁ω₃ − K₃ω₁ and η = K₁η₃ − K₃η₁, the common combination every family
/// formula is built from.
fn omega_eta(k1: C64, k3: C64, lat: &Lattice) -> Result<(C64, C64)> {
    let om = k1 * lat.om[3] - k3 * lat.om[1];
    let eta = k1 * lat.eta3 - k3 * lat.eta1;
    if om.norm() < 1e-12 {
        return Err(Error::domain(
            "K₁ω₃ − K₃ω₁ = 0: the family parameters are degenerate at this τ",
        ));
    }
    Ok((om, eta))
}

impl Family {
    pub fn weights(&self) -> [u32; 4] {
        match self {
            Family::Hitchin { .. } | Family::DegenerateMu0 { .. } | Family::DegenerateMui { .. } => {
                [0, 0, 0, 0]
            }
            _ => [1, 0, 0, 0],
        }
    }

    /// The accessory parameter b₁ at this τ.
    pub fn b1(&self, lat: &Lattice) -> Result<C64> {
        match *self {
            Family::Hitchin { c1, c3 } => {
                let (om, eta) = omega_eta(c1, c3, lat)?;
                let kappa = lat.zeta(om)?.v - eta;
                if kappa.norm() < 1e-12 {
                    return Err(Error::domain("ζ(ω) − η = 0: b₁ pole of the weightless family"));
                }
                Ok(lat.wp(om)?.v + lat.wp_prime(om)?.v / (2.0 * kappa))
            }
            Family::ExplicitL1 { c1, c3 } => {
                let (om, eta) = omega_eta(c1, c3, lat)?;
                let z = lat.zeta(om)?.v - eta;
                let p = lat.wp(om)?.v;
                let pp = lat.wp_prime(om)?.v;
                let bot = 2.0 * (z * z * z - 3.0 * p * z - pp);
                if bot.norm() < 1e-12 * (1.0 + z.norm()).powi(3) {
                    return Err(Error::domain("b₁ pole of the l₀ = 1 family at this τ"));
                }
                Ok((2.0 * p * z * z * z + 3.0 * pp * z * z + (6.0 * p * p - lat.g2) * z + p * pp)
                    / bot)
            }
            Family::DegenerateMu0 { d1, d3 } => {
                let (om, eta) = omega_eta(d1, d3, lat)?;
                Ok(-eta / om)
            }
            Family::DegenerateMui { i, d1, d3 } => {
                let ei = e_of(i, lat)?;
                let (om, eta) = omega_eta(d1, d3, lat)?;
                let bot = ei * om + eta;
                if bot.norm() < 1e-12 {
                    return Err(Error::domain("e_iω + η = 0: family pole at this τ"));
                }
                Ok(((lat.g2 / 4.0 - 2.0 * ei * ei) * om + ei * eta) / bot)
            }
            Family::DegenerateL1Cubic { d1, d3 } => {
                let (om, eta) = omega_eta(d1, d3, lat)?;
                let bot = om * (lat.g2 * om * om - 12.0 * eta * eta);
                if bot.norm() < 1e-12 * (1.0 + om.norm()).powi(3) {
                    return Err(Error::domain("family pole at this τ"));
                }
                Ok((4.0 * eta * eta * eta + lat.g2 * om * om * eta - 2.0 * lat.g3 * om * om * om)
                    / bot)
            }
            Family::DegenerateL1Ei { i, d1, d3 } => {
                let ei = e_of(i, lat)?;
                let (om, eta) = omega_eta(d1, d3, lat)?;
                let s = 6.0 * ei * ei - lat.g2;
                let bot = s * om - 6.0 * ei * eta;
                if bot.norm() < 1e-12 * (1.0 + s.norm()) {
                    return Err(Error::domain("family pole at this τ"));
                }
                Ok((-lat.g2 * ei * om / 2.0 + s * eta) / bot)
            }
        }
    }

    /// μ₁ at this τ, when the family fixes one. The cubic-normalizer branch
    /// determines μ₁ only as an unresolved root of its cubic, so it returns
    /// None here.
    pub fn mu1(&self, lat: &Lattice) -> Result<Option<C64>> {
        match *self {
            Family::Hitchin { c1, c3 } => {
                let (om, eta) = omega_eta(c1, c3, lat)?;
                let kappa = lat.zeta(om)?.v - eta;
                let pp = lat.wp_prime(om)?.v;
                if pp.norm() < 1e-12 {
                    return Err(Error::domain("℘'(ω) = 0: μ₁ pole of the weightless family"));
                }
                Ok(Some(kappa / pp))
            }
            Family::ExplicitL1 { c1, c3 } => {
                let (om, eta) = omega_eta(c1, c3, lat)?;
                let kappa = lat.zeta(om)?.v - eta;
                let (_, mu1) = hk_inversion_l1000(-om, kappa, lat)?;
                Ok(Some(mu1))
            }
            Family::DegenerateMu0 { .. } => Ok(Some(C64::new(0.0, 0.0))),
            Family::DegenerateMui { i, .. } => {
                let ei = e_of(i, lat)?;
                let b1 = self.b1(lat)?;
                Ok(Some((2.0 * (b1 - ei)).inv()))
            }
            Family::DegenerateL1Cubic { .. } => Ok(None),
            Family::DegenerateL1Ei { i, .. } => {
                let ei = e_of(i, lat)?;
                let b1 = self.b1(lat)?;
                let others = lat.e[i % 3] * lat.e[(i + 1) % 3];
                let bot = 2.0 * (b1 * b1 + ei * b1 + others);
                if bot.norm() < 1e-12 {
                    return Err(Error::domain("μ₁ pole of the family at this τ"));
                }
                Ok(Some((2.0 * b1 + ei) / bot))
            }
        }
    }

    /// The Hermite-Krichever pair (α, κ) carried by the generic families:
    /// α = −ω and κ = ζ(ω) − η. Degenerate branches have κ = 0 and no pair.
    pub fn hk_pair(&self, lat: &Lattice) -> Result<Option<(C64, C64)>> {
        match *self {
            Family::Hitchin { c1, c3 } | Family::ExplicitL1 { c1, c3 } => {
                let (om, eta) = omega_eta(c1, c3, lat)?;
                Ok(Some((-om, lat.zeta(om)?.v - eta)))
            }
            _ => Ok(None),
        }
    }

    /// The Floquet exponents (C₁, C₃) when the family prescribes them:
    /// the closed-form multipliers along 2ω_k are exp(πi C_k).
    pub fn exponents(&self) -> Option<(C64, C64)> {
        match *self {
            Family::Hitchin { c1, c3 } | Family::ExplicitL1 { c1, c3 } => Some((c1, c3)),
            _ => None,
        }
    }
}

fn e_of(i: usize, lat: &Lattice) -> Result<C64> {
    if !(1..=3).contains(&i) {
        return Err(Error::usage("branch index i must be 1, 2, or 3"));
    }
    Ok(lat.e[i - 1])
}

/// The b₁ value of a family at one τ.
pub fn family_b1(family: &Family, lat: &Lattice) -> Result<C64> {
    family.b1(lat)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Hitchin { .. } => write!(f, "hitchin_l0000"),
            Family::ExplicitL1 { .. } => write!(f, "explicit_l1000"),
            Family::DegenerateMu0 { .. } => write!(f, "degenerate_mu0"),
            Family::DegenerateMui { i, .. } => write!(f, "degenerate_mu{i}"),
            Family::DegenerateL1Cubic { .. } => write!(f, "degenerate_l1000_cubic"),
            Family::DegenerateL1Ei { i, .. } => write!(f, "degenerate_l1000_e{i}"),
        }
    }
}

/// Family selector by name; the parameter pair is attached afterwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Hitchin,
    ExplicitL1,
    DegenerateMu0,
    DegenerateMui(usize),
    DegenerateL1Cubic,
    DegenerateL1Ei(usize),
}

impl FamilyKind {
    pub fn with_params(self, k1: C64, k3: C64) -> Family {
        match self {
            FamilyKind::Hitchin => Family::Hitchin { c1: k1, c3: k3 },
            FamilyKind::ExplicitL1 => Family::ExplicitL1 { c1: k1, c3: k3 },
            FamilyKind::DegenerateMu0 => Family::DegenerateMu0 { d1: k1, d3: k3 },
            FamilyKind::DegenerateMui(i) => Family::DegenerateMui { i, d1: k1, d3: k3 },
            FamilyKind::DegenerateL1Cubic => Family::DegenerateL1Cubic { d1: k1, d3: k3 },
            FamilyKind::DegenerateL1Ei(i) => Family::DegenerateL1Ei { i, d1: k1, d3: k3 },
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hitchin_l0000" | "hitchin" => Ok(FamilyKind::Hitchin),
            "explicit_l1000" | "explicit" => Ok(FamilyKind::ExplicitL1),
            "degenerate_mu0" => Ok(FamilyKind::DegenerateMu0),
            "degenerate_mu1" => Ok(FamilyKind::DegenerateMui(1)),
            "degenerate_mu2" => Ok(FamilyKind::DegenerateMui(2)),
            "degenerate_mu3" => Ok(FamilyKind::DegenerateMui(3)),
            "degenerate_l1000_cubic" => Ok(FamilyKind::DegenerateL1Cubic),
            "degenerate_l1000_e1" => Ok(FamilyKind::DegenerateL1Ei(1)),
            "degenerate_l1000_e2" => Ok(FamilyKind::DegenerateL1Ei(2)),
            "degenerate_l1000_e3" => Ok(FamilyKind::DegenerateL1Ei(3)),
            other => Err(Error::usage(format!("unknown family '{other}'"))),
        }
    }
}
