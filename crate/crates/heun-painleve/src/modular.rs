//! Closed-form tau-derivatives of lattice quantities, with finite-difference
//! oracles to check them against.

use crate::elliptic::Lattice;
use crate::error::Result;
use crate::{i_pi, C64};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModularTag {
    T,
    /// e_i for i in 1..=3
    E(usize),
    Eta1,
    /// (e2 - e1)^a, principal branch at the evaluation point
    PowE2MinusE1(C64),
}

#[derive(Debug, Clone, Copy)]
pub struct ModularQuantity {
    pub tag: ModularTag,
    pub value: C64,
    pub dtau: C64,
}

fn tag_value(tag: ModularTag, lat: &Lattice) -> C64 {
    match tag {
        ModularTag::T => lat.t(),
        ModularTag::E(i) => lat.e[i - 1],
        ModularTag::Eta1 => lat.eta1,
        ModularTag::PowE2MinusE1(a) => (lat.e[1] - lat.e[0]).powc(a),
    }
}

pub fn modular_derivative(tag: ModularTag, lat: &Lattice) -> ModularQuantity {
    let ipi = i_pi();
    let value = tag_value(tag, lat);
    let dtau = match tag {
        ModularTag::T => {
            let t = lat.t();
            (lat.e[1] - lat.e[0]) * t * (t - 1.0) / ipi
        }
        ModularTag::E(i) => {
            let e = lat.e[i - 1];
            (-2.0 * lat.eta1 * e + e * e - lat.g2 / 6.0) / ipi
        }
        ModularTag::Eta1 => (-lat.eta1 * lat.eta1 + lat.g2 / 48.0) / ipi,
        ModularTag::PowE2MinusE1(a) => {
            -a * (2.0 * lat.eta1 + lat.e[2]) * (lat.e[1] - lat.e[0]).powc(a) / ipi
        }
    };
    ModularQuantity { tag, value, dtau }
}

#[derive(Debug, Clone, Copy)]
pub struct FdEstimate {
    pub value: C64,
    /// difference between the two Richardson inputs; a conservative error gauge
    pub err: f64,
    /// observed convergence order from three step sizes
    pub order: f64,
}

/// log of w on the branch nearest to `ref_log` (for continuing w^a across a
/// stencil without principal-branch jumps).
fn log_near(w: C64, ref_log: C64) -> C64 {
    let mut l = w.ln();
    let two_pi = std::f64::consts::TAU;
    while (l - ref_log).im > std::f64::consts::PI {
        l -= C64::new(0.0, two_pi);
    }
    while (l - ref_log).im < -std::f64::consts::PI {
        l += C64::new(0.0, two_pi);
    }
    l
}

/// 4th-order central difference with one Richardson level. Stencil values of
/// the fractional power tag are branch-continued from the center point.
pub fn finite_difference_oracle(tag: ModularTag, tau: C64, h: f64) -> Result<FdEstimate> {
    let center = Lattice::from_tau(tau)?;
    let ref_log = (center.e[1] - center.e[0]).ln();
    let f = |t: C64| -> Result<C64> {
        let lat = Lattice::from_tau(t)?;
        Ok(match tag {
            ModularTag::PowE2MinusE1(a) => (a * log_near(lat.e[1] - lat.e[0], ref_log)).exp(),
            _ => tag_value(tag, &lat),
        })
    };
    let stencil = |hh: f64| -> Result<C64> {
        let fp2 = f(tau + 2.0 * hh)?;
        let fp1 = f(tau + hh)?;
        let fm1 = f(tau - hh)?;
        let fm2 = f(tau - 2.0 * hh)?;
        Ok((-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * hh))
    };
    let d_h = stencil(h)?;
    let d_h2 = stencil(h / 2.0)?;
    let d_h4 = stencil(h / 4.0)?;
    let value = (16.0 * d_h2 - d_h) / 15.0;
    let err = (d_h2 - d_h).norm() / 15.0;
    let order = ((d_h - d_h2).norm() / (d_h2 - d_h4).norm().max(1e-300)).log2();
    Ok(FdEstimate { value, err, order })
}
