//! Three independent routes to the same monodromy multiplier of the
//! two-gap operator: the closed elliptic form, a hyperelliptic integral on
//! the genus-2 curve, and direct Floquet transport of the ODE.

use heun_painleve::elliptic::Lattice;
use heun_painleve::monodromy::{floquet_multipliers, pair_mismatch, Ode2};
use heun_painleve::spectral::{
    hk_parameters_lame2, monodromy_multiplier_elliptic, monodromy_multiplier_hyperelliptic,
};
use heun_painleve::{c, cr, Result};

fn main() -> Result<()> {
    let lat = Lattice::from_tau(c(0.3, 1.1))?;
    let energy = c(2.0, 0.5);
    let hk = hk_parameters_lame2(energy, &lat)?;
    println!("E        = {energy}");
    println!("alpha    = {}", hk.alpha);
    println!("kappa    = {}", hk.kappa);

    let ode = Ode2::heun_elliptic([2, 0, 0, 0], energy, &lat);
    let bp = cr(0.41) + 0.19 * lat.tau;
    for k in [1usize, 3] {
        let m_ell = monodromy_multiplier_elliptic(&hk, k, &lat)?;
        let m_hyp = monodromy_multiplier_hyperelliptic(energy, k, 1, &lat, 1e-10)?;
        let (pair, _) = floquet_multipliers(&ode, bp, 2.0 * lat.om[k], 1e-12)?;
        println!("\nshift by 2 om{k}:");
        println!("  elliptic closed form   m   = {m_ell}");
        println!("  hyperelliptic integral m   = {m_hyp}");
        println!("  ODE Floquet pair           = {} , {}", pair.0, pair.1);
        // each route fixes a different representative of {m, 1/m}
        let d_he = pair_mismatch((m_ell, 1.0 / m_ell), (m_hyp, 1.0 / m_hyp));
        let d_ode = pair_mismatch(pair, (m_ell, 1.0 / m_ell));
        println!("  pair distances: hyperelliptic {d_he:.2e}, transport {d_ode:.2e}");
    }
    Ok(())
}
