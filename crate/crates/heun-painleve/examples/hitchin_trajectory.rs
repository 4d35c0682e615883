//! Follows one member of the two-parameter solution family with all four
//! exponent weights 1/2 along a vertical line in the tau plane, printing
//! the rational-frame coordinates and the residuals of both equation forms.

use heun_painleve::elliptic::Lattice;
use heun_painleve::painleve::{frame_map, p6_residual, Family, ResidualMode};
use heun_painleve::{c, Result};

fn main() -> Result<()> {
    let fam = Family::Hitchin { c1: c(0.31, 0.12), c3: c(0.47, -0.23) };
    println!("{:>24} {:>24} {:>24} {:>12} {:>12}", "tau", "t", "lambda", "ell resid", "rat resid");
    let mut seed = None;
    for k in 0..12 {
        let tau = c(0.3, 1.05 + 0.04 * k as f64);
        let lat = Lattice::from_tau(tau)?;
        let b1 = fam.b1(&lat)?;
        let mu1 = fam.mu1(&lat)?;
        let frame = frame_map(fam.weights(), b1, mu1, &lat, seed)?;
        seed = Some(frame.delta1); // stay on one branch of the elliptic log
        let ell = p6_residual(&fam, tau, ResidualMode::Elliptic, 2.5e-3)?;
        let rat = p6_residual(&fam, tau, ResidualMode::Rational, 2.5e-3)?;
        println!(
            "{:>24.6} {:>24.6} {:>24.6} {:>12.2e} {:>12.2e}",
            tau, frame.t, frame.lambda, ell.residual, rat.residual
        );
    }
    Ok(())
}
