//! The one-parameter degenerations: lines in accessory space on which the
//! solution stays elliptic but one datum collapses (mu1 = 0, b1 pinned to a
//! branch point, or the cubic constraint). Each still solves the elliptic
//! form of the deformation equation.

use heun_painleve::elliptic::Lattice;
use heun_painleve::painleve::{p6_residual, Family, ResidualMode};
use heun_painleve::{c, Result};

fn main() -> Result<()> {
    let (d1, d3) = (c(0.4, 0.3), c(-0.2, 0.5));
    let tau = c(0.0, 1.3);
    let lat = Lattice::from_tau(tau)?;
    let families: Vec<Family> = vec![
        Family::DegenerateMu0 { d1, d3 },
        Family::DegenerateMui { i: 1, d1, d3 },
        Family::DegenerateMui { i: 2, d1, d3 },
        Family::DegenerateMui { i: 3, d1, d3 },
        Family::DegenerateL1Cubic { d1, d3 },
        Family::DegenerateL1Ei { i: 1, d1, d3 },
        Family::DegenerateL1Ei { i: 2, d1, d3 },
        Family::DegenerateL1Ei { i: 3, d1, d3 },
    ];
    println!("tau = {tau}, parameters d1 = {d1}, d3 = {d3}\n");
    println!("{:<24} {:>26} {:>10} {:>12}", "family", "b1", "mu1", "ell resid");
    for fam in &families {
        let b1 = fam.b1(&lat)?;
        let mu1 = fam.mu1(&lat)?;
        let r = p6_residual(fam, tau, ResidualMode::Elliptic, 2.5e-3)?;
        let mu_text = match mu1 {
            Some(m) => format!("{:.4}", m.norm()),
            None => "free".into(),
        };
        println!("{:<24} {:>26.6} {:>10} {:>12.2e}", fam.to_string(), b1, mu_text, r.residual);
    }
    Ok(())
}
