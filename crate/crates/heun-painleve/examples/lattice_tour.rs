//! A walk through the elliptic layer: lattice data, the differential
//! identity, quasi-periodic shifts, and the elliptic logarithm.

use heun_painleve::elliptic::Lattice;
use heun_painleve::{c, i_pi, Result};

fn main() -> Result<()> {
    let tau = c(0.3, 1.1);
    let lat = Lattice::from_tau(tau)?;
    println!("tau     = {tau}");
    println!("e1      = {}", lat.e[0]);
    println!("e2      = {}", lat.e[1]);
    println!("e3      = {}", lat.e[2]);
    println!("g2      = {}", lat.g2);
    println!("g3      = {}", lat.g3);
    println!("eta1    = {}", lat.eta1);
    println!("eta3    = {}", lat.eta3);
    println!("t(tau)  = {}", lat.t());

    let legendre = lat.eta1 * lat.om[3] - lat.eta3 * lat.om[1] - i_pi() / 2.0;
    println!("\nlegendre defect        |eta1 om3 - eta3 om1 - i pi/2| = {:.3e}", legendre.norm());

    let z = c(0.31, 0.17);
    let p = lat.wp(z)?.v;
    let pp = lat.wp_prime(z)?.v;
    let curve = pp * pp - (4.0 * p * p * p - lat.g2 * p - lat.g3);
    println!("curve defect at z      |wp'^2 - (4wp^3 - g2 wp - g3)| = {:.3e}", curve.norm());

    // zeta is only quasi-periodic: each period shift adds a fixed constant
    let z1 = lat.zeta(z)?.v;
    let z2 = lat.zeta(z + 1.0)?.v;
    let z3 = lat.zeta(z + tau)?.v;
    println!("\nzeta(z)                = {z1}");
    println!("zeta(z+1) - zeta(z)    = {}   (2 eta1 = {})", z2 - z1, 2.0 * lat.eta1);
    println!("zeta(z+tau) - zeta(z)  = {}   (2 eta3 = {})", z3 - z1, 2.0 * lat.eta3);

    // invert wp: recover z from wp(z) up to the lattice and the sign
    let w = lat.wp(z)?.v;
    let back = lat.elliptic_log(w, Some(z))?;
    println!("\nwp(z)                  = {w}");
    println!("elliptic log round trip: z = {z}, recovered {back}");
    Ok(())
}
