//! Spectral data of the two-gap operator -psi'' + 6 wp(x) psi = E psi:
//! the constant Q, the transfer point wp(alpha), and the exponent kappa,
//! swept along a line of eigenvalues that crosses a band edge.

use heun_painleve::elliptic::Lattice;
use heun_painleve::spectral::{hk_parameters_lame2, q_lame2_closed, xi_lame2, q_spread};
use heun_painleve::{c, cr, Result};

fn main() -> Result<()> {
    let lat = Lattice::from_tau(c(0.0, 1.3))?;
    // 3 e_i are the finite band edges of the two-gap spectrum; walk a line
    // that passes near one of them to watch the multiplier data degenerate
    let edge = 3.0 * lat.e[0];
    println!("band edges: 3e1 = {}, 3e2 = {}, 3e3 = {}", edge, 3.0 * lat.e[1], 3.0 * lat.e[2]);
    println!("{:>6} {:>26} {:>14} {:>26}", "E", "Q(E)", "|Q spread|", "kappa");
    for k in 0..=8 {
        let e = edge + cr(0.08 * (k as f64 - 4.0)) + c(0.0, 0.4);
        let sd = xi_lame2(e, &lat);
        let (_, spread) = q_spread(&sd, &lat)?;
        let q = q_lame2_closed(e, &lat);
        match hk_parameters_lame2(e, &lat) {
            Ok(hk) => println!(
                "{:>6.2} {:>26.6} {:>14.2e} {:>26.6}{}",
                e.re - edge.re,
                q,
                spread,
                hk.kappa,
                if hk.degenerate { "  (band edge)" } else { "" }
            ),
            Err(err) => println!("{:>6.2} {:>26.6} {:>14.2e}  {err}", e.re - edge.re, q, spread),
        }
    }
    Ok(())
}
