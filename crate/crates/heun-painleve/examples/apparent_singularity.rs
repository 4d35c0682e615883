//! The extra singular point w = lambda of the deformed rational operator is
//! apparent exactly when the accessory parameters satisfy the apparency
//! constraint: the Frobenius obstruction vanishes and a loop around it has
//! trivial monodromy. Detuning the constraint breaks both.

use heun_painleve::elliptic::Lattice;
use heun_painleve::monodromy::{loop_matrix, Ode2};
use heun_painleve::painleve::{
    apparency_p, frame_hamiltonian, frame_map, frobenius_apparency_check, kappas_of_l,
};
use heun_painleve::{c, cr, C64, Result};

fn dist_to_eye(m: &[[C64; 2]; 2]) -> f64 {
    let eye = [[cr(1.0), cr(0.0)], [cr(0.0), cr(1.0)]];
    m.iter()
        .flatten()
        .zip(eye.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn main() -> Result<()> {
    let lat = Lattice::from_tau(c(0.3, 1.1))?;
    let l = [2u32, 1, 0, 1];
    let (b1, mu1) = (c(0.7, 0.4), c(-0.8, 0.6));
    let p = apparency_p(l, b1, mu1, &lat)?;
    let h = frame_hamiltonian(l, b1, mu1, &lat)?;
    let frame = frame_map(l, b1, Some(mu1), &lat, None)?;
    let kap = kappas_of_l(l);
    let (t, lam, mu) = (frame.t, frame.lambda, frame.mu.unwrap());
    println!("p      = {p}");
    println!("H      = {h}");
    println!("lambda = {lam}");

    let ob = frobenius_apparency_check(kap, t, lam, mu, h);
    println!("\nfrobenius obstruction            |O| = {:.3e}", ob.norm());
    let h_bad = h + 0.1 * p / (4.0 * (lat.e[1] - lat.e[0]) * t * (1.0 - t));
    let ob_bad = frobenius_apparency_check(kap, t, lam, mu, h_bad);
    println!("after a 10% error in p           |O| = {:.3e}", ob_bad.norm());

    let radius = 0.3 * lam.norm().min((lam - 1.0).norm()).min((lam - t).norm());
    let ode = Ode2::rational_deformed(kap, t, lam, mu, h);
    let m = loop_matrix(&ode, lam, radius, 1e-12)?;
    println!("\nloop around w = lambda           |M - I| = {:.3e}", dist_to_eye(&m));
    let ode_bad = Ode2::rational_deformed(kap, t, lam, mu, h_bad);
    let m_bad = loop_matrix(&ode_bad, lam, radius, 1e-12)?;
    println!("same loop with the detuned H     |M - I| = {:.3e}", dist_to_eye(&m_bad));
    Ok(())
}
