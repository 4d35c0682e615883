//! Closed-form tau-derivatives of the lattice quantities next to their
//! finite-difference oracles, with the observed convergence order.

use heun_painleve::modular::{finite_difference_oracle, modular_derivative, ModularTag};
use heun_painleve::elliptic::Lattice;
use heun_painleve::{c, cr, Result};

fn main() -> Result<()> {
    let tau = c(0.2, 1.2);
    let lat = Lattice::from_tau(tau)?;
    let tags = [
        ("t", ModularTag::T),
        ("e1", ModularTag::E(1)),
        ("e2", ModularTag::E(2)),
        ("e3", ModularTag::E(3)),
        ("eta1", ModularTag::Eta1),
        ("(e2-e1)^1/2", ModularTag::PowE2MinusE1(cr(0.5))),
    ];
    println!("tau = {tau}\n");
    println!("{:<12} {:>26} {:>26} {:>10}", "quantity", "closed form", "finite difference", "rel diff");
    for (name, tag) in tags {
        let closed = modular_derivative(tag, &lat);
        let fd = finite_difference_oracle(tag, tau, 1e-4 * tau.norm().max(1.0))?;
        let rel = (closed.dtau - fd.value).norm() / fd.value.norm().max(1.0);
        println!("{name:<12} {:>26.8} {:>26.8} {rel:>10.1e}", closed.dtau, fd.value);
    }
    // the stencil's order is only readable while truncation beats round-off
    println!("\nobserved order at coarse steps (expect ~4):");
    for (name, tag) in [("t", ModularTag::T), ("eta1", ModularTag::Eta1)] {
        let fd = finite_difference_oracle(tag, tau, 2e-2)?;
        println!("  {name:<6} order {:.3}, error estimate {:.1e}", fd.order, fd.err);
    }
    Ok(())
}
