//! The apparent-singularity structure of the deformed operator: the constant
//! p that makes the extra singularity at ℘(x) = b₁ apparent, the matching
//! accessory data (Ẽ, s̃₁), and the Frobenius obstruction of the rational
//! form, whose vanishing is equivalent to the Hamiltonian taking its
//! closed-form value.

use crate::elliptic::Lattice;
use crate::error::{Error, Result};
use crate::C64;

/// κ₀ = l₁+½, κ₁ = l₂+½, κ_t = l₃+½, κ∞ = l₀+½. The exponent parameters of
/// the rational form pick up the three finite half-period indices first and
/// put l₀ at infinity.
pub fn kappas_of_l(l: [u32; 4]) -> [C64; 4] {
    [
        C64::new(l[1] as f64 + 0.5, 0.0),
        C64::new(l[2] as f64 + 0.5, 0.0),
        C64::new(l[3] as f64 + 0.5, 0.0),
        C64::new(l[0] as f64 + 0.5, 0.0),
    ]
}

fn check_b1_generic(b1: C64, lat: &Lattice) -> Result<()> {
    let scale = lat.e.iter().map(|e| e.norm()).fold(1.0f64, f64::max);
    for i in 0..3 {
        if (b1 - lat.e[i]).norm() < 1e-10 * scale {
            return Err(Error::domain(
                "b₁ collides with a branch point e_i: the deformed operator degenerates",
            ));
        }
    }
    Ok(())
}

/// The apparency constant
/// p = C(−μ₁² + Σᵢ (lᵢ+½)/(b₁−eᵢ) · μ₁) − b₁ (l₁+l₂+l₃−l₀)(l₁+l₂+l₃+l₀+1),
/// C = 4b₁³ − g₂b₁ − g₃. The sum runs over the three finite directions.
pub fn apparency_p(l: [u32; 4], b1: C64, mu1: C64, lat: &Lattice) -> Result<C64> {
    check_b1_generic(b1, lat)?;
    let c = 4.0 * b1 * b1 * b1 - lat.g2 * b1 - lat.g3;
    let mut sum = C64::new(0.0, 0.0);
    for i in 0..3 {
        sum += (l[i + 1] as f64 + 0.5) / (b1 - lat.e[i]);
    }
    let s123 = (l[1] + l[2] + l[3]) as f64;
    let s0 = l[0] as f64;
    Ok(c * (-mu1 * mu1 + sum * mu1) - b1 * (s123 - s0) * (s123 + s0 + 1.0))
}

/// Bundle of the deformed operator's accessory data at one (b₁, μ₁).
///
/// The three constants are redundant by construction: p determines Ẽ, μ₁
/// determines s̃₁, and the inverse maps are exposed for round-trip checks.
#[derive(Debug, Clone)]
pub struct DeformedOperator {
    pub l: [u32; 4],
    pub b1: C64,
    pub mu1: C64,
    pub p: C64,
    pub tilde_e: C64,
    pub tilde_s1: C64,
}

impl DeformedOperator {
    pub fn new(l: [u32; 4], b1: C64, mu1: C64, lat: &Lattice) -> Result<Self> {
        let p = apparency_p(l, b1, mu1, lat)?;
        let c = 4.0 * b1 * b1 * b1 - lat.g2 * b1 - lat.g3;
        let (l1, l2, l3) = (l[1] as f64, l[2] as f64, l[3] as f64);
        let e = lat.e;
        let cross = 2.0 * (l1 * l2 * e[2] + l2 * l3 * e[0] + l3 * l1 * e[1]);
        let mut diag = C64::new(0.0, 0.0);
        for i in 0..3 {
            let li = l[i + 1] as f64;
            diag += li * (li * e[i] + 2.0 * (e[i] + b1));
        }
        let tilde_e = p + cross - diag;
        let mut half = C64::new(0.0, 0.0);
        for i in 0..3 {
            half += (l[i + 1] as f64) / (2.0 * (b1 - e[i]));
        }
        let tilde_s1 = c * (half - mu1);
        Ok(DeformedOperator {
            l,
            b1,
            mu1,
            p,
            tilde_e,
            tilde_s1,
        })
    }

    /// μ₁ recovered from s̃₁: μ₁ = −s̃₁/C + Σ lᵢ/(2(b₁−eᵢ)).
    pub fn mu1_from_s1(&self, lat: &Lattice) -> C64 {
        let c = 4.0 * self.b1 * self.b1 * self.b1 - lat.g2 * self.b1 - lat.g3;
        let mut half = C64::new(0.0, 0.0);
        for i in 0..3 {
            half += (self.l[i + 1] as f64) / (2.0 * (self.b1 - lat.e[i]));
        }
        -self.tilde_s1 / c + half
    }

    /// p recovered from Ẽ (inverting the linear relation used in `new`).
    pub fn p_from_tilde_e(&self, lat: &Lattice) -> C64 {
        let (l1, l2, l3) = (self.l[1] as f64, self.l[2] as f64, self.l[3] as f64);
        let e = lat.e;
        let cross = 2.0 * (l1 * l2 * e[2] + l2 * l3 * e[0] + l3 * l1 * e[1]);
        let mut diag = C64::new(0.0, 0.0);
        for i in 0..3 {
            let li = self.l[i + 1] as f64;
            diag += li * (li * e[i] + 2.0 * (e[i] + self.b1));
        }
        self.tilde_e - cross + diag
    }
}

/// κ = ((κ₀+κ₁+κ_t−1)² − κ∞²)/4, the constant of the rational Hamiltonian.
pub fn kappa_quarter(kappas: [C64; 4]) -> C64 {
    let s = kappas[0] + kappas[1] + kappas[2] - 1.0;
    (s * s - kappas[3] * kappas[3]) / 4.0
}

/// The rational-form Hamiltonian
/// H = {λ(λ−1)(λ−t)μ² − [κ₀(λ−1)(λ−t) + κ₁λ(λ−t) + (κ_t−1)λ(λ−1)]μ + κ(λ−t)} / (t(t−1)).
pub fn hamiltonian_rational(kappas: [C64; 4], t: C64, lambda: C64, mu: C64) -> C64 {
    let [k0, k1, kt, _] = kappas;
    let kap = kappa_quarter(kappas);
    let poly = lambda * (lambda - 1.0) * (lambda - t) * mu * mu
        - (k0 * (lambda - 1.0) * (lambda - t)
            + k1 * lambda * (lambda - t)
            + (kt - 1.0) * lambda * (lambda - 1.0))
            * mu
        + kap * (lambda - t);
    poly / (t * (t - 1.0))
}

/// The Frobenius obstruction at the apparent singularity w = λ of the
/// rational form: the exponent-2 solution carries a log term unless
/// O = R₀ + μP₀ + μ² vanishes, where P₀ and R₀ are the regular parts of the
/// coefficients at w = λ. Equivalent to H being `hamiltonian_rational`.
pub fn frobenius_apparency_check(
    kappas: [C64; 4],
    t: C64,
    lambda: C64,
    mu: C64,
    hamiltonian: C64,
) -> C64 {
    let [k0, k1, kt, _] = kappas;
    let p0 = (1.0 - k0) / lambda + (1.0 - k1) / (lambda - 1.0) + (1.0 - kt) / (lambda - t);
    let kap = kappa_quarter(kappas);
    let gp = -(2.0 * lambda - 1.0) / (lambda * (lambda - 1.0) * lambda * (lambda - 1.0));
    let r0 = kap / (lambda * (lambda - 1.0))
        - t * (t - 1.0) * hamiltonian / (lambda * (lambda - 1.0) * (lambda - t))
        + lambda * (lambda - 1.0) * mu * gp;
    r0 + mu * p0 + mu * mu
}
