//! Closed-form spectral data of the deformed operator for the two solvable
//! weight patterns, and the two-way maps between the accessory pair (b₁, μ₁)
//! and the Hermite-Krichever pair (α, κ).

use crate::elliptic::Lattice;
use crate::error::{Error, Result};
use crate::spectral::HKAnsatz;
use crate::C64;

/// Product function of the deformed operator, in the shape
/// Ξ = c_wp ℘(x) + c₀ + d₀/(℘(x) − b₁).
#[derive(Debug, Clone)]
pub struct DressedXi {
    pub l: [u32; 4],
    pub b1: C64,
    pub mu1: C64,
    pub c_wp: C64,
    pub c0: C64,
    pub d0: C64,
    pub q: C64,
}

impl DressedXi {
    pub fn eval(&self, lat: &Lattice, x: C64) -> Result<C64> {
        let p = lat.wp(x)?.v;
        Ok(self.c_wp * p + self.c0 + self.d0 / (p - self.b1))
    }
}

/// Q(b₁, μ₁) = 2μ₁ Π_i (2μ₁(e_i − b₁) + 1) for the weightless pattern.
pub fn q_l0000(b1: C64, mu1: C64, lat: &Lattice) -> C64 {
    let mut q = 2.0 * mu1;
    for i in 0..3 {
        q *= 2.0 * mu1 * (lat.e[i] - b1) + 1.0;
    }
    q
}

/// Q(b₁, μ₁) for the pattern l₀ = 1:
/// Q = −(2Cμ₁³ − (12b₁²−g₂)μ₁² + 4) · Π_j (2(b₁² + e_j b₁ + e_k e_m)μ₁ − 2b₁ − e_j),
/// where {k, m} are the two indices other than j.
pub fn q_l1000(b1: C64, mu1: C64, lat: &Lattice) -> C64 {
    let c = 4.0 * b1 * b1 * b1 - lat.g2 * b1 - lat.g3;
    let cubic = 2.0 * c * mu1 * mu1 * mu1 - (12.0 * b1 * b1 - lat.g2) * mu1 * mu1 + 4.0;
    let mut q = -cubic;
    for j in 0..3 {
        let others = lat.e[(j + 1) % 3] * lat.e[(j + 2) % 3];
        q *= 2.0 * (b1 * b1 + lat.e[j] * b1 + others) * mu1 - 2.0 * b1 - lat.e[j];
    }
    q
}

/// Ξ and Q of the deformed operator at (b₁, μ₁) for the two closed-form
/// patterns. Only l = (0,0,0,0) and l = (1,0,0,0) are covered.
pub fn xi_and_q(l: [u32; 4], b1: C64, mu1: C64, lat: &Lattice) -> Result<DressedXi> {
    match l {
        [0, 0, 0, 0] => Ok(DressedXi {
            l,
            b1,
            mu1,
            c_wp: C64::new(0.0, 0.0),
            c0: 2.0 * mu1,
            d0: C64::new(1.0, 0.0),
            q: q_l0000(b1, mu1, lat),
        }),
        [1, 0, 0, 0] => {
            let c = 4.0 * b1 * b1 * b1 - lat.g2 * b1 - lat.g3;
            let c0 = -c * mu1 * mu1 + (6.0 * b1 * b1 - lat.g2 / 2.0) * mu1 - b1;
            let d0 = -c * mu1 / 2.0 + 3.0 * b1 * b1 - lat.g2 / 4.0;
            Ok(DressedXi {
                l,
                b1,
                mu1,
                c_wp: C64::new(1.0, 0.0),
                c0,
                d0,
                q: q_l1000(b1, mu1, lat),
            })
        }
        _ => Err(Error::usage(
            "closed-form product function only for the patterns (0,0,0,0) and (1,0,0,0)",
        )),
    }
}

/// Picks the preimage of wp_alpha whose ℘' matches `wp_prime_target`.
fn log_with_prime(lat: &Lattice, wp_alpha: C64, wp_prime_target: C64) -> Result<C64> {
    let a0 = lat.elliptic_log(wp_alpha, None)?;
    let d_plus = (lat.wp_prime(a0)?.v - wp_prime_target).norm();
    let d_minus = (lat.wp_prime(-a0)?.v - wp_prime_target).norm();
    let a = if d_plus <= d_minus { a0 } else { -a0 };
    let check = (lat.wp_prime(a)?.v - wp_prime_target).norm();
    if check > 1e-6 * wp_prime_target.norm().max(1.0) {
        return Err(Error::numeric(format!(
            "no preimage matches the prescribed ℘' (best defect {check:.2e})"
        )));
    }
    Ok(a)
}

/// (b₁, μ₁) → (α, κ) for the weightless pattern:
/// ℘(α) = b₁ − 1/(2μ₁), ℘'(α) = −√(−Q)/(2μ₁²), κ = √(−Q)/(2μ₁),
/// all on the same branch of √(−Q) (principal here).
pub fn hk_forward_l0000(b1: C64, mu1: C64, lat: &Lattice) -> Result<HKAnsatz> {
    if mu1.norm() < 1e-12 {
        return Err(Error::domain(
            "μ₁ = 0 is a degenerate family point: the ansatz pair (α, κ) blows up",
        ));
    }
    let q = q_l0000(b1, mu1, lat);
    let root = (-q).sqrt();
    let wp_alpha = b1 - 1.0 / (2.0 * mu1);
    let wp_prime_alpha = -root / (2.0 * mu1 * mu1);
    let kappa = root / (2.0 * mu1);
    let alpha = log_with_prime(lat, wp_alpha, wp_prime_alpha)?;
    Ok(HKAnsatz {
        alpha,
        kappa,
        wp_alpha,
        wp_prime_alpha,
        l_tilde: [1, 0, 0, 0],
        degenerate: q.norm() < 1e-12 * (1.0 + b1.norm()).powi(4),
    })
}

/// (α, κ) → (b₁, μ₁) for the weightless pattern:
/// μ₁ = −κ/℘'(α), b₁ = ℘(α) − ℘'(α)/(2κ).
pub fn hk_inversion_l0000(alpha: C64, kappa: C64, lat: &Lattice) -> Result<(C64, C64)> {
    if kappa.norm() < 1e-12 {
        return Err(Error::domain("κ = 0 is a degenerate family point"));
    }
    let p = lat.wp(alpha)?.v;
    let pp = lat.wp_prime(alpha)?.v;
    if pp.norm() < 1e-12 {
        return Err(Error::domain("α at a half period: ℘'(α) = 0 makes μ₁ blow up"));
    }
    Ok((p - pp / (2.0 * kappa), -kappa / pp))
}

/// (b₁, μ₁) → (α, κ) for the pattern l₀ = 1, with
/// den = 2Cμ₁³ − (12b₁²−g₂)μ₁² + 4:
/// ℘(α)  = (2Cb₁μ₁³ + (−24b₁³+4g₂b₁+3g₃)μ₁² + (24b₁²−2g₂)μ₁ − 8b₁)/den,
/// ℘'(α) = −4(Cμ₁³ − (12b₁²−g₂)μ₁² + 12b₁μ₁ − 4)/den² · √(−Q),
/// κ     = 2μ₁ √(−Q)/den.
pub fn hk_forward_l1000(b1: C64, mu1: C64, lat: &Lattice) -> Result<HKAnsatz> {
    if mu1.norm() < 1e-12 {
        return Err(Error::domain("μ₁ = 0 is a degenerate family point"));
    }
    let (g2, g3) = (lat.g2, lat.g3);
    let c = 4.0 * b1 * b1 * b1 - g2 * b1 - g3;
    let den = 2.0 * c * mu1 * mu1 * mu1 - (12.0 * b1 * b1 - g2) * mu1 * mu1 + 4.0;
    if den.norm() < 1e-10 * (1.0 + b1.norm()).powi(3) {
        return Err(Error::domain(
            "the cubic normalizer vanishes: degenerate family point of the l₀ = 1 pattern",
        ));
    }
    let q = q_l1000(b1, mu1, lat);
    let root = (-q).sqrt();
    let wp_alpha = (2.0 * c * b1 * mu1 * mu1 * mu1
        + (-24.0 * b1 * b1 * b1 + 4.0 * g2 * b1 + 3.0 * g3) * mu1 * mu1
        + (24.0 * b1 * b1 - 2.0 * g2) * mu1
        - 8.0 * b1)
        / den;
    let wp_prime_alpha = -4.0
        * (c * mu1 * mu1 * mu1 - (12.0 * b1 * b1 - g2) * mu1 * mu1 + 12.0 * b1 * mu1 - 4.0)
        / (den * den)
        * root;
    let kappa = 2.0 * mu1 * root / den;
    let alpha = log_with_prime(lat, wp_alpha, wp_prime_alpha)?;
    Ok(HKAnsatz {
        alpha,
        kappa,
        wp_alpha,
        wp_prime_alpha,
        l_tilde: [2, 0, 0, 0],
        degenerate: q.norm() < 1e-12 * (1.0 + b1.norm()).powi(6),
    })
}

/// (α, κ) → (b₁, μ₁) for the pattern l₀ = 1 (℘ = ℘(α), ℘' = ℘'(α)):
/// b₁ = (2℘κ³ − 3℘'κ² + (6℘²−g₂)κ − ℘℘')/(2(κ³ − 3℘κ + ℘')),
/// μ₁ = 2(κ³ − 3℘κ + ℘')κ / (−2℘'κ³ + (12℘²−g₂)κ² − 6℘℘'κ + ℘'²).
pub fn hk_inversion_l1000(alpha: C64, kappa: C64, lat: &Lattice) -> Result<(C64, C64)> {
    if kappa.norm() < 1e-12 {
        return Err(Error::domain("κ = 0 is a degenerate family point"));
    }
    let p = lat.wp(alpha)?.v;
    let pp = lat.wp_prime(alpha)?.v;
    let g2 = lat.g2;
    let top = 2.0 * p * kappa * kappa * kappa - 3.0 * pp * kappa * kappa
        + (6.0 * p * p - g2) * kappa
        - p * pp;
    let bot = kappa * kappa * kappa - 3.0 * p * kappa + pp;
    if bot.norm() < 1e-12 * (1.0 + kappa.norm()).powi(3) {
        return Err(Error::domain("degenerate (α, κ): the b₁ denominator vanishes"));
    }
    let b1 = top / (2.0 * bot);
    let mud = -2.0 * pp * kappa * kappa * kappa + (12.0 * p * p - g2) * kappa * kappa
        - 6.0 * p * pp * kappa
        + pp * pp;
    if mud.norm() < 1e-12 * (1.0 + kappa.norm()).powi(4) {
        return Err(Error::domain("degenerate (α, κ): the μ₁ denominator vanishes"));
    }
    Ok((b1, 2.0 * bot * kappa / mud))
}
