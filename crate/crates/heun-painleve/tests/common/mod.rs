#![allow(dead_code)]

pub mod oracles;

use heun_painleve::elliptic::Lattice;
use heun_painleve::C64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn cz(p: (f64, f64)) -> C64 {
    C64::new(p.0, p.1)
}

/// |got − want| ≤ tol · max(|want|, 1). The floor at 1 keeps near-zero
/// references from demanding absolute machine zeros.
pub fn assert_close(got: C64, want: (f64, f64), tol: f64, what: &str) {
    let w = cz(want);
    let d = (got - w).norm();
    let s = w.norm().max(1.0);
    assert!(
        d <= tol * s,
        "{what}: got {got}, want {w}, |diff| = {:.3e} exceeds {:.1e} (scale {:.3e})",
        d,
        tol,
        s
    );
}

pub fn assert_small(value: f64, tol: f64, what: &str) {
    assert!(
        value.is_finite() && value <= tol,
        "{what}: {value:.3e} exceeds {tol:.1e}"
    );
}

/// Random τ in a band of the upper half plane where every routine is
/// comfortably inside its certified domain.
pub fn random_tau(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.gen_range(-0.45..0.45), rng.gen_range(0.85..1.6))
}

/// Random spectral parameter for the two-gap operator, kept away from the
/// points where the closed forms degenerate: E² = 3g₂ (℘(α) pole),
/// E² = (3g₂)·¾ (zero of the product-function constant term) and the band
/// edges E = 3eᵢ. With `chord_safe` the straight segment from √(3g₂) to E
/// also stays clear of the other branch points, so the hyperelliptic
/// quadrature path is admissible.
pub fn sample_energy(rng: &mut ChaCha8Rng, lat: &Lattice, chord_safe: bool) -> C64 {
    let scale = lat.g2.norm().sqrt().max(1.0);
    let base = (3.0 * lat.g2).sqrt();
    let mut relax = 1.0f64;
    for tries in 0..2000 {
        if tries > 0 && tries % 150 == 0 {
            relax *= 0.7;
        }
        let e = C64::new(
            rng.gen_range(-2.5..2.5) * scale,
            rng.gen_range(-2.5..2.5) * scale,
        );
        let margin2 = 0.35 * scale * scale * relax;
        let margin1 = 0.35 * scale * relax;
        if (e * e - 3.0 * lat.g2).norm() < margin2 {
            continue;
        }
        if (e * e - 2.25 * lat.g2).norm() < margin2 {
            continue;
        }
        if (0..3).any(|i| (e - 3.0 * lat.e[i]).norm() < margin1) {
            continue;
        }
        if chord_safe {
            let clearance = 0.3 * scale * relax;
            let obstacles: Vec<C64> = (0..3).map(|i| 3.0 * lat.e[i]).chain([-base]).collect();
            if obstacles.iter().any(|&p| seg_dist(base, e, p) < clearance) {
                continue;
            }
        }
        return e;
    }
    panic!("energy sampler exhausted its tries; lattice too degenerate?");
}

/// Distance from point p to the segment [a, b].
pub fn seg_dist(a: C64, b: C64, p: C64) -> f64 {
    let ab = b - a;
    let denom = ab.norm_sqr();
    if denom == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / denom;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Smaller of the pair distances between {a, ±b}, for values defined up to
/// an overall sign.
pub fn sign_paired_dist(a: C64, b: C64) -> f64 {
    (a - b).norm().min((a + b).norm())
}
