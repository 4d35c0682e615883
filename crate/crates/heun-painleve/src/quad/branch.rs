//! Continuous square-root branch tracking along a parametrized path.
//!
//! A `SqrtTracker` walks s in [0,1], recording a guide value of w(s) =
//! sqrt(w2(s)) continued from a caller-chosen seed at s=0. Arbitrary later
//! queries (the quadrature rule evaluates out of order) are matched to the
//! nearest guide node; the walk refines itself until consecutive guide values
//! stay within a 60-degree cone, so nearest-node sign matching is unambiguous.

use super::gk::{adaptive_01, Quad};
use super::path::PathPolyline;
use crate::error::{Error, Result};
use crate::C64;

pub struct SqrtTracker {
    guide: Vec<(f64, C64)>,
}

impl SqrtTracker {
    pub fn build<W2: Fn(f64) -> Result<C64>>(w2: W2, seed: C64, steps: usize) -> Result<Self> {
        let gentle = |a: C64, b: C64| -> bool {
            // angle(a,b) < 60 degrees
            let dot = (a * b.conj()).re;
            dot > 0.5 * a.norm() * b.norm()
        };
        let mut guide = Vec::with_capacity(steps + 1);
        let w0 = seed;
        let v0 = w2(0.0)?;
        if (w0 * w0 - v0).norm() > 1e-6 * (1.0 + v0.norm()) {
            return Err(Error::usage(
                "branch seed does not square to the integrand value at the path start",
            ));
        }
        guide.push((0.0, w0));
        let n = steps.max(16);
        let mut prev = w0;
        let mut s_prev = 0.0f64;
        let mut queue: Vec<f64> = (1..=n).rev().map(|k| k as f64 / n as f64).collect();
        let mut depth_budget = 40_000usize;
        while let Some(s) = queue.pop() {
            depth_budget = depth_budget.checked_sub(1).ok_or_else(|| {
                Error::numeric("branch tracking refinement budget exhausted")
            })?;
            let v = w2(s)?;
            let mut w = v.sqrt();
            if (w - prev).norm() > (w + prev).norm() {
                w = -w;
            }
            if prev.norm() < 1e-13 || w.norm() < 1e-13 || gentle(w, prev) {
                guide.push((s, w));
                prev = w;
                s_prev = s;
            } else {
                // too sharp: bisect, unless the interval is already tiny
                // (that means the path runs into a zero of w2)
                if s - s_prev < 1e-9 {
                    return Err(Error::numeric(format!(
                        "square-root branch ambiguous near s={s}: path passes too close to a root"
                    )));
                }
                queue.push(s);
                queue.push(0.5 * (s + s_prev));
            }
        }
        Ok(SqrtTracker { guide })
    }

    /// sqrt of `value` = w2(s), on the branch continued along the guide.
    pub fn sqrt_at(&self, s: f64, value: C64) -> C64 {
        let idx = match self
            .guide
            .binary_search_by(|probe| probe.0.partial_cmp(&s).unwrap())
        {
            Ok(i) => i,
            Err(i) => {
                if i == 0 {
                    0
                } else if i >= self.guide.len() {
                    self.guide.len() - 1
                } else if (self.guide[i].0 - s).abs() < (s - self.guide[i - 1].0).abs() {
                    i
                } else {
                    i - 1
                }
            }
        };
        let g = self.guide[idx].1;
        let w = value.sqrt();
        if (w - g).norm() > (w + g).norm() {
            -w
        } else {
            w
        }
    }

    /// Guide value at the end of the path (s=1).
    pub fn end_value(&self) -> C64 {
        self.guide.last().unwrap().1
    }
}

/// Integrates g(s, w(s)) over s in [0,1], where w(s) is the continuously
/// tracked square root of w2(s) starting from `seed`.
///
/// The integrand closure receives the global parameter and the branch-correct
/// root; it is responsible for any dz/ds factors.
pub fn integrate_branched<W2, G>(w2: W2, seed: C64, g: G, tol: f64) -> Result<Quad>
where
    W2: Fn(f64) -> Result<C64>,
    G: Fn(f64, C64) -> Result<C64>,
{
    let tracker = SqrtTracker::build(&w2, seed, 256)?;
    adaptive_01(
        |s| {
            let v = w2(s)?;
            let w = tracker.sqrt_at(s, v);
            g(s, w)
        },
        tol,
    )
}

/// ∫ num(z)/sqrt(f(z)) dz along a polyline, with the root branch continued
/// from `seed` (the desired value of sqrt(f) at the first vertex).
pub fn integrate_over_sqrt<F, N>(
    path: &PathPolyline,
    f: F,
    num: N,
    seed: C64,
    tol: f64,
) -> Result<Quad>
where
    F: Fn(C64) -> Result<C64>,
    N: Fn(C64) -> Result<C64>,
{
    let w2 = |s: f64| {
        let (z, _) = path.at(s);
        f(z)
    };
    integrate_branched(
        &w2,
        seed,
        |s, w| {
            let (z, dz) = path.at(s);
            Ok(num(z)? / w * dz)
        },
        tol,
    )
}

/// ∫ from a simple root `a` of f: ∫_a^{z1} num(z)/sqrt(f(z)) dz along the
/// straight chord, via the substitution z = a + u^2 which removes the
/// endpoint singularity. `seed_fprime_sqrt` selects the branch: it is the
/// desired value of sqrt(f'(a)), and sqrt(f(z)) == u * sqrt(f(a+u^2)/u^2) is
/// continued from it.
pub fn integrate_over_sqrt_from_base<F, N>(
    a: C64,
    z1: C64,
    f: F,
    num: N,
    seed_fprime_sqrt: C64,
    tol: f64,
) -> Result<Quad>
where
    F: Fn(C64) -> Result<C64>,
    N: Fn(C64) -> Result<C64>,
{
    let u_end = (z1 - a).sqrt();
    let fpa = seed_fprime_sqrt * seed_fprime_sqrt;
    let small = 1e-7 * (1.0 + u_end.norm());
    let f1 = move |u: C64| -> Result<C64> {
        if u.norm() < small {
            return Ok(fpa);
        }
        Ok(f(a + u * u)? / (u * u))
    };
    let w2 = |s: f64| f1(u_end * s);
    integrate_branched(
        &w2,
        seed_fprime_sqrt,
        |s, w| {
            let u = u_end * s;
            Ok(2.0 * num(a + u * u)? * u_end / w)
        },
        tol,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{c, cr};

    #[test]
    fn full_circle_sqrt_flips_sign() {
        // following sqrt(z) once around the origin lands on the other branch
        let w2 = |s: f64| -> Result<C64> {
            Ok((C64::i() * std::f64::consts::TAU * s).exp())
        };
        let tracker = SqrtTracker::build(w2, cr(1.0), 64).unwrap();
        assert!((tracker.end_value() + cr(1.0)).norm() < 1e-9);
    }

    #[test]
    fn base_substitution_matches_plain_quadrature() {
        // f(z) = z(z-2): integral of 1/sqrt(f) from 0 to 1+i, vs the shifted
        // closed contour-free evaluation away from the root
        let f = |z: C64| Ok(z * (z - 2.0));
        let z1 = c(1.0, 1.0);
        let seed = (-C64::new(2.0, 0.0)).sqrt(); // f'(0) = -2
        let q = integrate_over_sqrt_from_base(c(0.0, 0.0), z1, f, |_| Ok(cr(1.0)), seed, 1e-12)
            .unwrap();
        // arcosh-type closed form: int dz/sqrt(z^2-2z) = log(z-1+sqrt(z^2-2z))
        // with branches aligned; verify via derivative instead: numeric check
        // that d/dt of the partial integral equals the integrand at tau small
        // is awkward here, so compare against a second independent route:
        // substitute z = 1+i s and integrate from near 0 upward, adding the
        // tiny start segment analytically ~ 2 sqrt(z)/sqrt(-2).
        let eps = 1e-4;
        let start = z1 * eps;
        // near 0, 1/sqrt(f) = 1/(sqrt(z) seed sqrt(1-z/2)); integrate the
        // first two series terms over the skipped head segment
        let head = (2.0 * start.sqrt() + start * start.sqrt() / 6.0) / seed;
        let path = PathPolyline {
            vertices: vec![start, z1],
            clearance: 1e-3,
        };
        let w_start_sq = f(start).unwrap();
        let mut w_start = w_start_sq.sqrt();
        // align with u * sqrt(f1): u = sqrt(start), w ~ u * seed
        let expect = start.sqrt() * seed;
        if (w_start - expect).norm() > (w_start + expect).norm() {
            w_start = -w_start;
        }
        let q2 = integrate_over_sqrt(&path, f, |_| Ok(cr(1.0)), w_start, 1e-12).unwrap();
        assert!(
            (q.value - (q2.value + head)).norm() < 1e-8,
            "mismatch: {} vs {}",
            q.value,
            q2.value + head
        );
    }
}
