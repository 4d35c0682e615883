//! Polyline paths that keep a prescribed clearance from singularities.

use crate::error::{Error, Result};
use crate::C64;

/// A piecewise-linear path with a clearance certificate.
#[derive(Debug, Clone)]
pub struct PathPolyline {
    pub vertices: Vec<C64>,
    pub clearance: f64,
}

impl PathPolyline {
    pub fn length(&self) -> f64 {
        self.vertices
            .windows(2)
            .map(|w| (w[1] - w[0]).norm())
            .sum()
    }

    /// Position and velocity at global parameter s in [0,1], proportional to
    /// arc length.
    pub fn at(&self, s: f64) -> (C64, C64) {
        let total = self.length();
        let mut target = s.clamp(0.0, 1.0) * total;
        let last = self.vertices.len() - 2;
        for i in 0..=last {
            let (a, b) = (self.vertices[i], self.vertices[i + 1]);
            let seg = (b - a).norm();
            if target <= seg || i == last {
                let frac = if seg > 0.0 { (target / seg).clamp(0.0, 1.0) } else { 0.0 };
                let dz_ds = (b - a) * (total / seg.max(1e-300));
                return (a + (b - a) * frac, dz_ds);
            }
            target -= seg;
        }
        unreachable!()
    }

    /// Minimum distance from the path to a point.
    pub fn dist_to(&self, p: C64) -> f64 {
        self.vertices
            .windows(2)
            .map(|w| seg_point_dist(w[0], w[1], p))
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn seg_point_dist(a: C64, b: C64, p: C64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    // projection parameter of p on the segment, clamped
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Builds a polyline from `from` to `to` that keeps `clearance` distance from
/// every singularity, detouring laterally where the straight chord gets close.
///
/// Singularities within clearance of an endpoint are rejected: there is no way
/// to leave a point while honoring the clearance around it.
pub fn build_safe_path(
    from: C64,
    to: C64,
    singularities: &[C64],
    clearance: f64,
) -> Result<PathPolyline> {
    if clearance <= 0.0 {
        return Err(Error::usage("clearance must be positive"));
    }
    for s in singularities {
        if (from - s).norm() < clearance || (to - s).norm() < clearance {
            return Err(Error::domain(format!(
                "endpoint within clearance of singularity at {s}"
            )));
        }
    }
    let mut pts = vec![from, to];
    let mut detours = 0usize;
    'outer: for _attempt in 0..64 {
        for i in 0..pts.len() - 1 {
            let (a, b) = (pts[i], pts[i + 1]);
            for s in singularities {
                if seg_point_dist(a, b, *s) >= clearance {
                    continue;
                }
                // detour vertex: foot of the perpendicular from s, pushed
                // sideways; pick the side farther from the other singularities
                let ab = b - a;
                let len2 = ab.norm_sqr().max(1e-300);
                let t = (((*s - a).re * ab.re + (*s - a).im * ab.im) / len2).clamp(0.05, 0.95);
                let foot = a + ab * t;
                let n = C64::new(-ab.im, ab.re) / ab.norm().max(1e-300);
                let off = 2.0 * clearance;
                let cand1 = foot + n * off;
                let cand2 = foot - n * off;
                let score = |p: C64| {
                    singularities
                        .iter()
                        .map(|q| (p - q).norm())
                        .fold(f64::INFINITY, f64::min)
                };
                let v = if score(cand1) >= score(cand2) { cand1 } else { cand2 };
                pts.insert(i + 1, v);
                detours += 1;
                if detours > 24 {
                    return Err(Error::path(
                        "too many detours; singularities too dense for this clearance",
                    ));
                }
                continue 'outer;
            }
        }
        // no violating segment left
        let path = PathPolyline {
            vertices: pts,
            clearance,
        };
        verify_clearance(&path, singularities)?;
        let budget = 4.0 * (to - from).norm() + 8.0 * clearance * (detours as f64) + 1e-12;
        if path.length() > budget {
            return Err(Error::path(format!(
                "path length {} exceeds budget {budget}",
                path.length()
            )));
        }
        return Ok(path);
    }
    Err(Error::path("path construction did not stabilize"))
}

/// Dense-sampling certificate that the polyline honors its clearance.
pub fn verify_clearance(path: &PathPolyline, singularities: &[C64]) -> Result<()> {
    for s in singularities {
        if path.dist_to(*s) < path.clearance * 0.999 {
            return Err(Error::path(format!(
                "clearance violated near singularity at {s}"
            )));
        }
    }
    Ok(())
}
