//! Numerical transport of second-order ODE solutions along curves, and the
//! monodromy/Floquet matrices built from it.

use super::ode::Ode2;
use super::rk::rk45;
use crate::error::{Error, Result};
use crate::quad::{build_safe_path, PathPolyline};
use crate::C64;

pub type M2 = [[C64; 2]; 2];

pub fn det2(m: &M2) -> C64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

pub fn mat_mul(a: &M2, b: &M2) -> M2 {
    let mut out = [[C64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

/// Eigenvalues of a 2x2 matrix, by the trace/determinant formula.
pub fn eigenvalues(m: &M2) -> (C64, C64) {
    let tr = m[0][0] + m[1][1];
    let disc = (tr * tr / 4.0 - det2(m)).sqrt();
    (tr / 2.0 + disc, tr / 2.0 - disc)
}

/// How far two unordered pairs are from each other, relative:
/// the better of the two pairings, measured by the worse member.
pub fn pair_mismatch(a: (C64, C64), b: (C64, C64)) -> f64 {
    let rel = |x: C64, y: C64| (x - y).norm() / x.norm().max(y.norm()).max(1e-300);
    let direct = rel(a.0, b.0).max(rel(a.1, b.1));
    let crossed = rel(a.0, b.1).max(rel(a.1, b.0));
    direct.min(crossed)
}

/// Transports (y, y') along a smooth curve s ↦ (z(s), z'(s)), s ∈ [0,1].
pub fn transport_curve<C>(ode: &Ode2, curve: C, y0: [C64; 2], rtol: f64) -> Result<[C64; 2]>
where
    C: Fn(f64) -> (C64, C64),
{
    let f = |s: f64, y: &[C64; 2]| -> Result<[C64; 2]> {
        let (z, dz) = curve(s);
        let (q1, q0) = (ode.coeff)(z)?;
        Ok([y[1] * dz, (q1 * y[1] + q0 * y[0]) * dz])
    };
    let (y, _) = rk45(f, y0, rtol, rtol * 1e-2)?;
    Ok(y)
}

/// Fundamental 2x2 transport along a curve: columns are the transported
/// images of (1,0) and (0,1), so Y(end) = M · Y(start) for any solution.
pub fn fundamental_curve<C>(ode: &Ode2, curve: C, rtol: f64) -> Result<M2>
where
    C: Fn(f64) -> (C64, C64) + Copy,
{
    let one = C64::new(1.0, 0.0);
    let zero = C64::new(0.0, 0.0);
    let c1 = transport_curve(ode, curve, [one, zero], rtol)?;
    let c2 = transport_curve(ode, curve, [zero, one], rtol)?;
    Ok([[c1[0], c2[0]], [c1[1], c2[1]]])
}

pub fn transport_polyline(ode: &Ode2, path: &PathPolyline, y0: [C64; 2], rtol: f64) -> Result<[C64; 2]> {
    transport_curve(ode, |s| path.at(s), y0, rtol)
}

/// Monodromy matrix along the straight (detoured where necessary) shift
/// path from `basepoint` to `basepoint + shift`. For a coefficient field
/// periodic under the shift this is the Floquet matrix; its eigenvalues are
/// the multiplier pair.
pub fn monodromy_matrix(ode: &Ode2, basepoint: C64, shift: C64, rtol: f64) -> Result<M2> {
    let to = basepoint + shift;
    let sings = (ode.sing_in)(basepoint, to);
    let path = build_safe_path(basepoint, to, &sings, 0.05)?;
    fundamental_curve(ode, |s| path.at(s), rtol)
}

/// Monodromy around a closed circle. The circle must clear every other
/// singularity by at least a third of its radius.
pub fn loop_matrix(ode: &Ode2, center: C64, radius: f64, rtol: f64) -> Result<M2> {
    let margin = C64::new(2.0 * radius, 2.0 * radius);
    for s in (ode.sing_in)(center - margin, center + margin) {
        let d = (s - center).norm();
        if d > 1e-12 && d < radius * (1.0 + 1.0 / 3.0) {
            return Err(Error::path(format!(
                "loop of radius {radius} around {center} passes too close to the singularity at {s}"
            )));
        }
    }
    let curve = |s: f64| {
        let phase = (C64::i() * std::f64::consts::TAU * s).exp();
        (
            center + radius * phase,
            C64::i() * std::f64::consts::TAU * radius * phase,
        )
    };
    fundamental_curve(ode, curve, rtol)
}

/// Floquet multipliers (eigenvalue pair) of the shift monodromy, together
/// with the matrix itself.
pub fn floquet_multipliers(
    ode: &Ode2,
    basepoint: C64,
    shift: C64,
    rtol: f64,
) -> Result<((C64, C64), M2)> {
    let m = monodromy_matrix(ode, basepoint, shift, rtol)?;
    Ok((eigenvalues(&m), m))
}
