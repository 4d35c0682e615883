//! Adaptive Gauss-Kronrod (7,15) quadrature along complex segments.

use crate::error::{Error, Result};
use crate::{c, C64};

// Kronrod-15 abscissae on [0,1]-half, descending; even entries are the
// embedded Gauss-7 nodes.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715526,
    0.169004726639268,
    0.190350578064785,
    0.204432940075299,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// Integral value with an error estimate and evaluation count.
#[derive(Debug, Clone, Copy)]
pub struct Quad {
    pub value: C64,
    pub err: f64,
    pub evals: usize,
}

fn gk15<F: FnMut(f64) -> Result<C64>>(f: &mut F, a: f64, b: f64) -> Result<(C64, f64, C64)> {
    let mid = 0.5 * (a + b);
    let hl = 0.5 * (b - a);
    let fc = f(mid)?;
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = WGK[7] * fc.norm();
    for j in 0..7 {
        let fp = f(mid + hl * XGK[j])?;
        let fm = f(mid - hl * XGK[j])?;
        kron += WGK[j] * (fp + fm);
        resabs += WGK[j] * (fp.norm() + fm.norm());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (fp + fm);
        }
    }
    let err = (kron - gauss).norm() * hl.abs();
    Ok((kron * hl, err, c(resabs * hl.abs(), 0.0)))
}

/// Integrates `f` over the parameter interval [0,1] adaptively.
///
/// `tol` is an absolute tolerance on the whole integral; local acceptance
/// distributes it proportionally to interval length. Fails with a precision
/// error when the budget of subdivisions is exhausted.
pub fn adaptive_01<F: FnMut(f64) -> Result<C64>>(mut f: F, tol: f64) -> Result<Quad> {
    let mut stack: Vec<(f64, f64, usize)> = vec![(0.0, 1.0, 0)];
    let mut total = c(0.0, 0.0);
    let mut err_total = 0.0f64;
    let mut evals = 0usize;
    let max_depth = 40;
    let max_intervals = 60_000usize;
    let mut done = 0usize;
    while let Some((a, b, depth)) = stack.pop() {
        let (val, err, _) = gk15(&mut f, a, b)?;
        evals += 15;
        done += 1;
        if done > max_intervals {
            return Err(Error::precision(format!(
                "quadrature interval budget exhausted; residual error {err:e} on [{a},{b}]"
            )));
        }
        let local_tol = tol * (b - a).max(1e-300);
        if err <= local_tol || depth >= max_depth {
            if depth >= max_depth && err > 16.0 * local_tol {
                return Err(Error::precision(format!(
                    "quadrature failed to converge on [{a},{b}]: err {err:e} > tol {local_tol:e}"
                )));
            }
            total += val;
            err_total += err;
        } else {
            let m = 0.5 * (a + b);
            stack.push((a, m, depth + 1));
            stack.push((m, b, depth + 1));
        }
    }
    Ok(Quad {
        value: total,
        err: err_total,
        evals,
    })
}

/// Straight-segment complex line integral of `f(z) dz`.
pub fn integrate_segment<F: FnMut(C64) -> Result<C64>>(
    mut f: F,
    z0: C64,
    z1: C64,
    tol: f64,
) -> Result<Quad> {
    let dz = z1 - z0;
    let q = adaptive_01(|s| Ok(f(z0 + dz * s)? * dz), tol)?;
    Ok(q)
}
