//! Adaptive Dormand-Prince 5(4) integration of small complex systems over a
//! real parameter in [0, 1]. Step control uses the embedded 4th-order error
//! estimate; the first-same-as-last stage is reused across accepted steps.

use crate::error::{Error, Result};
use crate::C64;

const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

#[derive(Debug, Clone, Copy)]
pub struct RkStats {
    pub steps: usize,
    pub rejected: usize,
}

/// Integrates y' = f(s, y) from s = 0 to s = 1.
pub fn rk45<const N: usize, F>(
    f: F,
    y0: [C64; N],
    rtol: f64,
    atol: f64,
) -> Result<([C64; N], RkStats)>
where
    F: Fn(f64, &[C64; N]) -> Result<[C64; N]>,
{
    let mut s = 0.0f64;
    let mut y = y0;
    let mut h = 0.01f64;
    let mut k0 = f(0.0, &y)?;
    let mut stats = RkStats { steps: 0, rejected: 0 };
    let zero = [C64::new(0.0, 0.0); N];
    while s < 1.0 {
        if h < 1e-13 {
            return Err(Error::precision(
                "step size underflow: singular point on the integration path?",
            ));
        }
        h = h.min(1.0 - s);
        let mut k = [zero; 7];
        k[0] = k0;
        for stage in 0..6 {
            let mut arg = y;
            for j in 0..=stage {
                if A[stage][j] != 0.0 {
                    for n in 0..N {
                        arg[n] += h * A[stage][j] * k[j][n];
                    }
                }
            }
            k[stage + 1] = f(s + h * stage_c(stage), &arg)?;
        }
        let mut y5 = y;
        let mut err = 0.0f64;
        let mut scale = atol;
        for n in 0..N {
            let mut d5 = C64::new(0.0, 0.0);
            let mut d4 = C64::new(0.0, 0.0);
            for j in 0..7 {
                d5 += B5[j] * k[j][n];
                d4 += B4[j] * k[j][n];
            }
            y5[n] += h * d5;
            err = err.max((h * (d5 - d4)).norm());
            scale = scale.max(rtol * y5[n].norm().max(y[n].norm()));
        }
        let e = err / scale.max(1e-300);
        if e <= 1.0 {
            s += h;
            y = y5;
            k0 = k[6]; // FSAL: the last stage was evaluated at (s+h, y5)
            stats.steps += 1;
            if stats.steps > 200_000 {
                return Err(Error::precision("step budget exhausted"));
            }
        } else {
            stats.rejected += 1;
            if stats.rejected > 200_000 {
                return Err(Error::precision("step rejection budget exhausted"));
            }
        }
        let grow = 0.9 * e.max(1e-10).powf(-0.2);
        h *= grow.clamp(0.2, 5.0);
    }
    Ok((y, stats))
}

fn stage_c(stage: usize) -> f64 {
    [0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0][stage]
}
