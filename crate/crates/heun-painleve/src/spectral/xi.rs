//! The even doubly-periodic product function Ξ(x) of a finite-gap operator,
//! solved per eigenvalue from the symmetric-square condition
//! Ξ''' = 4(V − E)Ξ' + 2V'Ξ with V(x) = Σ l_i(l_i+1)℘(x+ω_i),
//! on the basis {1} ∪ {℘(x+ω_i)^m : 1 ≤ m ≤ l_i}, with the constant term
//! pinned to 1. The spectral constant Q = Ξ²(E−V) + ΞΞ''/2 − (Ξ')²/4 is then
//! sampled and checked for x-independence.

use crate::elliptic::Lattice;
use crate::error::{Error, Result};
use crate::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct XiTerm {
    /// half-period index 0..=3 of the shift ω_i
    pub i: usize,
    /// power of ℘(x+ω_i), 1..=l_i
    pub m: u32,
    pub coeff: C64,
}

#[derive(Debug, Clone)]
pub struct SpectralData {
    pub l: [u32; 4],
    pub energy: C64,
    /// constant term of Ξ (normalization: 1 unless rescaled by the caller)
    pub c0: C64,
    pub terms: Vec<XiTerm>,
    pub q: C64,
    /// sign applied to the principal sqrt(-Q) in downstream formulas
    pub sqrt_q_sign: i8,
    /// worst symmetric-square residual over the sample points, relative
    pub fit_residual: f64,
}

pub fn potential(l: [u32; 4], lat: &Lattice, x: C64) -> Result<C64> {
    let mut v = C64::new(0.0, 0.0);
    for i in 0..4 {
        if l[i] > 0 {
            let li = l[i] as f64;
            v += li * (li + 1.0) * lat.wp(x + lat.om[i])?.v;
        }
    }
    Ok(v)
}

pub fn potential_prime(l: [u32; 4], lat: &Lattice, x: C64) -> Result<C64> {
    let mut v = C64::new(0.0, 0.0);
    for i in 0..4 {
        if l[i] > 0 {
            let li = l[i] as f64;
            v += li * (li + 1.0) * lat.wp_prime(x + lat.om[i])?.v;
        }
    }
    Ok(v)
}

/// (f, f', f'', f''') for f = ℘(x+ω_i)^m.
fn power_derivs(lat: &Lattice, x: C64, i: usize, m: u32) -> Result<[C64; 4]> {
    let p = lat.wp(x + lat.om[i])?.v;
    let pp = lat.wp_prime(x + lat.om[i])?.v;
    let p2 = 6.0 * p * p - lat.g2 / 2.0;
    let p3 = 12.0 * p * pp;
    let mf = m as f64;
    let pow = |k: i64| -> C64 {
        if k < 0 {
            C64::new(0.0, 0.0)
        } else {
            p.powi(k as i32)
        }
    };
    let f = pow(m as i64);
    let f1 = mf * pow(m as i64 - 1) * pp;
    let f2 = mf * (mf - 1.0) * pow(m as i64 - 2) * pp * pp + mf * pow(m as i64 - 1) * p2;
    let f3 = mf * (mf - 1.0) * (mf - 2.0) * pow(m as i64 - 3) * pp * pp * pp
        + 3.0 * mf * (mf - 1.0) * pow(m as i64 - 2) * pp * p2
        + mf * pow(m as i64 - 1) * p3;
    Ok([f, f1, f2, f3])
}

/// L(f) = f''' - 4(V-E) f' - 2V' f for one basis term (m=0 means the constant).
fn sym_square_op(l: [u32; 4], energy: C64, lat: &Lattice, x: C64, i: usize, m: u32) -> Result<C64> {
    let v = potential(l, lat, x)?;
    let vp = potential_prime(l, lat, x)?;
    if m == 0 {
        return Ok(-2.0 * vp);
    }
    let d = power_derivs(lat, x, i, m)?;
    Ok(d[3] - 4.0 * (v - energy) * d[1] - 2.0 * vp * d[0])
}

/// Least squares min ‖A x − b‖ by modified Gram-Schmidt QR. Rows of `a` are
/// the equations. Errors when a column is (numerically) dependent.
pub(crate) fn lstsq(a: &[Vec<C64>], b: &[C64]) -> Result<Vec<C64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if rows < cols {
        return Err(Error::usage("least squares needs at least as many rows as unknowns"));
    }
    // columns of Q, built in place
    let mut q: Vec<Vec<C64>> = (0..cols)
        .map(|j| (0..rows).map(|r| a[r][j]).collect())
        .collect();
    let mut r = vec![vec![C64::new(0.0, 0.0); cols]; cols];
    for j in 0..cols {
        let col_scale: f64 = q[j].iter().map(|v| v.norm()).fold(0.0, f64::max);
        for k in 0..j {
            let proj: C64 = (0..rows).map(|t| q[k][t].conj() * q[j][t]).sum();
            r[k][j] = proj;
            for t in 0..rows {
                let sub = proj * q[k][t];
                q[j][t] -= sub;
            }
        }
        let nrm: f64 = (0..rows).map(|t| q[j][t].norm_sqr()).sum::<f64>().sqrt();
        if nrm < 1e-13 * col_scale.max(1e-300) {
            return Err(Error::numeric(
                "degenerate normalization: linear system column is dependent at this eigenvalue",
            ));
        }
        r[j][j] = C64::new(nrm, 0.0);
        for t in 0..rows {
            q[j][t] /= nrm;
        }
    }
    // x = R^{-1} Q^H b
    let mut y = vec![C64::new(0.0, 0.0); cols];
    for j in 0..cols {
        y[j] = (0..rows).map(|t| q[j][t].conj() * b[t]).sum();
    }
    let mut x = vec![C64::new(0.0, 0.0); cols];
    for j in (0..cols).rev() {
        let mut s = y[j];
        for k in (j + 1)..cols {
            s -= r[j][k] * x[k];
        }
        x[j] = s / r[j][j];
    }
    Ok(x)
}

/// Deterministic sample points in the fundamental cell, clear of all four
/// shifted pole families.
pub(crate) fn sample_points(lat: &Lattice, n: usize, seed: u64) -> Vec<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::with_capacity(n);
    let im_span = lat.tau.im;
    while pts.len() < n {
        let x = C64::new(
            rng.gen_range(-0.45..0.45),
            rng.gen_range(-0.45..0.45) * im_span,
        );
        let clear = (0..4).all(|i| {
            let (zr, _, _) = lat.reduce(x + lat.om[i]);
            zr.norm() >= 0.1
        });
        if clear {
            pts.push(x);
        }
    }
    pts
}

impl SpectralData {
    /// Ξ and its first three derivatives at x.
    pub fn xi_derivs(&self, lat: &Lattice, x: C64) -> Result<[C64; 4]> {
        let mut out = [self.c0, C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)];
        for t in &self.terms {
            let d = power_derivs(lat, x, t.i, t.m)?;
            for k in 0..4 {
                out[k] += t.coeff * d[k];
            }
        }
        Ok(out)
    }

    pub fn xi(&self, lat: &Lattice, x: C64) -> Result<C64> {
        Ok(self.xi_derivs(lat, x)?[0])
    }

    /// Q = Ξ²(E−V) + ΞΞ''/2 − (Ξ')²/4 evaluated at one x.
    pub fn q_at(&self, lat: &Lattice, x: C64) -> Result<C64> {
        let d = self.xi_derivs(lat, x)?;
        let v = potential(self.l, lat, x)?;
        Ok(d[0] * d[0] * (self.energy - v) + d[0] * d[2] / 2.0 - d[1] * d[1] / 4.0)
    }

    /// Rescale all coefficients so the constant term becomes `c0`.
    pub fn rescale_c0(&mut self, c0: C64) {
        let s = c0 / self.c0;
        self.c0 = c0;
        for t in &mut self.terms {
            t.coeff *= s;
        }
        self.q *= s * s;
    }

    /// Poles of Ξ in the reduced cell: the lattice shifts −ω_i for active i.
    pub fn pole_shifts(&self) -> Vec<usize> {
        (0..4).filter(|&i| self.l[i] > 0).collect()
    }
}

pub fn build_xi_even(l: [u32; 4], energy: C64, lat: &Lattice) -> Result<SpectralData> {
    let n_unknown: u32 = l.iter().sum();
    if n_unknown == 0 {
        return Ok(SpectralData {
            l,
            energy,
            c0: C64::new(1.0, 0.0),
            terms: Vec::new(),
            q: energy,
            sqrt_q_sign: 1,
            fit_residual: 0.0,
        });
    }
    let term_index: Vec<(usize, u32)> = (0..4)
        .flat_map(|i| (1..=l[i]).rev().map(move |m| (i, m)))
        .collect();
    let npts = 24 + 4 * term_index.len();
    let pts = sample_points(lat, npts, 11);
    let mut a = vec![vec![C64::new(0.0, 0.0); term_index.len()]; npts];
    let mut b = vec![C64::new(0.0, 0.0); npts];
    for (r, &x) in pts.iter().enumerate() {
        for (c, &(i, m)) in term_index.iter().enumerate() {
            a[r][c] = sym_square_op(l, energy, lat, x, i, m)?;
        }
        b[r] = -sym_square_op(l, energy, lat, x, 0, 0)?;
    }
    let sol = lstsq(&a, &b)?;
    // residual of the fit, relative to the row scale
    let mut worst = 0.0f64;
    for r in 0..npts {
        let mut resid = -b[r];
        let mut scale = b[r].norm();
        for c in 0..term_index.len() {
            resid += a[r][c] * sol[c];
            scale = scale.max((a[r][c] * sol[c]).norm());
        }
        worst = worst.max(resid.norm() / scale.max(1e-300));
    }
    if worst > 1e-8 {
        return Err(Error::numeric(format!(
            "symmetric-square fit residual {worst:.2e} exceeds 1e-8: no product function on this basis"
        )));
    }
    let mut sd = SpectralData {
        l,
        energy,
        c0: C64::new(1.0, 0.0),
        terms: term_index
            .iter()
            .zip(sol.iter())
            .map(|(&(i, m), &coeff)| XiTerm { i, m, coeff })
            .collect(),
        q: C64::new(0.0, 0.0),
        sqrt_q_sign: 1,
        fit_residual: worst,
    };
    sd.q = compute_q(&sd, lat)?;
    Ok(sd)
}

/// Sampled mean of Q(x) and its maximum deviation across 20 generic points,
/// relative to max(|mean|, 1). Deviation beyond roundoff means Ξ does not
/// actually solve the symmetric-square equation.
pub fn q_spread(sd: &SpectralData, lat: &Lattice) -> Result<(C64, f64)> {
    let pts = sample_points(lat, 20, 23);
    let vals: Vec<C64> = pts
        .iter()
        .map(|&x| sd.q_at(lat, x))
        .collect::<Result<_>>()?;
    let mean = vals.iter().sum::<C64>() / vals.len() as f64;
    let spread = vals
        .iter()
        .map(|v| (v - mean).norm())
        .fold(0.0, f64::max);
    Ok((mean, spread / mean.norm().max(1.0)))
}

/// The sampled spectral constant, with an x-independence check across 20
/// generic points.
pub fn compute_q(sd: &SpectralData, lat: &Lattice) -> Result<C64> {
    let (mean, rel) = q_spread(sd, lat)?;
    if rel > 1e-9 {
        return Err(Error::numeric(format!(
            "spectral constant varies across x (relative spread {rel:.2e}): inconsistent product function"
        )));
    }
    Ok(mean)
}
