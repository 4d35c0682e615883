//! Second-order linear ODEs in the form y'' = q1(z) y' + q0(z) y, with enough
//! singularity bookkeeping to plan transport paths and finite-difference
//! stencils around them.

use crate::elliptic::Lattice;
use crate::error::Result;
use crate::spectral::potential;
use crate::C64;

pub struct Ode2<'a> {
    /// (q1, q0) at z, in the convention y'' = q1 y' + q0 y
    pub coeff: Box<dyn Fn(C64) -> Result<(C64, C64)> + 'a>,
    /// singular points inside the bounding box of a..b (with margin)
    pub sing_in: Box<dyn Fn(C64, C64) -> Vec<C64> + 'a>,
}

impl<'a> Ode2<'a> {
    /// The same operator with the zeroth-order coefficient scaled. This is
    /// the knob sensitivity checks turn: for an exact solution of the
    /// unperturbed equation the relative defect becomes |factor − 1|.
    pub fn with_scaled_q0(self, factor: f64) -> Ode2<'a> {
        let coeff = self.coeff;
        Ode2 {
            coeff: Box::new(move |x| coeff(x).map(|(q1, q0)| (q1, q0 * factor))),
            sing_in: self.sing_in,
        }
    }

    /// ψ'' = (V − E)ψ with V = Σ l_i(l_i+1)℘(x+ω_i).
    pub fn heun_elliptic(l: [u32; 4], energy: C64, lat: &'a Lattice) -> Ode2<'a> {
        let reps: Vec<C64> = (0..4).filter(|&i| l[i] > 0).map(|i| -lat.om[i]).collect();
        Ode2 {
            coeff: Box::new(move |x| {
                Ok((C64::new(0.0, 0.0), potential(l, lat, x)? - energy))
            }),
            sing_in: Box::new(move |a, b| lat.translates_near(&reps, a, b, 0.5)),
        }
    }

    /// The transformed operator with one extra apparent singularity:
    /// f'' = ℘'/(℘−b₁) f' + (s̃₁/(℘−b₁) + V − Ẽ) f.
    ///
    /// `alpha_b1` is a point with ℘(alpha_b1) = b₁ (the transport planner
    /// routes around ±alpha_b1 and the lattice as well as the poles of V).
    pub fn hgp6_elliptic(
        l: [u32; 4],
        b1: C64,
        tilde_s1: C64,
        tilde_e: C64,
        alpha_b1: C64,
        lat: &'a Lattice,
    ) -> Ode2<'a> {
        let mut reps: Vec<C64> = (0..4).filter(|&i| l[i] > 0).map(|i| -lat.om[i]).collect();
        // zeros of ℘ − b₁ (apparent singular points of the flat form)
        reps.push(alpha_b1);
        reps.push(-alpha_b1);
        // ℘(x) itself appears in the coefficients, so the lattice is singular
        // for the ODE even when l₀ = 0
        if !reps.contains(&C64::new(0.0, 0.0)) {
            reps.push(C64::new(0.0, 0.0));
        }
        Ode2 {
            coeff: Box::new(move |x| {
                let p = lat.wp(x)?.v;
                let pp = lat.wp_prime(x)?.v;
                let q1 = pp / (p - b1);
                let q0 = tilde_s1 / (p - b1) + potential(l, lat, x)? - tilde_e;
                Ok((q1, q0))
            }),
            sing_in: Box::new(move |a, b| lat.translates_near(&reps, a, b, 0.5)),
        }
    }

    /// The rational form on the w-sphere, y'' + p₁ y' + p₂ y = 0 with
    /// p₁ = (1−κ₀)/w + (1−κ₁)/(w−1) + (1−κ_t)/(w−t) − 1/(w−λ),
    /// p₂ = κ/(w(w−1)) − t(t−1)H/(w(w−1)(w−t)) + λ(λ−1)μ/(w(w−1)(w−λ)),
    /// κ = ((κ₀+κ₁+κ_t−1)² − κ∞²)/4.
    pub fn rational_deformed(
        kappas: [C64; 4], // κ₀, κ₁, κ_t, κ∞
        t: C64,
        lambda: C64,
        mu: C64,
        hamiltonian: C64,
    ) -> Ode2<'static> {
        let [k0, k1, kt, kinf] = kappas;
        let s = k0 + k1 + kt - 1.0;
        let kap = (s * s - kinf * kinf) / 4.0;
        let sings = vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0), t, lambda];
        Ode2 {
            coeff: Box::new(move |w| {
                let p1 = (1.0 - k0) / w + (1.0 - k1) / (w - 1.0) + (1.0 - kt) / (w - t)
                    - (w - lambda).inv();
                let p2 = kap / (w * (w - 1.0))
                    - t * (t - 1.0) * hamiltonian / (w * (w - 1.0) * (w - t))
                    + lambda * (lambda - 1.0) * mu / (w * (w - 1.0) * (w - lambda));
                Ok((-p1, -p2))
            }),
            sing_in: Box::new(move |a, b| {
                let re_lo = a.re.min(b.re) - 0.5;
                let re_hi = a.re.max(b.re) + 0.5;
                let im_lo = a.im.min(b.im) - 0.5;
                let im_hi = a.im.max(b.im) + 0.5;
                sings
                    .iter()
                    .copied()
                    .filter(|p| p.re >= re_lo && p.re <= re_hi && p.im >= im_lo && p.im <= im_hi)
                    .collect()
            }),
        }
    }

    /// The defect |f'' − q1 f' − q0 f| / scale at x, with f'' and f' taken by
    /// five-point finite differences. The stencil width adapts to the nearest
    /// singularity: h = min(1e−3, 0.1 · dist).
    pub fn residual_of<F>(&self, f: F, x: C64) -> Result<f64>
    where
        F: Fn(C64) -> Result<C64>,
    {
        let box_margin = C64::new(0.6, 0.6);
        let sings = (self.sing_in)(x - box_margin, x + box_margin);
        let dist = sings
            .iter()
            .map(|s| (x - s).norm())
            .fold(f64::INFINITY, f64::min);
        let h = (0.1 * dist).min(1e-3);
        if !(h > 0.0) {
            return Err(crate::error::Error::domain(
                "residual stencil centered on a singular point",
            ));
        }
        let fm2 = f(x - 2.0 * h)?;
        let fm1 = f(x - h)?;
        let f0 = f(x)?;
        let fp1 = f(x + h)?;
        let fp2 = f(x + 2.0 * h)?;
        let d1 = (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
        let d2 = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
        let (q1, q0) = (self.coeff)(x)?;
        let lhs = d2 - q1 * d1 - q0 * f0;
        let scale = d2
            .norm()
            .max((q1 * d1).norm())
            .max((q0 * f0).norm())
            .max(1e-300);
        Ok(lhs.norm() / scale)
    }
}
