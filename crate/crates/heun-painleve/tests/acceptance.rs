//! The acceptance gate. Every promise the laboratory makes, run at its
//! stated tolerance and time budget, one verdict line per criterion. A
//! criterion that cannot be met fails loudly here; nothing downgrades to a
//! warning.

mod common;

use common::oracles as o;
use common::{cz, random_tau, sample_energy, seg_dist, sign_paired_dist};
use heun_painleve::config::{RunConfig, Suite};
use heun_painleve::elliptic::Lattice;
use heun_painleve::modular::{finite_difference_oracle, modular_derivative, ModularTag};
use heun_painleve::monodromy::{floquet_multipliers, loop_matrix, pair_mismatch, Ode2};
use heun_painleve::painleve::{
    apparency_p, frame_hamiltonian, frame_map, frobenius_apparency_check, hk_forward_l0000,
    hk_forward_l1000, hk_inversion_l0000, hk_inversion_l1000, kappas_of_l, p6_residual,
    DeformedOperator, Family, ResidualMode,
};
use heun_painleve::spectral::{
    hk_parameters_lame2, monodromy_multiplier_elliptic, monodromy_multiplier_hyperelliptic,
    q_lame2_closed, q_spread, verify_reduction_identities, xi_lame2,
};
use heun_painleve::suites::run_suite;
use heun_painleve::{c, cr, i_pi, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

const STENCIL_H: f64 = 2.5e-3;

struct Gate {
    lines: Vec<String>,
    failures: usize,
}

impl Gate {
    fn new() -> Self {
        Gate { lines: Vec::new(), failures: 0 }
    }

    fn criterion<F>(&mut self, idx: usize, name: &str, budget_s: f64, f: F)
    where
        F: FnOnce() -> Result<String, String>,
    {
        let t0 = Instant::now();
        let outcome = f();
        let dt = t0.elapsed().as_secs_f64();
        let timely = dt <= budget_s;
        let (ok, detail) = match outcome {
            Ok(d) => (timely, if timely { d } else { format!("{d}; over budget") }),
            Err(d) => (false, d),
        };
        let verdict = if ok { "PASS" } else { "FAIL" };
        let line = format!(
            "criterion {idx:02} {name:<26} {verdict}  {detail}  [{dt:.2}s / {budget_s:.0}s]"
        );
        println!("{line}");
        if !ok {
            self.failures += 1;
        }
        self.lines.push(line);
    }
}

fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Random torus point comfortably inside the fundamental cell.
fn torus_point(rng: &mut ChaCha8Rng, lat: &Lattice) -> C64 {
    loop {
        let z = cr(rng.gen_range(0.04..0.96)) + rng.gen_range(0.04..0.96) * lat.tau;
        if lat.dist_to_lattice(z) > 0.08 {
            return z;
        }
    }
}

fn elliptic_identities() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let (mut w_curve, mut w_period, mut w_zeta, mut w_leg) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for _ in 0..5 {
        let tau = random_tau(&mut rng);
        let lat = Lattice::from_tau(tau).map_err(|e| e.to_string())?;
        let leg = (lat.eta1 * lat.om[3] - lat.eta3 * lat.om[1] - i_pi() / 2.0).norm();
        w_leg = w_leg.max(leg);
        for _ in 0..100 {
            let z = torus_point(&mut rng, &lat);
            let p = lat.wp(z).map_err(|e| e.to_string())?.v;
            let pp = lat.wp_prime(z).map_err(|e| e.to_string())?.v;
            let rhs = 4.0 * p * p * p - lat.g2 * p - lat.g3;
            let scale = (4.0 * p * p * p).norm().max((lat.g2 * p).norm()).max(lat.g3.norm()).max(1.0);
            w_curve = w_curve.max((pp * pp - rhs).norm() / scale);
            for k in [1usize, 3] {
                let shift = 2.0 * lat.om[k];
                let p2 = lat.wp(z + shift).map_err(|e| e.to_string())?.v;
                w_period = w_period.max((p2 - p).norm() / p.norm().max(1.0));
                let z1 = lat.zeta(z).map_err(|e| e.to_string())?.v;
                let z2 = lat.zeta(z + shift).map_err(|e| e.to_string())?.v;
                let eta = if k == 1 { lat.eta1 } else { lat.eta3 };
                w_zeta = w_zeta.max((z2 - z1 - 2.0 * eta).norm() / z1.norm().max(1.0));
            }
        }
    }
    let detail = format!(
        "curve {w_curve:.1e}<=1e-10 period {w_period:.1e}<=1e-10 zeta {w_zeta:.1e}<=1e-10 legendre {w_leg:.1e}<=1e-12"
    );
    if w_curve <= 1e-10 && w_period <= 1e-10 && w_zeta <= 1e-10 && w_leg <= 1e-12 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn two_gap_spectral_data() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let lat = Lattice::from_tau(cz(o::TAU_A)).map_err(|e| e.to_string())?;
    let (mut w_const, mut w_closed) = (0.0f64, 0.0f64);
    for _ in 0..10 {
        let e = sample_energy(&mut rng, &lat, false);
        let sd = xi_lame2(e, &lat);
        // the pointwise route Q = Xi^2(E-V) + Xi Xi''/2 - Xi'^2/4 against the
        // factored closed form; sd.q itself is the closed form, so the mean
        // of the pointwise values is the independent side
        let (q_pointwise, spread) = q_spread(&sd, &lat).map_err(|e| e.to_string())?;
        w_const = w_const.max(spread);
        w_closed = w_closed.max(rel(q_pointwise, q_lame2_closed(e, &lat)));
    }
    let detail = format!("x-const {w_const:.1e}<=1e-9 closed-form {w_closed:.1e}<=1e-9");
    if w_const <= 1e-9 && w_closed <= 1e-9 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn multiplier_crosscheck() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let mut worst = 0.0f64;
    let mut n = 0;
    for (tau, count) in [(cz(o::TAU_A), 3usize), (cz(o::TAU_G), 2usize)] {
        let lat = Lattice::from_tau(tau).map_err(|e| e.to_string())?;
        for _ in 0..count {
            let e = sample_energy(&mut rng, &lat, true);
            let hk = hk_parameters_lame2(e, &lat).map_err(|e| e.to_string())?;
            for k in [1usize, 3] {
                let m_ell = monodromy_multiplier_elliptic(&hk, k, &lat).map_err(|e| e.to_string())?;
                let m_hyp = monodromy_multiplier_hyperelliptic(e, k, 1, &lat, 1e-9)
                    .map_err(|e| e.to_string())?;
                worst = worst.max(pair_mismatch((m_ell, 1.0 / m_ell), (m_hyp, 1.0 / m_hyp)));
            }
            n += 1;
        }
    }
    let detail = format!("{n} energies, pair mismatch {worst:.1e}<=1e-6");
    if worst <= 1e-6 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn reduction_identities() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    let lat = Lattice::from_tau(cz(o::TAU_G)).map_err(|e| e.to_string())?;
    let (mut w_log, mut w_kappa) = (0.0f64, 0.0f64);
    let mut done = 0;
    let mut tries = 0;
    while done < 5 {
        tries += 1;
        if tries > 25 {
            return Err(format!("only {done} admissible energies in {tries} draws"));
        }
        let e = sample_energy(&mut rng, &lat, true);
        let rep = match verify_reduction_identities(e, &lat, 1e-10) {
            Ok(r) => r,
            Err(_) => continue, // chord heuristic can still lose; redraw
        };
        w_log = w_log.max(rep.log_mismatch);
        for ki in &rep.kappa {
            w_kappa = w_kappa.max(ki.two_leg_mismatch).max(ki.matched_mismatch);
        }
        done += 1;
    }
    let detail = format!("log {w_log:.1e}<=1e-6 kappa(i=1,2,3) {w_kappa:.1e}<=1e-6");
    if w_log <= 1e-6 && w_kappa <= 1e-6 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn modular_calculus() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    let tags = [
        ModularTag::T,
        ModularTag::E(1),
        ModularTag::E(2),
        ModularTag::E(3),
        ModularTag::Eta1,
        ModularTag::PowE2MinusE1(cr(0.5)),
    ];
    let mut w_rel = 0.0f64;
    let mut orders: Vec<f64> = Vec::new();
    for j in 0..10 {
        let tau = random_tau(&mut rng);
        let lat = Lattice::from_tau(tau).map_err(|e| e.to_string())?;
        let h = 1e-4 * tau.norm().max(1.0);
        for tag in tags {
            let closed = modular_derivative(tag, &lat).dtau;
            let fd = finite_difference_oracle(tag, tau, h).map_err(|e| e.to_string())?;
            w_rel = w_rel.max((closed - fd.value).norm() / fd.value.norm().max(1.0));
        }
        // order probe at coarse h, where truncation still dominates round-off
        if j < 3 {
            for tag in [ModularTag::T, ModularTag::Eta1] {
                let fd = finite_difference_oracle(tag, tau, 2e-2).map_err(|e| e.to_string())?;
                orders.push(fd.order);
            }
        }
    }
    let (omin, omax) = orders
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)));
    let detail = format!("rel {w_rel:.1e}<=1e-6 order [{omin:.2},{omax:.2}] in [3.5,4.5]");
    if w_rel <= 1e-6 && omin >= 3.5 && omax <= 4.5 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// One family over a vertical tau-grid: worst elliptic and rational
/// residuals. `Err` when a grid point degenerates (caller redraws).
fn family_residuals(
    fam: &Family,
    tau0: C64,
    span: C64,
    count: usize,
    rational: bool,
) -> Result<(f64, f64), String> {
    let (mut w_ell, mut w_rat) = (0.0f64, 0.0f64);
    for k in 0..count {
        let tau = tau0 + span * (k as f64 / (count - 1) as f64);
        // reject draws whose trajectory passes too close to the frame's
        // singular values, where no tolerance is meaningful
        let lat = Lattice::from_tau(tau).map_err(|e| e.to_string())?;
        let b1 = fam.b1(&lat).map_err(|e| e.to_string())?;
        let de = lat.e[1] - lat.e[0];
        let lam = (b1 - lat.e[0]) / de;
        let t = lat.t();
        let clear = lam.norm().min((lam - 1.0).norm()).min((lam - t).norm());
        if !clear.is_finite() || clear < 2e-2 || lam.norm() > 50.0 {
            return Err(format!("grid point {k} degenerates (lambda {lam})"));
        }
        let r = p6_residual(fam, tau, ResidualMode::Elliptic, STENCIL_H).map_err(|e| e.to_string())?;
        w_ell = w_ell.max(r.residual);
        if rational {
            let r = p6_residual(fam, tau, ResidualMode::Rational, STENCIL_H).map_err(|e| e.to_string())?;
            w_rat = w_rat.max(r.residual);
        }
    }
    Ok((w_ell, w_rat))
}

fn random_exponent_pair(rng: &mut ChaCha8Rng) -> (C64, C64) {
    (
        C64::new(rng.gen_range(0.15..0.55), rng.gen_range(-0.3..0.3)),
        C64::new(rng.gen_range(0.15..0.55), rng.gen_range(-0.3..0.3)),
    )
}

fn two_parameter_family(kind: &str) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(match kind {
        "hitchin" => 1006,
        _ => 1007,
    });
    let (mut w_ell, mut w_rat) = (0.0f64, 0.0f64);
    let mut done = 0;
    let mut tries = 0;
    while done < 5 {
        tries += 1;
        if tries > 40 {
            return Err(format!("only {done} usable parameter draws in {tries} tries"));
        }
        let (c1, c3) = random_exponent_pair(&mut rng);
        let fam = match kind {
            "hitchin" => Family::Hitchin { c1, c3 },
            _ => Family::ExplicitL1 { c1, c3 },
        };
        match family_residuals(&fam, c(0.3, 1.05), c(0.0, 0.5), 50, true) {
            Ok((ell, rat)) => {
                w_ell = w_ell.max(ell);
                w_rat = w_rat.max(rat);
                done += 1;
            }
            Err(_) => continue, // trajectory crossed a pole; redraw parameters
        }
    }
    let detail =
        format!("5 draws x 50 pts, elliptic {w_ell:.1e}<=1e-6 rational {w_rat:.1e}<=1e-5");
    if w_ell <= 1e-6 && w_rat <= 1e-5 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn degenerate_families() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    let mut worst = 0.0f64;
    let mut used = 0;
    for idx in 0..8usize {
        let mut tries = 0;
        loop {
            tries += 1;
            if tries > 25 {
                return Err(format!("family #{idx}: no usable draw in {tries} tries"));
            }
            let (d1, d3) = random_exponent_pair(&mut rng);
            let fam = match idx {
                0 => Family::DegenerateMu0 { d1, d3 },
                1 | 2 | 3 => Family::DegenerateMui { i: idx, d1, d3 },
                4 => Family::DegenerateL1Cubic { d1, d3 },
                _ => Family::DegenerateL1Ei { i: idx - 4, d1, d3 },
            };
            match family_residuals(&fam, c(0.3, 1.05), c(0.0, 0.5), 30, false) {
                Ok((ell, _)) => {
                    worst = worst.max(ell);
                    used += 1;
                    break;
                }
                Err(_) => continue,
            }
        }
    }
    let detail = format!("{used} families x 30 pts, elliptic {worst:.1e}<=1e-6");
    if worst <= 1e-6 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn apparency() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    let (mut w_ob, mut min_pert, mut w_loop) = (0.0f64, f64::INFINITY, 0.0f64);
    for _ in 0..3 {
        let tau = random_tau(&mut rng);
        let lat = Lattice::from_tau(tau).map_err(|e| e.to_string())?;
        for l in [[0u32, 0, 0, 0], [1, 0, 0, 0]] {
            let mut loop_done = false;
            for _ in 0..3 {
                let b1 = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let mu1 = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(0.3..1.0));
                let p = apparency_p(l, b1, mu1, &lat).map_err(|e| e.to_string())?;
                let frame = frame_map(l, b1, Some(mu1), &lat, None).map_err(|e| e.to_string())?;
                let h = frame_hamiltonian(l, b1, mu1, &lat).map_err(|e| e.to_string())?;
                let kap = kappas_of_l(l);
                let (t, lam, mu) = (frame.t, frame.lambda, frame.mu.unwrap());
                w_ob = w_ob.max(frobenius_apparency_check(kap, t, lam, mu, h).norm());
                // a ten percent error in p shifts H by 0.1 p / (4(e2-e1)t(1-t))
                let h_bad = h + 0.1 * p / (4.0 * (lat.e[1] - lat.e[0]) * t * (1.0 - t));
                min_pert =
                    min_pert.min(frobenius_apparency_check(kap, t, lam, mu, h_bad).norm());
                if !loop_done {
                    let clear = lam.norm().min((lam - 1.0).norm()).min((lam - t).norm());
                    if clear > 0.05 {
                        let ode = Ode2::rational_deformed(kap, t, lam, mu, h);
                        let m = loop_matrix(&ode, lam, 0.3 * clear, 1e-12)
                            .map_err(|e| e.to_string())?;
                        let eye = [[cr(1.0), cr(0.0)], [cr(0.0), cr(1.0)]];
                        let d = m
                            .iter()
                            .flatten()
                            .zip(eye.iter().flatten())
                            .map(|(x, y)| (x - y).norm())
                            .fold(0.0, f64::max);
                        w_loop = w_loop.max(d);
                        loop_done = true;
                    }
                }
            }
            if !loop_done {
                return Err("no loop-safe draw for one pattern".into());
            }
        }
    }
    let detail = format!(
        "obstruction {w_ob:.1e}<=1e-10 perturbed {min_pert:.1e}>1e-3 loop {w_loop:.1e}<=1e-7"
    );
    if w_ob <= 1e-10 && min_pert > 1e-3 && w_loop <= 1e-7 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn monodromy_preservation() -> Result<String, String> {
    let fam = Family::Hitchin { c1: cz(o::C1_F), c3: cz(o::C3_F) };
    let tau0 = c(0.25, 1.05);
    let span = c(0.0, 0.4);
    let n = 20usize;
    let mut constants: Vec<[C64; 2]> = Vec::with_capacity(n);
    let mut lattices: Vec<Lattice> = Vec::with_capacity(n);
    for k in 0..n {
        let tau = tau0 + span * (k as f64 / (n - 1) as f64);
        let lat = Lattice::from_tau(tau).map_err(|e| e.to_string())?;
        let (alpha, kappa) = fam
            .hk_pair(&lat)
            .map_err(|e| e.to_string())?
            .ok_or("family carries no exponent pair")?;
        let za = lat.zeta(alpha).map_err(|e| e.to_string())?.v;
        let eta = lat.eta();
        let mut cks = [C64::new(0.0, 0.0); 2];
        for (slot, k_dir) in [1usize, 3].iter().enumerate() {
            cks[slot] = -2.0 * eta[*k_dir] * alpha + 2.0 * lat.om[*k_dir] * za
                + 2.0 * kappa * lat.om[*k_dir];
        }
        constants.push(cks);
        lattices.push(lat);
    }
    let drift = constants
        .iter()
        .map(|cks| {
            (cks[0] - constants[0][0])
                .norm()
                .max((cks[1] - constants[0][1]).norm())
        })
        .fold(0.0, f64::max);

    // integrated multipliers at three grid points
    let mut w_pair = 0.0f64;
    for &k in &[0usize, n / 2, n - 1] {
        let lat = &lattices[k];
        let b1 = fam.b1(lat).map_err(|e| e.to_string())?;
        let mu1 = fam
            .mu1(lat)
            .map_err(|e| e.to_string())?
            .ok_or("family fixes no mu1")?;
        let op = DeformedOperator::new(fam.weights(), b1, mu1, lat).map_err(|e| e.to_string())?;
        let alpha_b1 = lat.elliptic_log(b1, None).map_err(|e| e.to_string())?;
        let ode = Ode2::hgp6_elliptic(fam.weights(), b1, op.tilde_s1, op.tilde_e, alpha_b1, lat);
        let (alpha, kappa) = fam.hk_pair(lat).map_err(|e| e.to_string())?.unwrap();
        for (slot, k_dir) in [1usize, 3].iter().enumerate() {
            let m_closed = constants[k][slot].exp();
            let _ = (alpha, kappa);
            let mut best: Option<f64> = None;
            for (a, b) in [(0.23, 0.17), (0.41, 0.31), (0.13, 0.37), (0.33, 0.11), (0.47, 0.23)] {
                let bp = cr(a) + b * lat.tau;
                match floquet_multipliers(&ode, bp, 2.0 * lat.om[*k_dir], 1e-12) {
                    Ok((pair, _)) => {
                        best = Some(pair_mismatch(pair, (m_closed, 1.0 / m_closed)));
                        break;
                    }
                    Err(_) => continue, // basepoint too close to a singular translate
                }
            }
            match best {
                Some(mm) => w_pair = w_pair.max(mm),
                None => return Err("no admissible basepoint for the transport".into()),
            }
        }
    }
    let detail = format!("drift {drift:.1e}<=1e-8 multipliers {w_pair:.1e}<=1e-6");
    if drift <= 1e-8 && w_pair <= 1e-6 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn hk_family_consistency() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(1011);
    let lat = Lattice::from_tau(cz(o::TAU_G)).map_err(|e| e.to_string())?;
    let mut w_round = 0.0f64;
    let mut done = 0;
    while done < 6 {
        let b1 = C64::new(rng.gen_range(-1.2..1.2), rng.gen_range(-1.2..1.2));
        let mu1 = C64::new(rng.gen_range(-1.2..1.2), rng.gen_range(0.25..1.2));
        let Ok(f0) = hk_forward_l0000(b1, mu1, &lat) else { continue };
        let Ok((b1r, mu1r)) = hk_inversion_l0000(f0.alpha, f0.kappa, &lat) else { continue };
        let scale = b1.norm().max(mu1.norm()).max(1.0);
        w_round = w_round.max((b1r - b1).norm() / scale).max((mu1r - mu1).norm() / scale);
        let Ok(f1) = hk_forward_l1000(b1, mu1, &lat) else { continue };
        let Ok((b1s, mu1s)) = hk_inversion_l1000(f1.alpha, f1.kappa, &lat) else { continue };
        w_round = w_round.max((b1s - b1).norm() / scale).max((mu1s - mu1).norm() / scale);
        done += 1;
    }
    // the closed family value against the inversion route
    let mut w_fam = 0.0f64;
    for _ in 0..3 {
        let (c1, c3) = random_exponent_pair(&mut rng);
        let fam = Family::Hitchin { c1, c3 };
        let Ok(b1) = fam.b1(&lat) else { continue };
        let mu1 = fam.mu1(&lat).map_err(|e| e.to_string())?.unwrap();
        let (alpha, kappa) = fam.hk_pair(&lat).map_err(|e| e.to_string())?.unwrap();
        let (b1i, mu1i) = hk_inversion_l0000(alpha, kappa, &lat).map_err(|e| e.to_string())?;
        let scale = b1.norm().max(1.0);
        w_fam = w_fam.max((b1i - b1).norm() / scale);
        w_fam = w_fam.max(sign_paired_dist(mu1i, mu1) / mu1.norm().max(1.0));
    }
    let detail = format!("round trips {w_round:.1e}<=1e-10 family-vs-map {w_fam:.1e}<=1e-9");
    if w_round <= 1e-10 && w_fam <= 1e-9 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn determinism() -> Result<String, String> {
    use heun_painleve::config::OutputFormat;
    let mut suites_checked = 0;
    for suite in [Suite::Lame, Suite::Reduction, Suite::P6, Suite::Modular, Suite::Monodromy, Suite::All] {
        let mut cfg = RunConfig::default();
        cfg.suite = suite;
        cfg.seed = 20260817;
        let a = run_suite(&cfg).map_err(|e| e.to_string())?.render(OutputFormat::Json);
        let b = run_suite(&cfg).map_err(|e| e.to_string())?.render(OutputFormat::Json);
        if a != b {
            return Err(format!("suite {suite:?} report differs between identical runs"));
        }
        suites_checked += 1;
    }
    Ok(format!("{suites_checked} suites byte-identical on rerun"))
}

#[test]
fn acceptance() {
    let mut gate = Gate::new();
    gate.criterion(1, "elliptic_identities", 5.0, elliptic_identities);
    gate.criterion(2, "two_gap_spectral_data", 10.0, two_gap_spectral_data);
    gate.criterion(3, "multiplier_crosscheck", 60.0, multiplier_crosscheck);
    gate.criterion(4, "reduction_identities", 60.0, reduction_identities);
    gate.criterion(5, "modular_calculus", 10.0, modular_calculus);
    gate.criterion(6, "hitchin_family", 120.0, || two_parameter_family("hitchin"));
    gate.criterion(7, "single_weight_family", 120.0, || two_parameter_family("l1"));
    gate.criterion(8, "degenerate_families", 60.0, degenerate_families);
    gate.criterion(9, "apparency", 30.0, apparency);
    gate.criterion(10, "monodromy_preservation", 120.0, monodromy_preservation);
    gate.criterion(11, "hk_family_consistency", 10.0, hk_family_consistency);
    gate.criterion(12, "determinism", 60.0, determinism);
    assert_eq!(
        gate.failures,
        0,
        "{} of 12 criteria failed:\n{}",
        gate.failures,
        gate.lines.join("\n")
    );
}

// keep the helper import tree honest: seg_dist backs the samplers used above
#[allow(dead_code)]
fn _touch(a: C64, b: C64, p: C64) -> f64 {
    seg_dist(a, b, p)
}
