//! Complex-path ODE transport: a frozen Runge-Kutta pin, Floquet data
//! against the closed forms, and the structure of monodromy matrices.

mod common;

use common::oracles as o;
use common::{assert_close, assert_small, cz};
use heun_painleve::elliptic::Lattice;
use heun_painleve::monodromy::{
    det2, eigenvalues, floquet_multipliers, loop_matrix, mat_mul, monodromy_matrix,
    pair_mismatch, transport_curve, Ode2,
};
use heun_painleve::spectral::{hk_parameters_lame2, monodromy_multiplier_elliptic};
use heun_painleve::{c, cr, C64};

const RTOL: f64 = 1e-12;

#[test]
fn transport_matches_frozen_reference() {
    let lat = Lattice::from_tau(c(0.0, 1.0)).unwrap();
    let ode = Ode2::heun_elliptic([1, 0, 0, 0], cr(1.0), &lat);
    let (x0, x1) = (cz(o::RK_X0), cz(o::RK_X1));
    let end = transport_curve(
        &ode,
        |s| (x0 + (x1 - x0) * s, x1 - x0),
        [cr(1.0), cr(0.0)],
        RTOL,
    )
    .unwrap();
    assert_close(end[0], o::RK_PSI_X1, 1e-10, "psi(x1)");
    assert_close(end[1], o::RK_PSIP_X1, 1e-10, "psi'(x1)");
}

#[test]
fn monodromy_matrices_are_unimodular() {
    let lat = Lattice::from_tau(cz(o::TAU_A)).unwrap();
    let ode = Ode2::heun_elliptic([2, 0, 0, 0], cz(o::E_2000), &lat);
    let bp = c(0.37, 0.23) + 0.1 * lat.tau;
    for shift in [cr(1.0), lat.tau] {
        let m = monodromy_matrix(&ode, bp, shift, RTOL).unwrap();
        assert_small((det2(&m) - cr(1.0)).norm(), 1e-9, "det = 1");
    }
}

#[test]
fn floquet_pair_matches_the_closed_multiplier() {
    let lat = Lattice::from_tau(cz(o::TAU_A)).unwrap();
    let e = cz(o::E_2000);
    let ode = Ode2::heun_elliptic([2, 0, 0, 0], e, &lat);
    let hk = hk_parameters_lame2(e, &lat).unwrap();
    let bp = c(0.41, 0.19) + 0.12 * lat.tau;
    for k in [1usize, 3] {
        let m_closed = monodromy_multiplier_elliptic(&hk, k, &lat).unwrap();
        let (pair, _) = floquet_multipliers(&ode, bp, 2.0 * lat.om[k], RTOL).unwrap();
        let mm = pair_mismatch(pair, (m_closed, 1.0 / m_closed));
        assert_small(mm, 1e-8, &format!("floquet pair k={k}"));
    }
}

#[test]
fn shift_monodromies_commute() {
    // the two period shifts generate an abelian group on the torus; their
    // transports must commute at the same basepoint
    let lat = Lattice::from_tau(cz(o::TAU_A)).unwrap();
    let ode = Ode2::heun_elliptic([2, 0, 0, 0], cz(o::E_2000), &lat);
    let bp = c(0.37, 0.23) + 0.1 * lat.tau;
    let m1 = monodromy_matrix(&ode, bp, cr(1.0), RTOL).unwrap();
    // transport along tau starting from bp + 1 to compose paths head to tail
    let m3_shifted = monodromy_matrix(&ode, bp + 1.0, lat.tau, RTOL).unwrap();
    let m3 = monodromy_matrix(&ode, bp, lat.tau, RTOL).unwrap();
    let m1_shifted = monodromy_matrix(&ode, bp + lat.tau, cr(1.0), RTOL).unwrap();
    let a = mat_mul(&m3_shifted, &m1);
    let b = mat_mul(&m1_shifted, &m3);
    let scale = a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    let diff = a
        .iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    assert_small(diff / scale, 1e-8, "commutator");
}

#[test]
fn loops_around_regular_points_are_trivial() {
    let lat = Lattice::from_tau(cz(o::TAU_A)).unwrap();
    let ode = Ode2::heun_elliptic([2, 0, 0, 0], cz(o::E_2000), &lat);
    let m = loop_matrix(&ode, c(0.4, 0.3), 0.15, RTOL).unwrap();
    let eye = [[cr(1.0), cr(0.0)], [cr(0.0), cr(1.0)]];
    let diff = m
        .iter()
        .flatten()
        .zip(eye.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    assert_small(diff, 1e-9, "identity loop");
}

#[test]
fn eigenvalue_pairs_respect_the_determinant() {
    let m = [[c(1.2, 0.3), c(0.4, -0.1)], [c(-0.2, 0.5), c(0.8, -0.3)]];
    let (l1, l2) = eigenvalues(&m);
    let det = det2(&m);
    assert_small((l1 * l2 - det).norm(), 1e-12, "product is det");
    assert_small(
        (l1 + l2 - m[0][0] - m[1][1]).norm(),
        1e-12,
        "sum is trace",
    );
}

#[test]
fn residual_probe_accepts_exact_solutions_and_flags_wrong_ones() {
    // Phi_0(x, a) with E = -wp(a) solves the one-gap operator V = 2 wp exactly
    let lat = Lattice::from_tau(cz(o::TAU_A)).unwrap();
    let a = c(0.31, 0.27);
    let energy = -lat.wp(a).unwrap().v;
    let ode = Ode2::heun_elliptic([1, 0, 0, 0], energy, &lat);
    let x = c(0.4, 0.2);
    let exact = ode.residual_of(|z| Ok(lat.phi(0, z, a)?.v), x).unwrap();
    assert_small(exact, 1e-7, "exact solution residual");
    let off = ode
        .residual_of(|z| Ok(lat.phi(0, z, a)?.v * (1.0 + 0.02 * (z - x))), x)
        .unwrap();
    assert!(off > 1e-4, "drifted candidate passed: {off:.3e}");
}

#[test]
fn deformed_rational_operator_has_an_apparent_singularity() {
    let lat = Lattice::from_tau(cz(o::TAU_G)).unwrap();
    let fam = heun_painleve::painleve::Family::Hitchin { c1: cz(o::C1_F), c3: cz(o::C3_F) };
    let b1 = fam.b1(&lat).unwrap();
    let mu1 = fam.mu1(&lat).unwrap().unwrap();
    let l = fam.weights();
    let frame = heun_painleve::painleve::frame_map(l, b1, Some(mu1), &lat, None).unwrap();
    let kap = heun_painleve::painleve::kappas_of_l(l);
    let ode = Ode2::rational_deformed(
        kap,
        frame.t,
        frame.lambda,
        frame.mu.unwrap(),
        frame.h_vi.unwrap(),
    );
    let rad = 0.3
        * frame
            .lambda
            .norm()
            .min((frame.lambda - 1.0).norm())
            .min((frame.lambda - frame.t).norm());
    let m = loop_matrix(&ode, frame.lambda, rad, RTOL).unwrap();
    let eye = [[cr(1.0), cr(0.0)], [cr(0.0), cr(1.0)]];
    let diff = m
        .iter()
        .flatten()
        .zip(eye.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    assert_small(diff, 1e-7, "apparent singularity loop");
    // a loop around the genuine singular point w = t is not trivial
    let rad_t = 0.3
        * frame
            .t
            .norm()
            .min((frame.t - 1.0).norm())
            .min((frame.t - frame.lambda).norm());
    let m_t = loop_matrix(&ode, frame.t, rad_t, RTOL).unwrap();
    let diff_t = m_t
        .iter()
        .flatten()
        .zip(eye.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    assert!(diff_t > 1e-2, "loop at w=t looks trivial: {diff_t:.3e}");
}
