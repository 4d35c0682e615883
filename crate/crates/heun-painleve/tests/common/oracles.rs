// Frozen reference values, generated with an independent 40-digit
// implementation (mpmath). Do not edit by hand; regenerate if the
// library's lattice conventions change.
#![allow(dead_code, clippy::excessive_precision)]

// ---- base points ----
pub const TAU_A: (f64, f64) = (0.3, 1.1);
pub const TAU_B: (f64, f64) = (0.0, 1.2);
pub const TAU_C: (f64, f64) = (0.0, 1.3);
pub const TAU_G: (f64, f64) = (0.25, 1.05);

// ---- theta: theta1 derivatives at v=0.37+0.21i, tau=TAU_A; null thetas at TAU_B ----
pub const TH1_D0: (f64, f64) = (0.26485228839476616, 0.2337683110001304);
pub const TH1_D1: (f64, f64) = (0.7956133916672619, 0.12288640324696946);
pub const TH1_D2: (f64, f64) = (-0.27035471279580164, -0.22863450396196108);
pub const TH1_D3: (f64, f64) = (-0.7909045209304458, -0.1073330838039498);
pub const TH2_0_B: (f64, f64) = (0.779736478440136, 0.0);
pub const TH3_0_B: (f64, f64) = (1.0461087864937586, 0.0);
pub const TH4_0_B: (f64, f64) = (0.9538923434413239, 0.0);

// ---- lattice data at TAU_A, tau=i, tau=2i ----
pub const E1_A: (f64, f64) = (6.530994544098317, 0.14953040942656554);
pub const E2_A: (f64, f64) = (-1.8100882229706432, 1.9444878785847728);
pub const E3_A: (f64, f64) = (-4.720906321127674, -2.0940182880113385);
pub const G2_A: (f64, f64) = (120.05792111801982, 29.37020740734359);
pub const G3_A: (f64, f64) = (332.8310509248966, -133.24570489453836);
pub const ETA1_A: (f64, f64) = (1.6571828979154102, -0.037336539552961116);
pub const ETA3_A: (f64, f64) = (0.5382250628828803, -1.3298924277487305);
pub const T_A: (f64, f64) = (1.2339488004653498, 0.5345150549271769);
pub const E1_I: (f64, f64) = (6.875185818020372, 0.0);
pub const G2_I: (f64, f64) = (189.07272012923386, 1.1931584348686961e-92);
pub const ETA1_I: (f64, f64) = (1.5707963267948966, 0.0); // equals pi/2
pub const T_2I: (f64, f64) = (1.0303300858899107, 1.8842822064066406e-84);

// ---- point values at TAU_A, z0=0.31+0.17i and z0 shifted by 3+2tau ----
pub const Z0: (f64, f64) = (0.31, 0.17);
pub const SIGMA_Z0: (f64, f64) = (0.31291965274315764, 0.1689135195968114);
pub const ZETA_Z0: (f64, f64) = (2.5041095656270755, -1.4605277006187218);
pub const WP_Z0: (f64, f64) = (4.511419083928856, -5.826986101349015);
pub const WPP_Z0: (f64, f64) = (0.6832865276491908, 50.16914892554583);
pub const SIGMA_Z0_SHIFTED: (f64, f64) = (25872512620434.22, 41966399718450.484); // z0 + 3 + 2 tau
pub const ZETA_Z0_SHIFTED: (f64, f64) = (14.600107204651056, -7.004116648931411);

// ---- phi building blocks at TAU_B, x=0.41+0.13i, alpha=0.1+0.2i ----
pub const PHI_X: (f64, f64) = (0.41, 0.13);
pub const PHI_ALPHA: (f64, f64) = (0.1, 0.2);
pub const PHI0: (f64, f64) = (-0.8611221237327904, -2.7240250506864);
pub const PHI0_DX: (f64, f64) = (-8.958260274227904, -5.944480967070641);
pub const PHI0_D2X: (f64, f64) = (-52.645961654771654, 19.94312843966451);
pub const PHI2: (f64, f64) = (1.085463876731673, -5.302958697550665);

// ---- tau_from_t targets (verified round trip below) ----
pub const TAU_FROM_T_T: [(f64, f64); 5] = [(1.5, 0.0), (0.5, 0.0), (3.0, 0.0), (0.3, 0.4), (-2.0, 1.0)];
pub const TAU_FROM_T_TAU: [(f64, f64); 5] = [(0.0, 1.170159377303134), (-1.0, 1.0), (0.0, 0.8545844432787435), (0.7064677297630747, 0.8353186144356637), (0.39893069260101915, 0.5440707641539014)];

// ---- agm with the |a-b|<=|a+b| branch rule ----
pub const AGM_ARG: (f64, f64) = (0.3, 0.1);
pub const AGM_1_Z: (f64, f64) = (0.6018737352370088, 0.07090758241996721);

// ---- Lame l0=2 at TAU_A, E=2+0.5i ----
pub const E_2000: (f64, f64) = (2.0, 0.5);
pub const XI_ARG_2000: (f64, f64) = (0.23, 0.11);
pub const XI_2000: (f64, f64) = (-522.5351120926817, -2164.561030617191);
pub const Q_2000: (f64, f64) = (1034156.3445172796, 9157.146161459024);
pub const WP_ALPHA_2000: (f64, f64) = (-2.3885788679634543, 1.700425076332714);
pub const ALPHA_2000: (f64, f64) = (-0.22952763667233864, 0.5273119027685023); // paired with KAPPA_2000 by the HK fit
pub const KAPPA_2000: (f64, f64) = (0.4262459176209907, 1.7991473305204);
pub const M_ELL_K1_2000: (f64, f64) = (0.05311842362136585, -1.25487074703147);
pub const M_ELL_K3_2000: (f64, f64) = (-0.016566688723703572, -0.2087499043161134);
pub const LAMBDA_BASE_2000: (f64, f64) = (0.21, 0.13);
pub const LAMBDA_ARG_2000: (f64, f64) = (0.4, 0.2);
pub const LAMBDA_2000: (f64, f64) = (13.158579636370426, -15.838941968238942); // sqrt(Xi) principal at base, sqrt(-Q) principal

// ---- general-l spectral solver pin: l=(1,1,0,0), E=0.7-0.3i at TAU_A, c0=1 ----
pub const E_1100: (f64, f64) = (0.7, -0.3);
pub const Q_1100: (f64, f64) = (25.395855770447874, -1.9113616733706118); // normalization c0=1
pub const B00_1100: (f64, f64) = (-0.052846735122535154, 0.0020939309071504714); // coefficient of wp(x)
pub const B10_1100: (f64, f64) = (-0.052846735122535154, 0.0020939309071504714); // coefficient of wp(x+om1)

// ---- l=0 chain at TAU_A, b1=0.7+0.4i, mu1=-0.8+0.6i ----
pub const B1_GEN: (f64, f64) = (0.7, 0.4);
pub const MU1_GEN: (f64, f64) = (-0.8, 0.6);
pub const P_L00: (f64, f64) = (102.57195862618913, -433.35361516067184);
pub const Q_L00: (f64, f64) = (-1557.757288555648, -871.3123701045188);
pub const WPA_L00: (f64, f64) = (1.1, 0.7);
pub const WPPA_L00: (f64, f64) = (-0.6083292894489928, -21.115152935604787); // principal sqrt(-Q)
pub const KAPPA_L00: (f64, f64) = (-13.155755192922067, -16.527124774814432);

// ---- l0=1 chain at TAU_A, same (b1, mu1) ----
pub const P_L01: (f64, f64) = (103.97195862618914, -432.5536151606718);
pub const C0_L01: (f64, f64) = (101.87195862618913, -433.7536151606718);
pub const D0_L01: (f64, f64) = (-171.0348679986772, 142.569858476412);
pub const Q_L01: (f64, f64) = (-56671201.649438344, 67671862.05904809);
pub const WPA_L01: (f64, f64) = (1.91747037092247, 1.3565645100839823);
pub const WPPA_L01: (f64, f64) = (0.7776018656033012, -23.193635765160767); // principal sqrt(-Q)
pub const KAPPA_L01: (f64, f64) = (-13.179961430791229, -16.521678836377706);
pub const XI_ARG_L01: (f64, f64) = (0.31, 0.17);
pub const XI_L01: (f64, f64) = (77.49781526760954, -449.36701848914134);

// ---- apparency and frame at TAU_A, same (b1, mu1), l=(2,1,0,1) ----
pub const P_APP_2101: (f64, f64) = (74.24817339010326, -449.72219119185667);
pub const LAM_GEN_A: (f64, f64) = (0.6743049695868816, 0.11507848295987308);
pub const MU_GEN_A: (f64, f64) = (5.595891732160244, -6.4406156355679425);
pub const H_FRAME_2101: (f64, f64) = (-13.619236710452318, -4.964188774266009);

// ---- families at TAU_C: (C1,C3)=(0.31+0.12i, 0.47-0.23i), (D1,D3)=(0.4+0.3i, -0.2+0.5i) ----
pub const C1_F: (f64, f64) = (0.31, 0.12);
pub const C3_F: (f64, f64) = (0.47, -0.23);
pub const D1_F: (f64, f64) = (0.4, 0.3);
pub const D3_F: (f64, f64) = (-0.2, 0.5);
pub const B1_HITCHIN_C: (f64, f64) = (-2.421122425872609, -2.4473917699130823);
pub const B1_L1000_C: (f64, f64) = (-3.0116512912580666, 1.4400121096128757);
pub const B1_MU0_C: (f64, f64) = (7.921772815372142, -12.049944424727974);
pub const B1_MUI_C: [(f64, f64); 3] = [(7.48092567706789, 7.954981506331936), (-2.913801426836881, -1.1347680268399603), (-3.399744693692882, 1.1925803602676877)];
pub const B1_CUBIC_C: (f64, f64) = (3.0858521679025612, -2.944938054572681);
pub const B1_EI_C: [(f64, f64); 3] = [(-3.2058951926501016, -0.07839650361078289), (-6.505705872108369, 2.1787102926136694), (-0.779643979384398, -0.6464410638799086)];

// ---- Hitchin instance at TAU_G with (C1_F, C3_F) ----
pub const B1_HITCHIN_G: (f64, f64) = (-1.2206784223345497, -1.6522536507170522);
pub const MU1_HITCHIN_G: (f64, f64) = (-0.0039092006499729225, 0.0674866697908516);
pub const KAPPA_HITCHIN_G: (f64, f64) = (-1.3289560334524744, -2.014844314020048);
pub const ALPHA_HITCHIN_G: (f64, f64) = (0.25925, -0.29275); // alpha = C3 om1 - C1 om3
pub const T_G: (f64, f64) = (1.386498572259772, 0.6168434143390709);
pub const LAM_HITCHIN_G: (f64, f64) = (0.8991307921710356, 0.4401381376071051);
pub const MU_HITCHIN_G: (f64, f64) = (-0.08754429305249135, -0.5344846495591513);

// ---- modular derivatives at TAU_B (closed forms) ----
pub const DT_DTAU_B: (f64, f64) = (-6.767074819333694e-84, 1.679775450343381);
pub const DE1_DTAU_B: (f64, f64) = (3.250914725346666e-84, 0.5279091882670864);
pub const DE2_DTAU_B: (f64, f64) = (-1.7006325129579566e-83, 5.49114354898547);
pub const DE3_DTAU_B: (f64, f64) = (3.250914726967993e-84, -6.019052737252556);
pub const DETA1_DTAU_B: (f64, f64) = (-4.0636434066833323e-85, -0.1322575781801808);
pub const DPOW_HALF_B: (f64, f64) = (0.8681328470457874, -5.397466445652644e-85); // d/dtau (e2-e1)^(1/2), principal branch

// ---- RK transport pin: Lame l0=1, E=1, tau=i, psi(x0)=1, psi'(x0)=0 ----
pub const RK_X0: (f64, f64) = (0.2, 0.1);
pub const RK_X1: (f64, f64) = (0.5, 0.3);
pub const RK_PSI_X1: (f64, f64) = (2.3076418761198396, 0.39249340778467123);
pub const RK_PSIP_X1: (f64, f64) = (5.7222116765420585, -1.219480082963496); // d psi / dx at x1
