//! Self-verification battery: seeded, deterministic checks across every
//! layer of the crate, reported as machine-readable outcomes.
//!
//! Each check reduces to a single max residual compared against its
//! tolerance. The battery supports a global tolerance override (setting
//! it to 0 demonstrates that the residuals are genuinely nonzero floats)
//! and an injected structure-constant sign flip that a healthy run must
//! catch.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ga::{Multivector, BLADE_COUNT, CAYLEY};
use crate::matrix_bridge::{
    amplitude_dirac, amplitude_hermitian, dirac_residual, from_matrix_spinor, to_matrix_spinor,
    GammaRep, EVEN_MASKS,
};
use crate::phase::{
    dynamic_rate_full, dynamic_rate_simple, geometric_rate_full, geometric_rate_simple,
    hermitian_dynamic_density, integrate_phases,
};
use crate::rotor::{boost_rotor, euler_from_spatial, euler_rotor, split_boost_rotation, Rotor};
use crate::scenario::{
    beta_ramp, boosted_plane_wave, boosted_precession, precession_loop, rest_plane_wave,
    with_gauge_shift, Particle, PlaneWaveField, Series, Trajectory, TrigTerm,
};
use crate::spinor::{kinematics, polar_compose, polar_decompose};
use crate::tol;

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyConfig {
    /// Replaces every check's own tolerance when set.
    pub tolerance_override: Option<f64>,
    /// Flips one structure constant in the checked table copy; the
    /// battery must then fail.
    pub inject_sign_flip: bool,
}

/// Result of one named check.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct VerifyOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub max_residual: f64,
    pub tolerance: f64,
}

pub fn all_passed(outcomes: &[VerifyOutcome]) -> bool {
    outcomes.iter().all(|o| o.pass)
}

/// Runs the full battery in a fixed order with fixed seeds.
pub fn run_verification(config: &VerifyConfig) -> Vec<VerifyOutcome> {
    let checks: [(&'static str, f64, fn(&VerifyConfig) -> f64); 9] = [
        ("structure-constants", tol::EXACT, check_structure_constants),
        ("rotor-round-trips", tol::TIGHT, check_rotor_round_trips),
        ("polar-round-trips", tol::TIGHT, check_polar_round_trips),
        ("observable-invariants", tol::TIGHT, check_observable_invariants),
        ("derivation-chain", tol::CHAIN, check_derivation_chain),
        ("matrix-correspondences", tol::TIGHT, check_matrix_correspondences),
        ("dirac-residual", tol::TIGHT, check_dirac_residual),
        ("gauge-law", tol::CHAIN, check_gauge_law),
        ("ledger-closure", tol::INTEGRATED, check_ledger_closure),
    ];
    checks
        .iter()
        .map(|&(name, default_tol, run)| {
            let tolerance = config.tolerance_override.unwrap_or(default_tol);
            let max_residual = run(config);
            VerifyOutcome {
                name,
                pass: max_residual <= tolerance,
                max_residual,
                tolerance,
            }
        })
        .collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rotor(rng: &mut ChaCha8Rng) -> Rotor {
    let b = [
        rng.random_range(-1.2..1.2),
        rng.random_range(-1.2..1.2),
        rng.random_range(-1.2..1.2),
    ];
    let phi = rng.random_range(-3.0..3.0);
    let theta = rng.random_range(0.05..3.0);
    let chi = rng.random_range(-3.0..3.0);
    Rotor::try_new(boost_rotor(b).mv() * euler_rotor(phi, theta, chi).mv())
        .expect("product of rotors")
}

/// Random even multivector, rejected until it is polar-decomposable with
/// a healthy density.
fn random_even(rng: &mut ChaCha8Rng) -> Multivector {
    loop {
        let mut m = Multivector::ZERO;
        for &mask in &EVEN_MASKS {
            m.set_coeff(mask, rng.random_range(-1.0..1.0));
        }
        if let Ok(polar) = polar_decompose(&m) {
            if polar.rho > 0.2 {
                return m;
            }
        }
    }
}

fn mat_diff(a: &crate::matrix_bridge::CMat4, b: &crate::matrix_bridge::CMat4) -> f64 {
    (a - b).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn vec_diff(a: &crate::matrix_bridge::CVec4, b: &crate::matrix_bridge::CVec4) -> f64 {
    (a - b).iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// All 256 basis-blade products against the 4x4 matrix representation,
/// read from a local copy of the table so an injected mutation is
/// visible to the check.
fn check_structure_constants(config: &VerifyConfig) -> f64 {
    let mut table = CAYLEY;
    if config.inject_sign_flip {
        // γ0γ1 · γ2: an arbitrary off-diagonal entry.
        table[0b0011][0b0100] = -table[0b0011][0b0100];
    }
    let rep = GammaRep::standard();
    let mut max = 0.0f64;
    for a in 0..BLADE_COUNT {
        for b in 0..BLADE_COUNT {
            let product = rep.blade(a) * rep.blade(b);
            let claimed = rep.blade(a ^ b) * Complex64::new(table[a][b] as f64, 0.0);
            max = max.max(mat_diff(&product, &claimed));
        }
    }
    max
}

fn check_rotor_round_trips(_: &VerifyConfig) -> f64 {
    let mut rng = rng(11);
    let mut max = 0.0f64;
    for _ in 0..200 {
        let r = random_rotor(&mut rng);
        max = max.max(((r.mv() * r.mv().rev()).scalar_part() - 1.0).abs());
        let (l, u) = split_boost_rotation(&r).expect("orthochronous");
        let (angles, sign) = euler_from_spatial(&u.mv()).expect("spatial");
        let recomposed =
            l.mv() * euler_rotor(angles.phi, angles.theta, angles.chi).mv() * sign;
        max = max.max((recomposed - r.mv()).norm_inf());
    }
    max
}

fn check_polar_round_trips(_: &VerifyConfig) -> f64 {
    let mut rng = rng(12);
    let mut max = 0.0f64;
    for _ in 0..200 {
        let psi = random_even(&mut rng);
        let polar = polar_decompose(&psi).expect("non-degenerate");
        max = max.max((polar_compose(&polar) - psi).norm_inf());
    }
    max
}

fn check_observable_invariants(_: &VerifyConfig) -> f64 {
    let mut rng = rng(13);
    let mut max = 0.0f64;
    for _ in 0..200 {
        let r = random_rotor(&mut rng);
        let v = crate::spinor::velocity(&r);
        let s = crate::spinor::spin_vector(&r);
        let spin = crate::spinor::spin_bivector(&r);
        max = max.max(((v * v).scalar_part() - 1.0).abs());
        max = max.max(s.inner(&v).norm_inf());
        max = max.max((spin - Multivector::pseudoscalar() * s * v).norm_inf());
        max = max.max((spin.scalar_product(&spin) + 0.25).abs());
    }
    max
}

/// The decomposed rate formulas against the raw spinor products they
/// were derived from, on random tangent pairs.
fn check_derivation_chain(_: &VerifyConfig) -> f64 {
    let mut rng = rng(14);
    let mut max = 0.0f64;
    for _ in 0..200 {
        let psi = random_even(&mut rng);
        let mut psi_dot = Multivector::ZERO;
        for &mask in &EVEN_MASKS {
            psi_dot.set_coeff(mask, rng.random_range(-1.0..1.0));
        }
        let k = kinematics(&psi, &psi_dot, None).expect("non-degenerate");
        let s_dot = k.spin_rate();
        let full_dyn = dynamic_rate_full(&k, &s_dot).unwrap().total;
        let full_geo = geometric_rate_full(&k, &s_dot).unwrap().total;
        let simple_dyn = dynamic_rate_simple(&k);
        let simple_geo = geometric_rate_simple(&k);
        // Decomposed dynamic rate times density equals the hermitian form.
        max = max.max((full_dyn * k.varrho - hermitian_dynamic_density(&psi, &psi_dot)).abs());
        // Both families resolve the same fiber rate.
        max = max.max((full_dyn + full_geo + k.chi_dot / 2.0).abs());
        max = max.max((simple_dyn + simple_geo + k.chi_dot / 2.0).abs());
    }
    max
}

fn check_matrix_correspondences(_: &VerifyConfig) -> f64 {
    let mut rng = rng(15);
    let rep = GammaRep::standard();
    let i = Complex64::new(0.0, 1.0);
    let mut max = 0.0f64;
    for _ in 0..200 {
        let psi = random_even(&mut rng);
        let phi = random_even(&mut rng);
        let column = to_matrix_spinor(&psi).expect("even");
        let other = to_matrix_spinor(&phi).expect("even");
        max = max.max((from_matrix_spinor(&column) - psi).norm_inf());
        // iΨ ↔ ψ Iσ3
        let lhs = column * i;
        let rhs = to_matrix_spinor(&(psi * Multivector::isigma(3))).expect("even");
        max = max.max(vec_diff(&lhs, &rhs));
        // γ̂5 Ψ ↔ ψ σ3
        let lhs = rep.gamma5() * column;
        let rhs = to_matrix_spinor(&(psi * Multivector::sigma(3))).expect("even");
        max = max.max(vec_diff(&lhs, &rhs));
        // iγ̂5 Ψ ↔ I ψ
        let lhs = rep.gamma5() * column * i;
        let rhs = to_matrix_spinor(&(Multivector::pseudoscalar() * psi)).expect("even");
        max = max.max(vec_diff(&lhs, &rhs));
        // γ̂_μ Ψ ↔ γ_μ ψ γ0
        for mu in 0..4 {
            let lhs = rep.blade(1 << mu) * column;
            let rhs = to_matrix_spinor(
                &(Multivector::gamma(mu) * psi * Multivector::gamma(0)),
            )
            .expect("even");
            max = max.max(vec_diff(&lhs, &rhs));
        }
        // Both inner products through the dictionary.
        let herm = amplitude_hermitian(&psi, &phi);
        max = max.max((herm - column.dotc(&other)).norm());
        let dirac = amplitude_dirac(&psi, &phi);
        let g0_column = rep.blade(0b0001) * column;
        max = max.max((dirac - g0_column.dotc(&other)).norm());
    }
    max
}

fn check_dirac_residual(_: &VerifyConfig) -> f64 {
    let fields = [
        PlaneWaveField::new(Particle::Electron, 1.0, [0.0; 3], 0.0).unwrap(),
        PlaneWaveField::new(Particle::Positron, 1.0, [0.0; 3], 0.0).unwrap(),
        PlaneWaveField::new(Particle::Electron, 0.8, [0.4, -0.3, 0.7], 0.0).unwrap(),
        PlaneWaveField::new(Particle::Positron, 1.3, [0.0, 0.6, -0.2], 0.0).unwrap(),
    ];
    let grid = [-1.0, 0.0, 1.0];
    let mut max = 0.0f64;
    for field in &fields {
        for &t in &grid {
            for &x in &grid {
                for &y in &grid {
                    for &z in &grid {
                        let r = dirac_residual(field, None, 0.0, field.mass, [t, x, y, z]);
                        max = max.max(r.norm_inf());
                    }
                }
            }
        }
    }
    max
}

/// ψ → ψ e^{Iσ3 α(t)} must shift the dynamic rate by α̇ and leave the
/// geometric rate alone.
fn check_gauge_law(_: &VerifyConfig) -> f64 {
    let base = boosted_precession(0.8, std::f64::consts::PI / 3.0, 2.0, 2.0).unwrap();
    let alpha = Series {
        trig: vec![TrigTerm {
            amp: 0.3,
            freq: 1.0,
            phase: 0.0,
        }],
        ..Series::default()
    };
    let shifted = Trajectory::new(with_gauge_shift(&base.curve, &alpha), 2.0).unwrap();
    let mut max = 0.0f64;
    for i in 0..50 {
        let t = 2.0 * i as f64 / 49.0;
        let k0 = base.kinematics_at(t).unwrap();
        let k1 = shifted.kinematics_at(t).unwrap();
        let d0 = dynamic_rate_full(&k0, &k0.spin_rate()).unwrap().total;
        let d1 = dynamic_rate_full(&k1, &k1.spin_rate()).unwrap().total;
        let g0 = geometric_rate_full(&k0, &k0.spin_rate()).unwrap().total;
        let g1 = geometric_rate_full(&k1, &k1.spin_rate()).unwrap().total;
        max = max.max((d1 - d0 - alpha.derivative(t)).abs());
        max = max.max((g1 - g0).abs());
    }
    max
}

/// Integrated δ + γ + Δχ/2 over every builtin scenario.
fn check_ledger_closure(_: &VerifyConfig) -> f64 {
    let builtins = [
        rest_plane_wave(1.0, Particle::Electron, 1.0).unwrap(),
        rest_plane_wave(1.0, Particle::Positron, 1.0).unwrap(),
        boosted_plane_wave(1.0, Particle::Electron, 0.9, 1.0).unwrap(),
        precession_loop(std::f64::consts::PI / 3.0, 2.0 * std::f64::consts::PI, 1.0).unwrap(),
        boosted_precession(1.0, std::f64::consts::PI / 3.0, 2.0 * std::f64::consts::PI, 1.0)
            .unwrap(),
        beta_ramp(0.4, 1.0, 1.5).unwrap(),
    ];
    let mut max = 0.0f64;
    for traj in &builtins {
        let run = integrate_phases(|t| traj.kinematics_at(t), traj.duration, 500, false)
            .expect("builtin integrates");
        let t = run.totals;
        max = max.max((t.dynamic_full + t.geometric_full - t.total).abs());
        max = max.max((t.dynamic_simple + t.geometric_simple - t.total).abs());
    }
    max
}
