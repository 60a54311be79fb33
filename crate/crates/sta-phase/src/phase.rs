//! Dynamic and geometric phase rates along spinor trajectories, their
//! fixed-step integration, and the consistency identities tying them to
//! the fiber angle χ.
//!
//! Two formula families coexist: the full frame-dependent rates
//!
//! ```text
//! δ̇ = -Ω₀·S - (𝐯/v⁰)·[Ṡ - (𝐬/v⁰)β̇]
//! γ̇ =  ω₀·S + (𝐯/v⁰)·[Ṡ - (𝐬/v⁰)β̇]
//! ```
//!
//! and the simplified rotor rates δ̇ = -Ω₀·S, γ̇ = ω₀·S. Both pairs sum to
//! -χ̇/2 pointwise, so the accumulated total phase is -Δχ/2 either way.

use crate::error::{PhaseError, RotorError, SpinorError};
use crate::ga::Multivector;
use crate::spinor::Kinematics;
use crate::tol;

/// One rate split into its rotational part and the relativistic
/// correction; `total` is their exact sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RateBreakdown {
    /// -Ω₀·S for the dynamic rate, +ω₀·S for the geometric rate.
    pub omega_term: f64,
    /// Signed correction term as it enters the formula.
    pub relativistic_correction: f64,
    pub total: f64,
}

fn correction_magnitude(k: &Kinematics, s_dot: &Multivector) -> Result<f64, PhaseError> {
    if k.v0 <= 0.0 {
        return Err(PhaseError::Rotor(RotorError::NotOrthochronous { v0: k.v0 }));
    }
    let bracket = *s_dot - k.s_spatial * (k.beta_dot / k.v0);
    Ok(k.v_spatial.scalar_product(&bracket) / k.v0)
}

/// Full local dynamic rate δ̇.
pub fn dynamic_rate_full(k: &Kinematics, s_dot: &Multivector) -> Result<RateBreakdown, PhaseError> {
    let omega_term = -k.omega0_full.scalar_product(&k.spin);
    let relativistic_correction = -correction_magnitude(k, s_dot)?;
    Ok(RateBreakdown {
        omega_term,
        relativistic_correction,
        total: omega_term + relativistic_correction,
    })
}

/// Full local geometric rate γ̇.
pub fn geometric_rate_full(
    k: &Kinematics,
    s_dot: &Multivector,
) -> Result<RateBreakdown, PhaseError> {
    let omega_term = k.omega0_path.scalar_product(&k.spin);
    let relativistic_correction = correction_magnitude(k, s_dot)?;
    Ok(RateBreakdown {
        omega_term,
        relativistic_correction,
        total: omega_term + relativistic_correction,
    })
}

/// Simplified dynamic rate δ̇ = -Ω₀·S = -⟨Ṙ Iσ3 rev(R)⟩₀.
pub fn dynamic_rate_simple(k: &Kinematics) -> f64 {
    -k.omega0_full.scalar_product(&k.spin)
}

/// Simplified geometric rate γ̇ = ω₀·S = ⟨Ṙ₀ Iσ3 rev(R₀)⟩₀.
pub fn geometric_rate_simple(k: &Kinematics) -> f64 {
    k.omega0_path.scalar_product(&k.spin)
}

/// Frame-dependent dynamic density -⟨ψ̇ Iσ3 γ0 rev(ψ) γ0⟩₀.
///
/// Equals ϱ times the full dynamic rate, and Im(Ψ†Ψ̇) across the matrix
/// bridge; both equalities are enforced by the verification suite.
pub fn hermitian_dynamic_density(psi: &Multivector, psi_dot: &Multivector) -> f64 {
    -(*psi_dot * Multivector::isigma(3) * psi.hermitian_adjoint()).scalar_part()
}

/// ψ · e^{-Iσ3 δ}: strips accumulated dynamic phase from a sample.
pub fn remove_dynamic_phase(psi: &Multivector, delta: f64) -> Multivector {
    *psi * (Multivector::scalar(delta.cos()) - Multivector::isigma(3) * delta.sin())
}

/// Dynamic-phase removal together with the derivative of the stripped
/// curve; feeding the stripped pair back into the dynamic density must
/// return zero.
pub fn remove_dynamic_phase_with_rate(
    psi: &Multivector,
    psi_dot: &Multivector,
    delta: f64,
    delta_dot: f64,
) -> (Multivector, Multivector) {
    let turn = Multivector::scalar(delta.cos()) - Multivector::isigma(3) * delta.sin();
    let stripped = *psi * turn;
    let stripped_dot = *psi_dot * turn - *psi * Multivector::isigma(3) * turn * delta_dot;
    (stripped, stripped_dot)
}

/// Finds α with ψ2 = ψ1·e^{Iσ3 α}, i.e. tests whether the two spinors sit
/// on the same ray.
pub fn ray_phase_difference(psi1: &Multivector, psi2: &Multivector) -> Result<f64, PhaseError> {
    let q0 = *psi1 * psi1.rev();
    let mag = q0.scalar_part().hypot(q0.pseudoscalar_part());
    if mag <= tol::DEGENERATE {
        return Err(PhaseError::Spinor(SpinorError::Degenerate {
            magnitude: mag,
        }));
    }
    // ψ1⁻¹ = rev(ψ1)·(ρ e^{Iβ})⁻¹ with the scalar+pseudoscalar inverse.
    let inv_factor = (Multivector::scalar(q0.scalar_part())
        - Multivector::pseudoscalar() * q0.pseudoscalar_part())
        * (mag * mag).recip();
    let q = inv_factor * psi1.rev() * *psi2;
    let c = q.scalar_part();
    let s = -q.scalar_product(&Multivector::isigma(3));
    let alpha = s.atan2(c);
    let pure = Multivector::scalar(alpha.cos()) + Multivector::isigma(3) * alpha.sin();
    let residual = (q - pure).norm_inf();
    if residual > tol::CHAIN * (1.0 + q.norm_inf()) {
        return Err(PhaseError::NotCoray { residual });
    }
    Ok(alpha)
}

/// Standard adiabatic geometric rate Γ̇ = -Im(Ψ†Ψ̇)/ϱ of the eigenfunction
/// curve, normalized per streamline. Differs from the simplified rotor
/// rate γ̇ by exactly χ̇/2 on unboosted curves.
pub fn adiabatic_standard_geometric_rate(
    psi: &Multivector,
    psi_dot: &Multivector,
) -> Result<f64, PhaseError> {
    let varrho = (*psi * psi.hermitian_adjoint()).scalar_part();
    if varrho <= tol::DEGENERATE {
        return Err(PhaseError::Spinor(SpinorError::Degenerate {
            magnitude: varrho,
        }));
    }
    Ok(-hermitian_dynamic_density(psi, psi_dot) / varrho)
}

/// Accumulated phases at one trajectory parameter.
#[derive(Clone, Copy, Debug, Default)]
pub struct PhaseState {
    pub t: f64,
    pub delta_full: f64,
    pub gamma_full: f64,
    pub delta_simple: f64,
    pub gamma_simple: f64,
    /// χ(t) - χ(0).
    pub chi_change: f64,
}

/// One emitted series row: instantaneous rates plus the running ledger
/// residual δ + γ + Δχ/2.
#[derive(Clone, Copy, Debug)]
pub struct RateSample {
    pub t: f64,
    pub dynamic_full: f64,
    pub geometric_full: f64,
    pub dynamic_simple: f64,
    pub geometric_simple: f64,
    pub beta: f64,
    pub v0: f64,
    pub consistency_residual: f64,
}

/// Integrated totals over the trajectory.
#[derive(Clone, Copy, Debug)]
pub struct PhaseTotals {
    pub dynamic_full: f64,
    pub geometric_full: f64,
    pub dynamic_simple: f64,
    pub geometric_simple: f64,
    /// -Δχ/2: what both rate families must sum to.
    pub total: f64,
    pub chi_change: f64,
    pub max_consistency_residual: f64,
}

/// Series plus totals for one integrated trajectory.
#[derive(Clone, Debug)]
pub struct PhaseRun {
    pub samples: Vec<RateSample>,
    pub totals: PhaseTotals,
}

struct RateSet {
    dynamic_full: f64,
    geometric_full: f64,
    dynamic_simple: f64,
    geometric_simple: f64,
    chi_dot: f64,
    beta: f64,
    v0: f64,
    chi: Option<f64>,
}

fn rates_at<F>(sample: &F, t: f64) -> Result<RateSet, PhaseError>
where
    F: Fn(f64) -> Result<Kinematics, SpinorError>,
{
    let k = sample(t).map_err(|source| PhaseError::Sample { t, source })?;
    let s_dot = k.spin_rate();
    let dynamic = dynamic_rate_full(&k, &s_dot)?;
    let geometric = geometric_rate_full(&k, &s_dot)?;
    let set = RateSet {
        dynamic_full: dynamic.total,
        geometric_full: geometric.total,
        dynamic_simple: dynamic_rate_simple(&k),
        geometric_simple: geometric_rate_simple(&k),
        chi_dot: k.chi_dot,
        beta: k.beta,
        v0: k.v0,
        chi: k.chi,
    };
    let finite = set.dynamic_full.is_finite()
        && set.geometric_full.is_finite()
        && set.dynamic_simple.is_finite()
        && set.geometric_simple.is_finite()
        && set.chi_dot.is_finite();
    if !finite {
        return Err(PhaseError::NonFinite { t });
    }
    Ok(set)
}

/// Integrates all four phase rates over `[0, duration]` with `steps`
/// fixed Runge-Kutta steps (the rates do not depend on the accumulated
/// state, so RK4 reduces to Simpson weights per step).
///
/// With `proper_time_rates` the emitted series rescales each rate by v⁰
/// (per-proper-time reporting); accumulated totals are
/// parameterization-invariant and stay in observer time.
pub fn integrate_phases<F>(
    sample: F,
    duration: f64,
    steps: usize,
    proper_time_rates: bool,
) -> Result<PhaseRun, PhaseError>
where
    F: Fn(f64) -> Result<Kinematics, SpinorError>,
{
    if steps < 2 {
        return Err(PhaseError::TooFewSteps { steps });
    }
    if !(duration > 0.0 && duration.is_finite()) {
        return Err(PhaseError::NonFinite { t: duration });
    }

    let h = duration / steps as f64;
    let mut state = PhaseState::default();
    let mut samples = Vec::with_capacity(steps + 1);
    let mut max_residual = 0.0f64;
    let mut chi_declared_start = None;

    let mut left = rates_at(&sample, 0.0)?;
    chi_declared_start = left.chi.or(chi_declared_start);

    let mut emit = |state: &PhaseState, set: &RateSet, max_residual: &mut f64| {
        // χ from the trajectory's own frames takes precedence over the
        // integrated fiber rate: the ledger then cross-checks two routes.
        let chi_change = match (set.chi, chi_declared_start) {
            (Some(chi), Some(chi0)) => chi - chi0,
            _ => state.chi_change,
        };
        let residual = state.delta_full + state.gamma_full + chi_change / 2.0;
        *max_residual = max_residual.max(residual.abs());
        let scale = if proper_time_rates { set.v0 } else { 1.0 };
        samples.push(RateSample {
            t: state.t,
            dynamic_full: set.dynamic_full * scale,
            geometric_full: set.geometric_full * scale,
            dynamic_simple: set.dynamic_simple * scale,
            geometric_simple: set.geometric_simple * scale,
            beta: set.beta,
            v0: set.v0,
            consistency_residual: residual,
        });
    };

    emit(&state, &left, &mut max_residual);

    for i in 0..steps {
        let t0 = i as f64 * h;
        let mid = rates_at(&sample, t0 + h / 2.0)?;
        let right = rates_at(&sample, t0 + h)?;
        let simpson = |a: f64, m: f64, b: f64| (a + 4.0 * m + b) * (h / 6.0);
        state.delta_full += simpson(left.dynamic_full, mid.dynamic_full, right.dynamic_full);
        state.gamma_full += simpson(
            left.geometric_full,
            mid.geometric_full,
            right.geometric_full,
        );
        state.delta_simple += simpson(
            left.dynamic_simple,
            mid.dynamic_simple,
            right.dynamic_simple,
        );
        state.gamma_simple += simpson(
            left.geometric_simple,
            mid.geometric_simple,
            right.geometric_simple,
        );
        state.chi_change += simpson(left.chi_dot, mid.chi_dot, right.chi_dot);
        state.t = t0 + h;
        emit(&state, &right, &mut max_residual);
        left = right;
    }

    let chi_change = match (left.chi, chi_declared_start) {
        (Some(chi), Some(chi0)) => chi - chi0,
        _ => state.chi_change,
    };
    Ok(PhaseRun {
        samples,
        totals: PhaseTotals {
            dynamic_full: state.delta_full,
            geometric_full: state.gamma_full,
            dynamic_simple: state.delta_simple,
            geometric_simple: state.gamma_simple,
            total: -chi_change / 2.0,
            chi_change,
            max_consistency_residual: max_residual,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ga::Multivector;
    use crate::matrix_bridge::matrix_dynamic_density;
    use crate::rotor::{axis2_rotor, axis3_rotor, boost_rotor, euler_rotor, Rotor};
    use crate::spinor::{duality_phase, kinematics, polar_compose, SpinorPolar};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_even(rng: &mut ChaCha8Rng) -> Multivector {
        let mut m = Multivector::ZERO;
        for mask in crate::matrix_bridge::EVEN_MASKS {
            m.set_coeff(mask, rng.random_range(-1.0..1.0));
        }
        m
    }

    fn random_rotor(rng: &mut ChaCha8Rng) -> Rotor {
        let u = euler_rotor(
            rng.random_range(-PI..PI),
            rng.random_range(0.2..PI - 0.2),
            rng.random_range(-PI..PI),
        );
        boost_rotor([
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ])
        .compose(&u)
    }

    // ψ(t) = boost · exp(-Iσ3 φ̇t/2) · exp(-Iσ2 θ0/2) · exp(-Iσ3 χ̇t/2)
    // with exact derivative; the workhorse curve for rate tests.
    fn precession_sampler(
        b: f64,
        theta0: f64,
        om_phi: f64,
        om_chi: f64,
    ) -> impl Fn(f64) -> Result<Kinematics, SpinorError> {
        move |t: f64| {
            let l = boost_rotor([0.0, 0.0, b]);
            let psi = l.mv() * axis3_rotor(om_phi * t) * axis2_rotor(theta0) * axis3_rotor(om_chi * t);
            let psi_dot = l.mv()
                * (Multivector::isigma(3) * (-om_phi / 2.0))
                * axis3_rotor(om_phi * t)
                * axis2_rotor(theta0)
                * axis3_rotor(om_chi * t)
                + l.mv()
                    * axis3_rotor(om_phi * t)
                    * axis2_rotor(theta0)
                    * (Multivector::isigma(3) * (-om_chi / 2.0))
                    * axis3_rotor(om_chi * t);
            kinematics(&psi, &psi_dot, None)
        }
    }

    #[test]
    fn pure_phase_curve_anchors_the_signs() {
        // ψ = exp(-Iσ3 ωt/2): dynamic rate -ω/2, geometric rate 0.
        let omega = 1.4;
        let sample = |t: f64| {
            let psi = axis3_rotor(omega * t);
            let psi_dot = Multivector::isigma(3) * (-omega / 2.0) * psi;
            kinematics(&psi, &psi_dot, None)
        };
        let k = sample(0.7).unwrap();
        let s_dot = k.spin_rate();
        assert!((dynamic_rate_simple(&k) - (-omega / 2.0)).abs() < 1e-12);
        assert!(geometric_rate_simple(&k).abs() < 1e-12);
        assert!((k.chi_dot - omega).abs() < 1e-12);
        // No boost: full equals simple exactly.
        let full = dynamic_rate_full(&k, &s_dot).unwrap();
        assert!((full.total - (-omega / 2.0)).abs() < 1e-12);
        assert!(full.relativistic_correction.abs() < 1e-13);
        assert!(geometric_rate_full(&k, &s_dot).unwrap().total.abs() < 1e-12);

        // Integrated: δ = -ωT/2, γ = 0, ledger exact.
        let run = integrate_phases(sample, 2.0, 200, false).unwrap();
        assert!((run.totals.dynamic_simple - (-omega)).abs() < 1e-10);
        assert!(run.totals.geometric_simple.abs() < 1e-12);
        assert!((run.totals.total - (-omega)).abs() < 1e-10);
        assert!(run.totals.max_consistency_residual < 1e-10);
    }

    #[test]
    fn full_rate_times_density_matches_the_hermitian_form() {
        // The decomposed formula against the raw product, on arbitrary
        // tangent pairs (ψ, ψ̇), plus the matrix route.
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..200 {
            let psi = random_even(&mut rng);
            let psi_dot = random_even(&mut rng);
            let k = match kinematics(&psi, &psi_dot, None) {
                Ok(k) => k,
                Err(_) => continue,
            };
            let s_dot = k.spin_rate();
            let full = dynamic_rate_full(&k, &s_dot).unwrap();
            let density = hermitian_dynamic_density(&psi, &psi_dot);
            assert!(
                (density - k.varrho * full.total).abs() < 1e-8 * (1.0 + density.abs()),
                "decomposed rate disagrees with the density"
            );
            let matrix = matrix_dynamic_density(&psi, &psi_dot).unwrap();
            assert!((density - matrix).abs() < 1e-10 * (1.0 + density.abs()));
        }
    }

    #[test]
    fn dynamic_phase_removal_zeroes_the_density() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let psi = random_even(&mut rng);
            let psi_dot = random_even(&mut rng);
            let k = match kinematics(&psi, &psi_dot, None) {
                Ok(k) => k,
                Err(_) => continue,
            };
            let s_dot = k.spin_rate();
            let rate = dynamic_rate_full(&k, &s_dot).unwrap().total;
            // Any accumulated δ works as long as the rate matches.
            let delta = rng.random_range(-3.0..3.0);
            let (stripped, stripped_dot) =
                remove_dynamic_phase_with_rate(&psi, &psi_dot, delta, rate);
            let residual = hermitian_dynamic_density(&stripped, &stripped_dot);
            assert!(residual.abs() < 1e-10 * (1.0 + psi_dot.norm_inf()));
        }
        // δ ≡ 0 is the identity.
        let psi = random_even(&mut rng);
        assert!(remove_dynamic_phase(&psi, 0.0).approx_eq(&psi, 0.0));
    }

    #[test]
    fn boosted_rates_differ_but_both_sum_to_the_fiber_rate() {
        // Family separation needs the correction bracket to have a
        // component along 𝐯. A constant-velocity precession never does
        // (the bracket reduces to -S·v̇ there), so the separating case is
        // a boosted duality ramp: β = rate·t across a rapidity-1 rotor.
        let rate = 0.7;
        let b = 1.0;
        let sample = move |t: f64| {
            let l = boost_rotor([0.0, 0.0, b]);
            let spatial = axis3_rotor(0.9 * t) * axis2_rotor(PI / 3.0);
            let spatial_dot =
                Multivector::isigma(3) * axis3_rotor(0.9 * t) * (-0.45) * axis2_rotor(PI / 3.0);
            let psi = duality_phase(rate * t) * l.mv() * spatial;
            let psi_dot = Multivector::pseudoscalar() * psi * (rate / 2.0)
                + duality_phase(rate * t) * l.mv() * spatial_dot;
            kinematics(&psi, &psi_dot, None)
        };
        let mut max_gap = 0.0f64;
        for &t in &[0.1, 0.5, 1.3, 2.2] {
            let k = sample(t).unwrap();
            let s_dot = k.spin_rate();
            let df = dynamic_rate_full(&k, &s_dot).unwrap().total;
            let gf = geometric_rate_full(&k, &s_dot).unwrap().total;
            let ds = dynamic_rate_simple(&k);
            let gs = geometric_rate_simple(&k);
            max_gap = max_gap.max((df - ds).abs());
            // Both families obey δ̇ + γ̇ = -χ̇/2.
            assert!((df + gf + k.chi_dot / 2.0).abs() < 1e-8);
            assert!((ds + gs + k.chi_dot / 2.0).abs() < 1e-8);
            // The corrections cancel in the total.
            assert!(((df - ds) + (gf - gs)).abs() < 1e-12);
        }
        assert!(max_gap > 1e-3, "rapidity 1 must separate the formulas");

        // Closed form for the pure ramp (no precession): the correction
        // is s⁰β̇/v⁰ = -(β̇/2)·tanh b, and the simple rates are zero.
        let pure = |t: f64| {
            let psi = duality_phase(rate * t) * boost_rotor([0.0, 0.0, b]).mv();
            let psi_dot = Multivector::pseudoscalar() * psi * (rate / 2.0);
            kinematics(&psi, &psi_dot, None)
        };
        let k = pure(0.8).unwrap();
        let s_dot = k.spin_rate();
        let df = dynamic_rate_full(&k, &s_dot).unwrap();
        assert!(dynamic_rate_simple(&k).abs() < 1e-12);
        assert!((df.total - (-(rate / 2.0) * b.tanh())).abs() < 1e-12);
        assert!((df.relativistic_correction - df.total).abs() < 1e-12);

        // The same ramp across an unboosted rotor does not separate,
        // even though β̇ ≠ 0.
        let flat = |t: f64| {
            let psi = duality_phase(rate * t) * axis2_rotor(PI / 3.0);
            let psi_dot = Multivector::pseudoscalar() * psi * (rate / 2.0);
            kinematics(&psi, &psi_dot, None)
        };
        let k = flat(0.8).unwrap();
        let df = dynamic_rate_full(&k, &k.spin_rate()).unwrap();
        assert!((df.total - dynamic_rate_simple(&k)).abs() < 1e-13);
    }

    #[test]
    fn unboosted_rates_collapse_exactly() {
        let sample = precession_sampler(0.0, PI / 3.0, 0.9, -0.5);
        for &t in &[0.0, 0.4, 1.7] {
            let k = sample(t).unwrap();
            let s_dot = k.spin_rate();
            let df = dynamic_rate_full(&k, &s_dot).unwrap();
            let gf = geometric_rate_full(&k, &s_dot).unwrap();
            assert!((df.total - dynamic_rate_simple(&k)).abs() < 1e-12);
            assert!((gf.total - geometric_rate_simple(&k)).abs() < 1e-12);
            assert!(df.relativistic_correction.abs() < 1e-13);
        }
    }

    #[test]
    fn gauge_shift_moves_only_the_dynamic_phase() {
        // ψ → ψ e^{Iσ3 α(t)} with α = 0.3 sin t.
        let base = precession_sampler(0.6, 1.1, 0.8, 0.3);
        let alpha = |t: f64| 0.3 * t.sin();
        let alpha_dot = |t: f64| 0.3 * t.cos();
        let shifted = move |t: f64| {
            let l = boost_rotor([0.0, 0.0, 0.6]);
            let psi =
                l.mv() * axis3_rotor(0.8 * t) * axis2_rotor(1.1) * axis3_rotor(0.3 * t);
            let psi_dot = l.mv()
                * (Multivector::isigma(3) * (-0.8 / 2.0))
                * axis3_rotor(0.8 * t)
                * axis2_rotor(1.1)
                * axis3_rotor(0.3 * t)
                + l.mv()
                    * axis3_rotor(0.8 * t)
                    * axis2_rotor(1.1)
                    * (Multivector::isigma(3) * (-0.3 / 2.0))
                    * axis3_rotor(0.3 * t);
            let turn = Multivector::scalar(alpha(t).cos())
                + Multivector::isigma(3) * alpha(t).sin();
            let turn_dot = (Multivector::isigma(3) * alpha(t).cos()
                - Multivector::scalar(alpha(t).sin()))
                * alpha_dot(t);
            kinematics(&(psi * turn), &(psi_dot * turn + psi * turn_dot), None)
        };
        for &t in &[0.2, 0.9, 1.8] {
            let k0 = base(t).unwrap();
            let k1 = shifted(t).unwrap();
            assert!((geometric_rate_simple(&k1) - geometric_rate_simple(&k0)).abs() < 1e-8);
            assert!(
                (dynamic_rate_simple(&k1) - dynamic_rate_simple(&k0) - alpha_dot(t)).abs() < 1e-8
            );
        }
        // Accumulated shift equals α(T) - α(0).
        let t_end = 2.0;
        let run0 = integrate_phases(base, t_end, 400, false).unwrap();
        let run1 = integrate_phases(shifted, t_end, 400, false).unwrap();
        assert!(
            (run1.totals.dynamic_simple - run0.totals.dynamic_simple - (alpha(t_end) - alpha(0.0)))
                .abs()
                < 1e-8
        );
        assert!((run1.totals.geometric_simple - run0.totals.geometric_simple).abs() < 1e-8);
    }

    #[test]
    fn constant_left_rotor_shifts_only_the_frame_split() {
        // -Ω₀·S is built from conjugation-covariant pieces, so a constant
        // left rotor Λ cannot move it. The geometric rate reads the ZYZ
        // frame split and is only safe under Λ about the fiber axis; for
        // general Λ the family still sums to the (re-split) -χ̇/2.
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let base = precession_sampler(0.0, 0.9, 1.1, 0.4);
        let moved = |lambda: Rotor| {
            move |t: f64| {
                let psi = axis3_rotor(1.1 * t) * axis2_rotor(0.9) * axis3_rotor(0.4 * t);
                let psi_dot = (Multivector::isigma(3) * (-1.1 / 2.0))
                    * axis3_rotor(1.1 * t)
                    * axis2_rotor(0.9)
                    * axis3_rotor(0.4 * t)
                    + axis3_rotor(1.1 * t)
                        * axis2_rotor(0.9)
                        * (Multivector::isigma(3) * (-0.4 / 2.0))
                        * axis3_rotor(0.4 * t);
                kinematics(&(lambda.mv() * psi), &(lambda.mv() * psi_dot), None)
            }
        };
        let general = moved(random_rotor(&mut rng));
        let fiber_aligned = moved(Rotor::try_new(axis3_rotor(0.7)).unwrap());
        for &t in &[0.3, 1.2] {
            let k0 = base(t).unwrap();
            let k1 = general(t).unwrap();
            let k2 = fiber_aligned(t).unwrap();
            assert!((dynamic_rate_simple(&k1) - dynamic_rate_simple(&k0)).abs() < 1e-10);
            assert!((dynamic_rate_simple(&k2) - dynamic_rate_simple(&k0)).abs() < 1e-10);
            assert!((geometric_rate_simple(&k2) - geometric_rate_simple(&k0)).abs() < 1e-10);
            // Under a general Λ the split moves, but the pair still
            // resolves the re-split fiber rate.
            assert!(
                (dynamic_rate_simple(&k1) + geometric_rate_simple(&k1) + k1.chi_dot / 2.0).abs()
                    < 1e-8
            );
        }
    }

    #[test]
    fn ray_phase_difference_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let psi = polar_compose(&SpinorPolar {
            rho: 1.3,
            beta: 0.4,
            rotor: random_rotor(&mut rng),
        });
        assert!(ray_phase_difference(&psi, &psi).unwrap().abs() < 1e-14);
        let turned = psi * (Multivector::scalar(0.3f64.cos()) + Multivector::isigma(3) * 0.3f64.sin());
        assert!((ray_phase_difference(&psi, &turned).unwrap() - 0.3).abs() < 1e-12);
        let off_ray = psi * Multivector::sigma(1);
        assert!(matches!(
            ray_phase_difference(&psi, &off_ray),
            Err(PhaseError::NotCoray { .. })
        ));
        let null = Multivector::one() + Multivector::sigma(3);
        assert!(ray_phase_difference(&null, &psi).is_err());
    }

    #[test]
    fn adiabatic_rate_offsets_the_geometric_rate_by_half_chi_dot() {
        // Unboosted eigencurve with a running fiber phase.
        let (theta0, om_phi, om_chi) = (PI / 3.0, 1.0, 1.7);
        let sample = precession_sampler(0.0, theta0, om_phi, om_chi);
        for &t in &[0.1, 0.8, 2.0] {
            let psi = axis3_rotor(om_phi * t) * axis2_rotor(theta0) * axis3_rotor(om_chi * t);
            let psi_dot = (Multivector::isigma(3) * (-om_phi / 2.0))
                * axis3_rotor(om_phi * t)
                * axis2_rotor(theta0)
                * axis3_rotor(om_chi * t)
                + axis3_rotor(om_phi * t)
                    * axis2_rotor(theta0)
                    * (Multivector::isigma(3) * (-om_chi / 2.0))
                    * axis3_rotor(om_chi * t);
            let k = sample(t).unwrap();
            let big_gamma = adiabatic_standard_geometric_rate(&psi, &psi_dot).unwrap();
            assert!((big_gamma - geometric_rate_simple(&k) - k.chi_dot / 2.0).abs() < 1e-8);
        }
        // Constant eigenfunction: zero rate.
        let constant = axis2_rotor(0.7);
        assert!(
            adiabatic_standard_geometric_rate(&constant, &Multivector::ZERO)
                .unwrap()
                .abs()
                < 1e-15
        );
    }

    #[test]
    fn precession_loop_totals_hit_the_closed_form() {
        // γ̂ over a closed 2π loop is π cos θ0.
        for &theta0 in &[PI / 3.0, PI / 2.0] {
            let om_phi = 2.0 * PI; // duration 1.0 closes the loop
            let sample = precession_sampler(0.0, theta0, om_phi, 0.0);
            let run = integrate_phases(sample, 1.0, 2000, false).unwrap();
            let want = PI * theta0.cos();
            assert!(
                (run.totals.geometric_simple - want).abs() < 1e-7,
                "loop total {} vs {}",
                run.totals.geometric_simple,
                want
            );
            // Independent quadrature of the emitted series (trapezoid).
            let rows = &run.samples;
            let mut acc = 0.0;
            for w in rows.windows(2) {
                acc += 0.5 * (w[0].geometric_simple + w[1].geometric_simple) * (w[1].t - w[0].t);
            }
            assert!((acc - want).abs() < 1e-5);
        }
    }

    #[test]
    fn integration_guards() {
        let sample = precession_sampler(0.0, 1.0, 1.0, 0.0);
        assert!(matches!(
            integrate_phases(&sample, 1.0, 1, false),
            Err(PhaseError::TooFewSteps { steps: 1 })
        ));
        assert!(integrate_phases(&sample, 0.0, 10, false).is_err());
        // A degenerate sample aborts with the failing time attached.
        let failing = |t: f64| {
            if t > 0.5 {
                kinematics(
                    &(Multivector::one() + Multivector::sigma(3)),
                    &Multivector::ZERO,
                    None,
                )
            } else {
                kinematics(&Multivector::one(), &Multivector::ZERO, None)
            }
        };
        match integrate_phases(failing, 1.0, 4, false) {
            Err(PhaseError::Sample { t, .. }) => assert!(t > 0.5),
            other => panic!("expected sample failure, got {other:?}"),
        }
    }

    #[test]
    fn proper_time_flag_rescales_series_only() {
        let sample = precession_sampler(1.0, 1.0, 0.7, 0.2);
        let obs = integrate_phases(&sample, 1.0, 100, false).unwrap();
        let proper = integrate_phases(&sample, 1.0, 100, true).unwrap();
        assert!((obs.totals.dynamic_full - proper.totals.dynamic_full).abs() < 1e-14);
        let v0 = obs.samples[10].v0;
        assert!(
            (proper.samples[10].dynamic_full - obs.samples[10].dynamic_full * v0).abs() < 1e-14
        );
    }

    #[test]
    fn totals_tie_to_the_state_series() {
        // δ̂ + γ̂ = -Δχ/2 = totals.total.
        let sample = precession_sampler(0.8, 1.2, 0.9, 0.6);
        let run = integrate_phases(&sample, 2.0, 500, false).unwrap();
        assert!(
            (run.totals.dynamic_simple + run.totals.geometric_simple - run.totals.total).abs()
                < 1e-8
        );
        assert!(
            (run.totals.dynamic_full + run.totals.geometric_full - run.totals.total).abs() < 1e-8
        );
        assert!(run.totals.max_consistency_residual < 1e-8);
    }
}
