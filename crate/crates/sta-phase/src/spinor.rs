//! Dirac spinors as even multivectors: polar decomposition
//! ψ = (ρ e^{Iβ})^{1/2} R, the observables generated by the rotor part,
//! and per-sample kinematics along spinor trajectories.

use crate::error::SpinorError;
use crate::ga::Multivector;
use crate::rotor::{euler_from_spatial, split_boost_rotation, Rotor};
use crate::tol;

/// Polar data of an invertible spinor: ψ = √ρ · e^{Iβ/2} · R.
#[derive(Clone, Copy, Debug)]
pub struct SpinorPolar {
    /// Proper density ρ > 0.
    pub rho: f64,
    /// Duality angle β in (-π, π].
    pub beta: f64,
    /// Rotor factor.
    pub rotor: Rotor,
}

/// e^{Iβ/2} as a multivector (scalar + pseudoscalar; I² = -1).
pub fn duality_phase(beta: f64) -> Multivector {
    Multivector::scalar((beta / 2.0).cos()) + Multivector::pseudoscalar() * (beta / 2.0).sin()
}

/// Decomposes an even multivector into (ρ, β, R).
///
/// ψ rev(ψ) is automatically scalar + pseudoscalar for even input; its
/// complex magnitude must exceed [`tol::DEGENERATE`] for the rotor factor
/// to exist. β is the argument of that complex number, taken in (-π, π].
pub fn polar_decompose(psi: &Multivector) -> Result<SpinorPolar, SpinorError> {
    let scale = 1.0 + psi.norm_inf();
    let odd = psi.odd_part().norm_inf();
    if odd > tol::EXACT * scale {
        return Err(SpinorError::Ga(crate::error::GaError::NotEven {
            odd_norm: odd,
        }));
    }
    let q = *psi * psi.rev();
    let c0 = q.scalar_part();
    let c15 = q.pseudoscalar_part();
    let residual = (q - Multivector::scalar(c0) - Multivector::pseudoscalar() * c15).norm_inf();
    if residual > tol::TIGHT * (1.0 + q.norm_inf()) {
        return Err(SpinorError::NotADiracSpinor { residual });
    }
    let rho = c0.hypot(c15);
    if rho <= tol::DEGENERATE {
        return Err(SpinorError::Degenerate { magnitude: rho });
    }
    let mut beta = c15.atan2(c0);
    if beta == -std::f64::consts::PI {
        beta = std::f64::consts::PI;
    }
    let r = duality_phase(-beta) * *psi * rho.sqrt().recip();
    Ok(SpinorPolar {
        rho,
        beta,
        rotor: Rotor::try_new(r)?,
    })
}

/// Rebuilds ψ = √ρ e^{Iβ/2} R from polar data.
pub fn polar_compose(p: &SpinorPolar) -> Multivector {
    duality_phase(p.beta) * p.rotor.mv() * p.rho.sqrt()
}

/// Streamline velocity v = R γ0 rev(R); unit timelike, future pointing.
pub fn velocity(r: &Rotor) -> Multivector {
    r.rotate(&Multivector::gamma(0)).grade_part(1)
}

/// Spin vector s = ½ R γ3 rev(R); spacelike, orthogonal to the velocity.
pub fn spin_vector(r: &Rotor) -> Multivector {
    (r.rotate(&Multivector::gamma(3)) * 0.5).grade_part(1)
}

/// Spin bivector S = ½ R Iσ3 rev(R) = I s v.
pub fn spin_bivector(r: &Rotor) -> Multivector {
    (r.rotate(&Multivector::isigma(3)) * 0.5).grade_part(2)
}

/// Rotational velocity of a rotor curve from analytic derivatives:
/// Ω = 2 Ṙ rev(R), a bivector (reversion-antisymmetric part only).
pub fn angular_velocity_analytic(r: &Multivector, r_dot: &Multivector) -> Multivector {
    (*r_dot * r.rev() * 2.0).grade_part(2)
}

/// Rotational velocity by central differences with step halving.
///
/// Uses Richardson extrapolation of the two estimates; if they disagree
/// badly the curve is not smooth enough at `t` and a derivative error is
/// returned.
pub fn angular_velocity<F>(curve: F, t: f64, h: f64) -> Result<Multivector, SpinorError>
where
    F: Fn(f64) -> Multivector,
{
    let d = |h: f64| (curve(t + h) - curve(t - h)) * (0.5 / h);
    let coarse = d(h);
    let fine = d(h / 2.0);
    let disagreement = (coarse - fine).norm_inf();
    let scale = fine.norm_inf().max(1.0);
    if disagreement > 0.25 * scale {
        return Err(SpinorError::DerivativeUnstable {
            h,
            residual: disagreement,
        });
    }
    let r_dot = fine + (fine - coarse) * (1.0 / 3.0);
    Ok(angular_velocity_analytic(&curve(t), &r_dot))
}

/// Analytic path data a trajectory can carry alongside ψ(t): the
/// phase-stripped rotor R₀ = L·exp(-Iσ3 φ/2)exp(-Iσ2 θ/2), its derivative,
/// and the continuous fiber angle χ with its rate.
#[derive(Clone, Copy, Debug)]
pub struct PathFrames {
    pub r0: Multivector,
    pub r0_dot: Multivector,
    pub chi: f64,
    pub chi_dot: f64,
}

/// Everything the phase formulas consume at one trajectory sample.
#[derive(Clone, Copy, Debug)]
pub struct Kinematics {
    pub rho: f64,
    pub beta: f64,
    pub rho_dot: f64,
    pub beta_dot: f64,
    /// v = R γ0 rev(R).
    pub v: Multivector,
    /// s = ½ R γ3 rev(R).
    pub s: Multivector,
    /// S = ½ R Iσ3 rev(R).
    pub spin: Multivector,
    /// ϱ = ρ v·γ0 (observer-frame density for a unit streamline).
    pub varrho: f64,
    /// v·γ0.
    pub v0: f64,
    /// s·γ0.
    pub s0: f64,
    /// Relative velocity vector: grade-2 part of v γ0.
    pub v_spatial: Multivector,
    /// Relative spin vector: grade-2 part of s γ0.
    pub s_spatial: Multivector,
    /// Ω₀ = 2 Ṙ rev(R) for the full rotor.
    pub omega0_full: Multivector,
    /// ω₀ = 2 Ṙ₀ rev(R₀) for the phase-stripped rotor.
    pub omega0_path: Multivector,
    /// Fiber-angle rate χ̇: declared by the trajectory's frames when
    /// available, otherwise extracted from the boost/rotation split.
    pub chi_dot: f64,
    /// Accumulated fiber angle χ, when the trajectory declares it.
    pub chi: Option<f64>,
    /// Polar rotor at this sample.
    pub rotor: Rotor,
    /// Its time derivative.
    pub rotor_dot: Multivector,
}

impl Kinematics {
    /// Ṡ = ½(Ω₀ S - S Ω₀), the transport rate of the spin bivector.
    pub fn spin_rate(&self) -> Multivector {
        ((self.omega0_full * self.spin - self.spin * self.omega0_full) * 0.5).grade_part(2)
    }

    /// Mismatch between the carried χ̇ and the one implied by the two
    /// rotational velocities through (ω₀ - Ω₀)·S = -χ̇/2.
    pub fn fiber_consistency(&self) -> f64 {
        let implied = -2.0 * (self.omega0_path - self.omega0_full).scalar_product(&self.spin);
        self.chi_dot - implied
    }
}

/// Builds the full kinematic state from ψ and ψ̇ at one sample.
///
/// When the trajectory carries analytic [`PathFrames`], ω₀ comes straight
/// from them. Otherwise the rotor is split into boost times spatial
/// rotation and the fiber rate χ̇ is extracted from the spatial rotor's
/// Euler rates; near the gimbal band that extraction follows the same
/// φ := 0 convention as [`euler_from_spatial`].
pub fn kinematics(
    psi: &Multivector,
    psi_dot: &Multivector,
    frames: Option<&PathFrames>,
) -> Result<Kinematics, SpinorError> {
    let polar = polar_decompose(psi)?;
    let (rho, beta, r) = (polar.rho, polar.beta, polar.rotor);

    // d/dt (ψ rev(ψ)) = p + rev(p) keeps only grades 0 and 4.
    let p = *psi_dot * psi.rev();
    let c0 = (*psi * psi.rev()).scalar_part();
    let c15 = (*psi * psi.rev()).pseudoscalar_part();
    let c0_dot = 2.0 * p.scalar_part();
    let c15_dot = 2.0 * p.pseudoscalar_part();
    let rho_dot = (c0 * c0_dot + c15 * c15_dot) / rho;
    let beta_dot = (c0 * c15_dot - c15 * c0_dot) / (rho * rho);

    // Ṙ from the product rule on R = ρ^{-1/2} e^{-Iβ/2} ψ.
    let r_dot = r.mv() * (-rho_dot / (2.0 * rho))
        + Multivector::pseudoscalar() * r.mv() * (-beta_dot / 2.0)
        + duality_phase(-beta) * *psi_dot * rho.sqrt().recip();

    let v = velocity(&r);
    let s = spin_vector(&r);
    let spin = spin_bivector(&r);
    let v0 = v.coeff(0b0001);
    let s0 = s.coeff(0b0001);
    let v_spatial = (v * Multivector::gamma(0)).grade_part(2);
    let s_spatial = (s * Multivector::gamma(0)).grade_part(2);
    let omega0_full = angular_velocity_analytic(&r.mv(), &r_dot);

    let (omega0_path, chi_dot, chi) = match frames {
        Some(f) => (
            angular_velocity_analytic(&f.r0, &f.r0_dot),
            f.chi_dot,
            Some(f.chi),
        ),
        None => {
            let chi_dot = numeric_chi_dot(&r, &r_dot, &omega0_full)?;
            // ω₀ = Ω₀ + 2χ̇S: adding the fiber rate back along the spin
            // plane recovers the phase-stripped rotational velocity.
            let omega = (omega0_full + spin * (2.0 * chi_dot)).grade_part(2);
            (omega, chi_dot, None)
        }
    };

    Ok(Kinematics {
        rho,
        beta,
        rho_dot,
        beta_dot,
        v,
        s,
        spin,
        varrho: rho * v0,
        v0,
        s0,
        v_spatial,
        s_spatial,
        omega0_full,
        omega0_path,
        chi_dot,
        chi,
        rotor: r,
        rotor_dot: r_dot,
    })
}

/// χ̇ for a raw rotor curve: split R = L·U, transport the split's
/// derivative, and read the ZYZ fiber rate off Ω_U = 2 U̇ rev(U).
fn numeric_chi_dot(
    r: &Rotor,
    r_dot: &Multivector,
    omega0: &Multivector,
) -> Result<f64, SpinorError> {
    let (l, u) = split_boost_rotation(r)?;
    let v = velocity(r);
    let v_dot = ((*omega0 * v - v * *omega0) * 0.5).grade_part(1);
    let v0_dot = v_dot.coeff(0b0001);
    let v0 = v.coeff(0b0001);

    // L = (1 + v γ0)/d with d = sqrt(2(1+v0)).
    let d = (2.0 * (1.0 + v0)).sqrt();
    let n = Multivector::one() + v * Multivector::gamma(0);
    let l_dot = v_dot * Multivector::gamma(0) * d.recip() - n * (v0_dot / (d * d * d));
    debug_assert!(l
        .mv()
        .approx_eq(&(n * d.recip()), 1e-9 * (1.0 + n.norm_inf())));

    // U = rev(L) R.
    let u_dot = l_dot.rev() * r.mv() + l.mv().rev() * *r_dot;
    let omega_u = (u_dot * u.mv().rev() * 2.0).grade_part(2);
    let comp = |n: usize| -omega_u.scalar_product(&Multivector::isigma(n));

    let (angles, _) = euler_from_spatial(u.as_mv())?;
    let sin_theta = angles.theta.sin();
    if sin_theta.abs() < tol::GIMBAL {
        Ok(-comp(3))
    } else {
        Ok(-(angles.phi.cos() * comp(1) + angles.phi.sin() * comp(2)) / sin_theta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotor::{axis2_rotor, axis3_rotor, boost_rotor, euler_rotor};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn random_rotor(rng: &mut ChaCha8Rng) -> Rotor {
        let u = euler_rotor(
            rng.random_range(-PI..PI),
            rng.random_range(0.0..PI),
            rng.random_range(-PI..PI),
        );
        let l = boost_rotor([
            rng.random_range(-1.5..1.5),
            rng.random_range(-1.5..1.5),
            rng.random_range(-1.5..1.5),
        ]);
        l.compose(&u)
    }

    fn random_polar(rng: &mut ChaCha8Rng) -> SpinorPolar {
        SpinorPolar {
            rho: rng.random_range(0.2..3.0),
            beta: rng.random_range(-3.1..3.1),
            rotor: random_rotor(rng),
        }
    }

    #[test]
    fn polar_examples() {
        // ψ = 2 → (4, 0, 1).
        let p = polar_decompose(&Multivector::scalar(2.0)).unwrap();
        assert_eq!((p.rho, p.beta), (4.0, 0.0));
        assert!(p.rotor.mv().approx_eq(&Multivector::one(), 0.0));
        // ψ = I → (1, π, 1): pure duality rotation.
        let p = polar_decompose(&Multivector::pseudoscalar()).unwrap();
        assert_eq!((p.rho, p.beta), (1.0, PI));
        assert!(p.rotor.mv().approx_eq(&Multivector::one(), 1e-15));
        // Degenerate: (1 + σ3) has ψ rev(ψ) = 0.
        let null = Multivector::one() + Multivector::sigma(3);
        assert!(matches!(
            polar_decompose(&null),
            Err(SpinorError::Degenerate { .. })
        ));
        // Odd input is not a spinor.
        assert!(polar_decompose(&Multivector::gamma(2)).is_err());
    }

    #[test]
    fn polar_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..1000 {
            let p = random_polar(&mut rng);
            let psi = polar_compose(&p);
            let q = polar_decompose(&psi).unwrap();
            assert!((q.rho - p.rho).abs() < tol::TIGHT);
            assert!((q.beta - p.beta).abs() < tol::TIGHT);
            assert!(q.rotor.mv().approx_eq(&p.rotor.mv(), tol::TIGHT));
        }
    }

    #[test]
    fn observable_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..1000 {
            let r = random_rotor(&mut rng);
            let v = velocity(&r);
            let s = spin_vector(&r);
            let spin = spin_bivector(&r);
            // v v = 1.
            assert!(((v * v).scalar_part() - 1.0).abs() < tol::TIGHT);
            // s·v = 0.
            assert!(s.inner(&v).norm_inf() < tol::TIGHT);
            // S = I s v.
            let isv = (Multivector::pseudoscalar() * s * v).grade_part(2);
            assert!(spin.approx_eq(&isv, tol::TIGHT));
            // S·S = -1/4.
            assert!((spin.scalar_product(&spin) + 0.25).abs() < tol::TIGHT);
            // s² = -1/4 (spacelike, fixed magnitude).
            assert!(((s * s).scalar_part() + 0.25).abs() < tol::TIGHT);
            // s0 = (s_spatial · v_spatial)/v0.
            let v0 = v.coeff(0b0001);
            let s0 = s.coeff(0b0001);
            let vs = (v * Multivector::gamma(0)).grade_part(2);
            let ss = (s * Multivector::gamma(0)).grade_part(2);
            assert!((s0 - ss.scalar_product(&vs) / v0).abs() < tol::TIGHT);
        }
    }

    #[test]
    fn rest_frame_observables() {
        let r = Rotor::identity();
        assert!(velocity(&r).approx_eq(&Multivector::gamma(0), 0.0));
        assert!(spin_vector(&r).approx_eq(&(Multivector::gamma(3) * 0.5), 0.0));
        assert!(spin_bivector(&r).approx_eq(&(Multivector::isigma(3) * 0.5), 0.0));
    }

    #[test]
    fn observables_ignore_the_fiber_angle() {
        // R and R·exp(-Iσ3 χ/2) generate identical v, s, S.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..100 {
            let r = random_rotor(&mut rng);
            let chi = rng.random_range(-6.0..6.0);
            let r2 = Rotor::try_new(r.mv() * axis3_rotor(chi)).unwrap();
            assert!(velocity(&r2).approx_eq(&velocity(&r), tol::TIGHT));
            assert!(spin_vector(&r2).approx_eq(&spin_vector(&r), tol::TIGHT));
            assert!(spin_bivector(&r2).approx_eq(&spin_bivector(&r), tol::TIGHT));
        }
    }

    #[test]
    fn ray_phase_leaves_polar_data_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for _ in 0..100 {
            let p = random_polar(&mut rng);
            let psi = polar_compose(&p);
            let alpha = rng.random_range(-3.0..3.0);
            // Right phase factor e^{Iσ3 α} moves only the fiber angle.
            let shifted = psi * axis3_rotor(-2.0 * alpha);
            let q = polar_decompose(&shifted).unwrap();
            assert!((q.rho - p.rho).abs() < tol::TIGHT);
            assert!((q.beta - p.beta).abs() < tol::TIGHT);
            assert!(velocity(&q.rotor).approx_eq(&velocity(&p.rotor), tol::TIGHT));
            assert!(spin_bivector(&q.rotor).approx_eq(&spin_bivector(&p.rotor), tol::TIGHT));
        }
    }

    #[test]
    fn angular_velocity_finite_difference_oracle() {
        // R(t) = exp(-Iσ3 ω t/2) has Ω₀ = -Iσ3 ω.
        let omega = 1.7;
        let curve = move |t: f64| axis3_rotor(omega * t);
        let got = angular_velocity(curve, 0.4, 1e-4).unwrap();
        let want = Multivector::isigma(3) * -omega;
        assert!(got.approx_eq(&want, 1e-10));

        // Analytic route agrees.
        let r = axis3_rotor(omega * 0.4);
        let r_dot = Multivector::isigma(3) * (-omega / 2.0) * r;
        assert!(angular_velocity_analytic(&r, &r_dot).approx_eq(&want, 1e-14));

        // A jump makes the halved estimate double the coarse one, which
        // the step-halving screen flags. (A symmetric kink like |t| is
        // invisible to central differences, so a discontinuity is the
        // honest probe here.)
        let jump = |t: f64| axis3_rotor(if t < 0.25 { 0.4 * t } else { 0.4 * t + 1.0 });
        assert!(matches!(
            angular_velocity(jump, 0.25, 1e-3),
            Err(SpinorError::DerivativeUnstable { .. })
        ));
    }

    #[test]
    fn angular_velocity_is_reversion_antisymmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for _ in 0..100 {
            let r = random_rotor(&mut rng);
            // Tangent at r: r_dot = B r for a random bivector B.
            let b = Multivector::sigma(1) * rng.random_range(-1.0..1.0)
                + Multivector::isigma(2) * rng.random_range(-1.0..1.0)
                + Multivector::isigma(3) * rng.random_range(-1.0..1.0);
            let r_dot = b * r.mv();
            let omega = angular_velocity_analytic(&r.mv(), &r_dot);
            assert!((omega + omega.rev()).norm_inf() < tol::TIGHT);
            assert!(omega.approx_eq(&(b * 2.0).grade_part(2), tol::TIGHT));
        }
    }

    #[test]
    fn kinematics_routes_agree_off_gimbal() {
        // ψ(t) = L·euler(φ(t), θ0, χ(t)): compare the frames route with
        // the split-based numeric route for ω₀.
        let l = boost_rotor([0.2, -0.4, 0.8]);
        let (theta0, om_phi, om_chi) = (1.1, 0.9, -0.6);
        let psi_at = |t: f64| l.mv() * axis3_rotor(om_phi * t) * axis2_rotor(theta0) * axis3_rotor(om_chi * t);
        let psi_dot_at = |t: f64| {
            l.mv()
                * (Multivector::isigma(3) * (-om_phi / 2.0))
                * axis3_rotor(om_phi * t)
                * axis2_rotor(theta0)
                * axis3_rotor(om_chi * t)
                + l.mv()
                    * axis3_rotor(om_phi * t)
                    * axis2_rotor(theta0)
                    * (Multivector::isigma(3) * (-om_chi / 2.0))
                    * axis3_rotor(om_chi * t)
        };
        for &t in &[0.0, 0.3, 0.7, 1.9] {
            let r0 = l.mv() * axis3_rotor(om_phi * t) * axis2_rotor(theta0);
            let r0_dot =
                l.mv() * (Multivector::isigma(3) * (-om_phi / 2.0)) * axis3_rotor(om_phi * t) * axis2_rotor(theta0);
            let frames = PathFrames {
                r0,
                r0_dot,
                chi: om_chi * t,
                chi_dot: om_chi,
            };
            let with_frames = kinematics(&psi_at(t), &psi_dot_at(t), Some(&frames)).unwrap();
            let numeric = kinematics(&psi_at(t), &psi_dot_at(t), None).unwrap();
            assert!(with_frames
                .omega0_path
                .approx_eq(&numeric.omega0_path, 1e-9));
            assert!((with_frames.chi_dot - om_chi).abs() < 1e-9);
            assert!((numeric.chi_dot - om_chi).abs() < 1e-9);
            assert!(with_frames.fiber_consistency().abs() < 1e-9);
            assert!(with_frames.omega0_full.approx_eq(&numeric.omega0_full, 1e-12));
        }
    }

    #[test]
    fn beta_rate_is_recovered() {
        // ψ(t) = e^{I β(t)/2} L with β(t) = 0.3 + 0.8 t.
        let l = boost_rotor([0.0, 0.0, 1.0]);
        let beta_at = |t: f64| 0.3 + 0.8 * t;
        let psi = |t: f64| duality_phase(beta_at(t)) * l.mv();
        let psi_dot = |t: f64| {
            Multivector::pseudoscalar() * duality_phase(beta_at(t)) * l.mv() * (0.8 / 2.0)
        };
        let k = kinematics(&psi(0.5), &psi_dot(0.5), None).unwrap();
        assert!((k.beta - beta_at(0.5)).abs() < 1e-12);
        assert!((k.beta_dot - 0.8).abs() < 1e-12);
        assert!((k.rho - 1.0).abs() < 1e-12);
        assert!(k.rho_dot.abs() < 1e-12);
        // Constant rotor: both rotational velocities vanish.
        assert!(k.omega0_full.norm_inf() < 1e-12);
        assert!(k.omega0_path.norm_inf() < 1e-12);
    }
}
