//! Closed-form spinor trajectories: plane waves, precession loops,
//! boosted variants, and user-defined Euler-angle curves, all with exact
//! analytic derivatives so the phase integrals stay oracle-grade.

use serde::{Deserialize, Serialize};

use crate::error::{ScenarioError, SpinorError};
use crate::ga::Multivector;
use crate::matrix_bridge::SpinorField;
use crate::rotor::{axis2_rotor, axis3_rotor, boost_rotor, Rotor};
use crate::spinor::{duality_phase, kinematics, velocity, Kinematics, PathFrames};

/// One sinusoid `amp · sin(freq·t + phase)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrigTerm {
    pub amp: f64,
    pub freq: f64,
    #[serde(default)]
    pub phase: f64,
}

/// Scalar function of time built from a constant, a polynomial, and a
/// finite trig series, so value and derivative are both exact.
///
/// `value(t) = constant + Σ poly[k]·t^k + Σ amp·sin(freq·t + phase)`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Series {
    pub constant: f64,
    pub poly: Vec<f64>,
    pub trig: Vec<TrigTerm>,
}

impl Series {
    pub fn constant(c: f64) -> Series {
        Series {
            constant: c,
            ..Series::default()
        }
    }

    /// c·t.
    pub fn linear(rate: f64) -> Series {
        Series {
            poly: vec![0.0, rate],
            ..Series::default()
        }
    }

    pub fn value(&self, t: f64) -> f64 {
        let mut acc = self.constant;
        let mut tk = 1.0;
        for c in &self.poly {
            acc += c * tk;
            tk *= t;
        }
        for term in &self.trig {
            acc += term.amp * (term.freq * t + term.phase).sin();
        }
        acc
    }

    pub fn derivative(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        let mut tk = 1.0;
        for (k, c) in self.poly.iter().enumerate().skip(1) {
            acc += k as f64 * c * tk;
            tk *= t;
        }
        for term in &self.trig {
            acc += term.amp * term.freq * (term.freq * t + term.phase).cos();
        }
        acc
    }

    /// self + scale · other, merging polynomial and trig parts.
    pub fn plus_scaled(&self, other: &Series, scale: f64) -> Series {
        let mut poly = self.poly.clone();
        if poly.len() < other.poly.len() {
            poly.resize(other.poly.len(), 0.0);
        }
        for (k, c) in other.poly.iter().enumerate() {
            poly[k] += scale * c;
        }
        let mut trig = self.trig.clone();
        trig.extend(other.trig.iter().map(|term| TrigTerm {
            amp: scale * term.amp,
            freq: term.freq,
            phase: term.phase,
        }));
        Series {
            constant: self.constant + scale * other.constant,
            poly,
            trig,
        }
    }

    fn is_zero(&self) -> bool {
        self.constant == 0.0
            && self.poly.iter().all(|c| *c == 0.0)
            && self.trig.iter().all(|t| t.amp == 0.0)
    }
}

/// ψ(t) = Λ · e^{Iβ(t)/2} · L(b(t)) · e^{-Iσ3 φ/2} e^{-Iσ2 θ/2} e^{-Iσ3 χ/2}
/// with unit density, a fixed boost axis, and exact factor derivatives.
///
/// Without `initial_rotor` the boost/rotation split of the polar rotor is
/// the (L, φ, θ, χ) parameterization itself, so the curve carries analytic
/// [`PathFrames`]. A constant left factor Λ invalidates that split and
/// forces the numeric fiber-rate extraction.
#[derive(Clone, Debug)]
pub struct EulerCurve {
    pub beta: Series,
    pub boost_axis: [f64; 3],
    pub boost_mag: Series,
    pub phi: Series,
    pub theta: Series,
    pub chi: Series,
    pub initial_rotor: Option<Rotor>,
}

impl Default for EulerCurve {
    fn default() -> Self {
        EulerCurve {
            beta: Series::default(),
            boost_axis: [0.0, 0.0, 1.0],
            boost_mag: Series::default(),
            phi: Series::default(),
            theta: Series::default(),
            chi: Series::default(),
            initial_rotor: None,
        }
    }
}

impl EulerCurve {
    /// The five factors and their exact time derivatives at t.
    fn factors(&self, t: f64) -> [(Multivector, Multivector); 5] {
        let beta = self.beta.value(t);
        let duality = duality_phase(beta);
        let duality_dot =
            Multivector::pseudoscalar() * duality * (self.beta.derivative(t) / 2.0);

        let mag = self.boost_mag.value(t);
        let boost = boost_rotor([
            self.boost_axis[0] * mag,
            self.boost_axis[1] * mag,
            self.boost_axis[2] * mag,
        ])
        .mv();
        let sigma_axis = Multivector::sigma(1) * self.boost_axis[0]
            + Multivector::sigma(2) * self.boost_axis[1]
            + Multivector::sigma(3) * self.boost_axis[2];
        let boost_dot = sigma_axis * boost * (-self.boost_mag.derivative(t) / 2.0);

        let spin3 = |angle: f64, rate: f64| {
            let f = axis3_rotor(angle);
            (f, Multivector::isigma(3) * f * (-rate / 2.0))
        };
        let phi = spin3(self.phi.value(t), self.phi.derivative(t));
        let theta_f = axis2_rotor(self.theta.value(t));
        let theta = (
            theta_f,
            Multivector::isigma(2) * theta_f * (-self.theta.derivative(t) / 2.0),
        );
        let chi = spin3(self.chi.value(t), self.chi.derivative(t));

        [(duality, duality_dot), (boost, boost_dot), phi, theta, chi]
    }

    pub fn psi(&self, t: f64) -> Multivector {
        let f = self.factors(t);
        let mut acc = f[0].0;
        for (factor, _) in &f[1..] {
            acc = acc * *factor;
        }
        match &self.initial_rotor {
            Some(lambda) => lambda.mv() * acc,
            None => acc,
        }
    }

    /// Exact product-rule derivative of [`Self::psi`].
    pub fn psi_dot(&self, t: f64) -> Multivector {
        let f = self.factors(t);
        let mut acc = Multivector::ZERO;
        for i in 0..f.len() {
            let mut term = if i == 0 { f[0].1 } else { f[0].0 };
            for (j, (factor, factor_dot)) in f.iter().enumerate().skip(1) {
                term = term * if j == i { *factor_dot } else { *factor };
            }
            acc = acc + term;
        }
        match &self.initial_rotor {
            Some(lambda) => lambda.mv() * acc,
            None => acc,
        }
    }

    /// Analytic phase-stripped frames, absent when a left factor breaks
    /// the curve's own boost/rotation split.
    pub fn frames(&self, t: f64) -> Option<PathFrames> {
        if self.initial_rotor.is_some() {
            return None;
        }
        let f = self.factors(t);
        let r0 = f[1].0 * f[2].0 * f[3].0;
        let r0_dot = f[1].1 * f[2].0 * f[3].0 + f[1].0 * f[2].1 * f[3].0 + f[1].0 * f[2].0 * f[3].1;
        Some(PathFrames {
            r0,
            r0_dot,
            chi: self.chi.value(t),
            chi_dot: self.chi.derivative(t),
        })
    }
}

/// One sampled point of a trajectory.
#[derive(Clone, Debug)]
pub struct TrajectorySample {
    pub t: f64,
    pub psi: Multivector,
    pub psi_dot: Multivector,
    pub kinematics: Kinematics,
}

/// A curve together with its parameter span [0, duration].
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub curve: EulerCurve,
    pub duration: f64,
}

impl Trajectory {
    pub fn new(curve: EulerCurve, duration: f64) -> Result<Trajectory, ScenarioError> {
        if !(duration > 0.0 && duration.is_finite()) {
            return Err(ScenarioError::ParamRange {
                name: "duration",
                value: duration,
                requirement: "must be finite and > 0",
            });
        }
        Ok(Trajectory { curve, duration })
    }

    pub fn kinematics_at(&self, t: f64) -> Result<Kinematics, SpinorError> {
        kinematics(
            &self.curve.psi(t),
            &self.curve.psi_dot(t),
            self.curve.frames(t).as_ref(),
        )
    }

    pub fn sample(&self, t: f64) -> Result<TrajectorySample, SpinorError> {
        let psi = self.curve.psi(t);
        let psi_dot = self.curve.psi_dot(t);
        let kinematics = kinematics(&psi, &psi_dot, self.curve.frames(t).as_ref())?;
        Ok(TrajectorySample {
            t,
            psi,
            psi_dot,
            kinematics,
        })
    }

    /// Central difference (ψ(t+h) - ψ(t-h)) / 2h, checked against the
    /// trajectory domain.
    pub fn finite_difference_psi(&self, t: f64, h: f64) -> Result<Multivector, ScenarioError> {
        if h <= 0.0 {
            return Err(ScenarioError::ParamRange {
                name: "h",
                value: h,
                requirement: "must be > 0",
            });
        }
        let (lo, hi) = (t - h, t + h);
        if lo < 0.0 || hi > self.duration {
            return Err(ScenarioError::FdOutOfDomain {
                lo,
                hi,
                duration: self.duration,
            });
        }
        Ok((self.curve.psi(hi) - self.curve.psi(lo)) * (0.5 / h))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Particle {
    Electron,
    Positron,
}

fn require(name: &'static str, value: f64, ok: bool, requirement: &'static str) -> Result<(), ScenarioError> {
    if ok {
        Ok(())
    } else {
        Err(ScenarioError::ParamRange {
            name,
            value,
            requirement,
        })
    }
}

/// Rest-frame plane wave: electron ψ = e^{-Iσ3 m t}, positron
/// ψ = I e^{+Iσ3 m t}; both are exact solutions of the free Dirac
/// equation.
pub fn rest_plane_wave(
    mass: f64,
    particle: Particle,
    duration: f64,
) -> Result<Trajectory, ScenarioError> {
    boosted_plane_wave(mass, particle, 0.0, duration)
}

/// Plane wave boosted along z with rapidity b; on the observer's time
/// axis the fiber angle advances at 2m·cosh(b).
pub fn boosted_plane_wave(
    mass: f64,
    particle: Particle,
    rapidity: f64,
    duration: f64,
) -> Result<Trajectory, ScenarioError> {
    require("mass", mass, mass > 0.0, "must be > 0")?;
    let (beta, chi_rate) = match particle {
        Particle::Electron => (0.0, 2.0 * mass * rapidity.cosh()),
        Particle::Positron => (std::f64::consts::PI, -2.0 * mass * rapidity.cosh()),
    };
    Trajectory::new(
        EulerCurve {
            beta: Series::constant(beta),
            boost_mag: Series::constant(rapidity),
            chi: Series::linear(chi_rate),
            ..EulerCurve::default()
        },
        duration,
    )
}

/// Adiabatic-style cone precession: R₀(t) = e^{-Iσ3 ω_φ t/2} e^{-Iσ2 θ0/2}.
/// The loop closes in ray space when ω_φ·duration = 2π.
pub fn precession_loop(
    theta0: f64,
    omega_phi: f64,
    duration: f64,
) -> Result<Trajectory, ScenarioError> {
    require(
        "theta0",
        theta0,
        (0.0..=std::f64::consts::PI).contains(&theta0),
        "must lie in [0, pi]",
    )?;
    Trajectory::new(
        EulerCurve {
            phi: Series::linear(omega_phi),
            theta: Series::constant(theta0),
            ..EulerCurve::default()
        },
        duration,
    )
}

/// Precession seen from a z-boosted frame; full and simple phase
/// formulas separate here.
pub fn boosted_precession(
    rapidity: f64,
    theta0: f64,
    omega_phi: f64,
    duration: f64,
) -> Result<Trajectory, ScenarioError> {
    require("rapidity", rapidity, rapidity.abs() <= 5.0, "|b| must be <= 5")?;
    let mut traj = precession_loop(theta0, omega_phi, duration)?;
    traj.curve.boost_mag = Series::constant(rapidity);
    Ok(traj)
}

/// Constant boosted rotor with a linearly ramping duality angle
/// β(t) = rate·t; isolates the β̇ term of the relativistic correction.
pub fn beta_ramp(
    beta_rate: f64,
    rapidity: f64,
    duration: f64,
) -> Result<Trajectory, ScenarioError> {
    Trajectory::new(
        EulerCurve {
            beta: Series::linear(beta_rate),
            boost_mag: Series::constant(rapidity),
            ..EulerCurve::default()
        },
        duration,
    )
}

/// ψ → ψ·e^{Iσ3 α(t)}: shifts the fiber angle by -2α while leaving the
/// ray path untouched.
pub fn with_gauge_shift(curve: &EulerCurve, alpha: &Series) -> EulerCurve {
    let mut shifted = curve.clone();
    shifted.chi = curve.chi.plus_scaled(alpha, -2.0);
    shifted
}

/// Free plane-wave spinor field over spacetime, optionally detuned off
/// the mass shell.
#[derive(Clone, Debug)]
pub struct PlaneWaveField {
    pub particle: Particle,
    pub mass: f64,
    /// Frequency offset: the wave oscillates at (m + detune)·v.
    pub detune: f64,
    boost: Rotor,
    momentum: Multivector,
}

impl PlaneWaveField {
    pub fn new(
        particle: Particle,
        mass: f64,
        rapidity: [f64; 3],
        detune: f64,
    ) -> Result<PlaneWaveField, ScenarioError> {
        require("mass", mass, mass > 0.0, "must be > 0")?;
        let boost = boost_rotor(rapidity);
        let momentum = velocity(&boost) * (mass + detune);
        Ok(PlaneWaveField {
            particle,
            mass,
            detune,
            boost,
            momentum,
        })
    }

    /// p_μ x^μ with p_0 = p^0 and p_k = -p^k.
    fn phase(&self, x: [f64; 4]) -> f64 {
        let p = &self.momentum;
        p.coeff(0b0001) * x[0]
            - p.coeff(0b0010) * x[1]
            - p.coeff(0b0100) * x[2]
            - p.coeff(0b1000) * x[3]
    }

    fn lower_momentum(&self, mu: usize) -> f64 {
        let c = self.momentum.coeff(1 << mu);
        if mu == 0 {
            c
        } else {
            -c
        }
    }
}

impl SpinorField for PlaneWaveField {
    fn psi(&self, x: [f64; 4]) -> Multivector {
        let phase = self.phase(x);
        match self.particle {
            // L·e^{-Iσ3 p·x}
            Particle::Electron => self.boost.mv() * axis3_rotor(2.0 * phase),
            // I·L·e^{+Iσ3 p·x}
            Particle::Positron => {
                Multivector::pseudoscalar() * self.boost.mv() * axis3_rotor(-2.0 * phase)
            }
        }
    }

    fn dpsi(&self, x: [f64; 4], mu: usize) -> Multivector {
        let sign = match self.particle {
            Particle::Electron => -1.0,
            Particle::Positron => 1.0,
        };
        self.psi(x) * Multivector::isigma(3) * (sign * self.lower_momentum(mu))
    }
}

/// On-disk scenario description.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub kind: String,
    #[serde(default = "empty_params")]
    pub params: serde_json::Value,
    pub duration: f64,
    pub steps: usize,
}

fn empty_params() -> serde_json::Value {
    serde_json::Value::Object(serde_json::Map::new())
}

/// A parsed scenario: the runnable trajectory plus the echo of its
/// source description for reports.
#[derive(Clone, Debug)]
pub struct ParsedScenario {
    pub trajectory: Trajectory,
    pub steps: usize,
    pub echo: ScenarioFile,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PlaneWaveParams {
    mass: f64,
    #[serde(default = "default_particle")]
    particle: Particle,
    #[serde(default)]
    rapidity: f64,
}

fn default_particle() -> Particle {
    Particle::Electron
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PrecessionParams {
    theta0: f64,
    omega_phi: f64,
    #[serde(default)]
    rapidity: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BetaRampParams {
    beta_rate: f64,
    #[serde(default = "default_ramp_rapidity")]
    rapidity: f64,
}

fn default_ramp_rapidity() -> f64 {
    1.0
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, default)]
struct CustomEulerParams {
    beta: Series,
    boost_axis: [f64; 3],
    boost_mag: Series,
    phi: Series,
    theta: Series,
    chi: Series,
    initial_rotor: Option<Rotor>,
}

impl Default for CustomEulerParams {
    fn default() -> Self {
        CustomEulerParams {
            beta: Series::default(),
            boost_axis: [0.0, 0.0, 1.0],
            boost_mag: Series::default(),
            phi: Series::default(),
            theta: Series::default(),
            chi: Series::default(),
            initial_rotor: None,
        }
    }
}

fn params_for<T: serde::de::DeserializeOwned>(
    kind: &str,
    params: serde_json::Value,
) -> Result<T, ScenarioError> {
    serde_json::from_value(params).map_err(|e| ScenarioError::Schema {
        message: format!("params for kind '{kind}': {e}"),
    })
}

/// Builds the trajectory described by a scenario file.
pub fn build_scenario(file: &ScenarioFile) -> Result<ParsedScenario, ScenarioError> {
    if file.steps < 2 {
        return Err(ScenarioError::ParamRange {
            name: "steps",
            value: file.steps as f64,
            requirement: "must be >= 2",
        });
    }
    let params = file.params.clone();
    let trajectory = match file.kind.as_str() {
        "rest_plane_wave" => {
            let p: PlaneWaveParams = params_for(&file.kind, params)?;
            require("rapidity", p.rapidity, p.rapidity == 0.0, "rest wave has no boost")?;
            rest_plane_wave(p.mass, p.particle, file.duration)?
        }
        "boosted_plane_wave" => {
            let p: PlaneWaveParams = params_for(&file.kind, params)?;
            boosted_plane_wave(p.mass, p.particle, p.rapidity, file.duration)?
        }
        "precession_loop" => {
            let p: PrecessionParams = params_for(&file.kind, params)?;
            require("rapidity", p.rapidity, p.rapidity == 0.0, "use boosted_precession for b != 0")?;
            precession_loop(p.theta0, p.omega_phi, file.duration)?
        }
        "boosted_precession" => {
            let p: PrecessionParams = params_for(&file.kind, params)?;
            boosted_precession(p.rapidity, p.theta0, p.omega_phi, file.duration)?
        }
        "beta_ramp" => {
            let p: BetaRampParams = params_for(&file.kind, params)?;
            beta_ramp(p.beta_rate, p.rapidity, file.duration)?
        }
        "custom_euler" => {
            let p: CustomEulerParams = params_for(&file.kind, params)?;
            let axis_norm =
                (p.boost_axis.iter().map(|a| a * a).sum::<f64>()).sqrt();
            if axis_norm == 0.0 && !p.boost_mag.is_zero() {
                return Err(ScenarioError::Schema {
                    message: "custom_euler: boost_mag given with a zero boost_axis".into(),
                });
            }
            Trajectory::new(
                EulerCurve {
                    beta: p.beta,
                    boost_axis: p.boost_axis,
                    boost_mag: p.boost_mag,
                    phi: p.phi,
                    theta: p.theta,
                    chi: p.chi,
                    initial_rotor: p.initial_rotor,
                },
                file.duration,
            )?
        }
        other => {
            return Err(ScenarioError::Schema {
                message: format!(
                    "unknown scenario kind '{other}' (expected rest_plane_wave, \
                     boosted_plane_wave, precession_loop, boosted_precession, \
                     beta_ramp, or custom_euler)"
                ),
            })
        }
    };
    Ok(ParsedScenario {
        trajectory,
        steps: file.steps,
        echo: file.clone(),
    })
}

/// Parses scenario JSON text.
pub fn parse_scenario(text: &str) -> Result<ParsedScenario, ScenarioError> {
    let file: ScenarioFile = serde_json::from_str(text)?;
    build_scenario(&file)
}
