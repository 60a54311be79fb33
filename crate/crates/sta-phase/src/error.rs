use thiserror::Error;

/// Errors from the core algebra layer.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GaError {
    #[error("grade {grade} is outside 0..=4")]
    GradeOutOfRange { grade: usize },
    #[error("multivector has odd-grade content (|odd| = {odd_norm:.3e}); expected an even element")]
    NotEven { odd_norm: f64 },
}

/// Errors from rotor construction and decomposition.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum RotorError {
    #[error("exp argument must be a pure bivector (off-grade norm {off_grade:.3e})")]
    NotABivector { off_grade: f64 },
    #[error("R rev(R) deviates from 1 by {residual:.3e}; not a rotor")]
    NotARotor { residual: f64 },
    #[error("rotor is not orthochronous (v0 = {v0:.6})")]
    NotOrthochronous { v0: f64 },
    #[error("boost/rotation split undefined: v·γ0 = {v0:.6} is too close to -1")]
    SplitSingular { v0: f64 },
    #[error("input is not a spatial rotor (does not fix γ0; residual {residual:.3e})")]
    NotSpatial { residual: f64 },
}

/// Errors from spinor decomposition and kinematics.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinorError {
    #[error("degenerate spinor: |ψ rev(ψ)| = {magnitude:.3e} below threshold")]
    Degenerate { magnitude: f64 },
    #[error("not a Dirac spinor: ψ rev(ψ) has grade-2 content {residual:.3e}")]
    NotADiracSpinor { residual: f64 },
    #[error(transparent)]
    Ga(#[from] GaError),
    #[error(transparent)]
    Rotor(#[from] RotorError),
    #[error("numerical derivative did not converge (h = {h:.3e}, disagreement {residual:.3e})")]
    DerivativeUnstable { h: f64, residual: f64 },
}

/// Errors from the Dirac-matrix bridge.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum BridgeError {
    #[error("matrix spinor normalization drifted: |Re(adj(R) Rdot)| = {residual:.3e}")]
    NormalizationDrift { residual: f64 },
    #[error(transparent)]
    Spinor(#[from] SpinorError),
}

/// Errors from phase-rate evaluation and integration.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum PhaseError {
    #[error("spinors are not on the same ray: residual {residual:.3e}")]
    NotCoray { residual: f64 },
    #[error("integration needs at least 2 steps, got {steps}")]
    TooFewSteps { steps: usize },
    #[error("non-finite value while integrating at t = {t}")]
    NonFinite { t: f64 },
    #[error("trajectory sample at t = {t} failed: {source}")]
    Sample { t: f64, source: SpinorError },
    #[error(transparent)]
    Spinor(#[from] SpinorError),
    #[error(transparent)]
    Rotor(#[from] RotorError),
    #[error(transparent)]
    Ga(#[from] GaError),
}

/// Errors from scenario construction and parsing.
#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("scenario file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("scenario schema violation: {message}")]
    Schema { message: String },
    #[error("parameter {name} = {value} is out of range: {requirement}")]
    ParamRange {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
    #[error("finite difference window [{lo}, {hi}] leaves the trajectory domain [0, {duration}]")]
    FdOutOfDomain { lo: f64, hi: f64, duration: f64 },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
