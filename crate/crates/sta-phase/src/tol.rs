//! Numerical tolerances used across the crate.
//!
//! Every threshold that gates an invariant lives here so the verification
//! suite and the unit tests agree on what "equal" means at each level of
//! the computation chain.

/// Identities that hold to machine precision: structure-constant checks,
/// single closed-form products.
pub const EXACT: f64 = 1e-12;

/// Algebraic identities evaluated through a handful of products and a
/// decomposition (polar round trips, observable invariants).
pub const TIGHT: f64 = 1e-10;

/// Derivation-chain equalities that pass through derivatives of
/// decomposed quantities.
pub const CHAIN: f64 = 1e-8;

/// Quantities accumulated by the fixed-step integrator over a full
/// trajectory (phase ledgers, loop holonomies at 1e4 steps).
pub const INTEGRATED: f64 = 1e-6;

/// Magnitude below which ψ rev(ψ) counts as degenerate and the polar
/// decomposition refuses to divide.
pub const DEGENERATE: f64 = 1e-12;

/// Rotor unitarity drift allowed before construction fails.
pub const ROTOR_UNITY: f64 = 1e-10;

/// Off-grade contamination allowed in exp_bivector's argument and in the
/// pure-scalar-square test that selects a closed form.
pub const BIVECTOR_PURITY: f64 = 1e-14;

/// |sin θ| below which Euler extraction switches to the gimbal rule.
pub const GIMBAL: f64 = 1e-9;

/// Scalar-part magnitude below which the double-cover representative is
/// chosen by the secondary tie-break rules.
pub const SIGN_TIE: f64 = 1e-12;

/// Guard band for the boost/rotation split near the v·γ0 = -1 pole.
pub const SPLIT_SINGULAR: f64 = 1e-12;
