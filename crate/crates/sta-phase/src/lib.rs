//! Spacetime-algebra Dirac spinor kinematics and phase rates.
//!
//! The real Clifford algebra Cl(1,3) hosts Dirac spinors as even
//! multivectors ψ = (ρ e^{Iβ})^{1/2} R with a rotor R. This crate
//! implements that polar decomposition, the observables it generates
//! (velocity, spin vector, spin bivector), and the dynamic/geometric phase
//! rates of spinor trajectories, together with an independent Dirac-matrix
//! formulation used as a cross-check oracle throughout the test suite.
//!
//! The fastest way in is the examples directory; each one is runnable on
//! its own:
//!
//! ```text
//! cargo run -p sta-phase --example cayley_table
//! cargo run -p sta-phase --example rotors
//! cargo run -p sta-phase --example polar_form
//! cargo run -p sta-phase --example observables
//! cargo run -p sta-phase --example matrix_oracle
//! cargo run -p sta-phase --example phase_rates
//! cargo run -p sta-phase --example precession_loop
//! cargo run -p sta-phase --example plane_waves
//! cargo run -p sta-phase --example gauge_shift
//! cargo run -p sta-phase --example scenario_files
//! ```
//!
//! A thin CLI wraps the same machinery (`sta-phase phases|verify|table`);
//! see the README for the scenario file format.

pub mod error;
pub mod ga;
pub mod matrix_bridge;
pub mod phase;
pub mod report;
pub mod rotor;
pub mod scenario;
pub mod spinor;
pub mod tol;
pub mod verify;

pub use error::{BridgeError, GaError, PhaseError, RotorError, ScenarioError, SpinorError};
pub use ga::Multivector;
pub use rotor::Rotor;
