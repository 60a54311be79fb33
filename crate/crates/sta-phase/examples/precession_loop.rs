//! Closed-loop geometric phase on the precession cone. One full turn
//! of phi at fixed opening angle theta0 accumulates the rotor-frame
//! geometric phase pi·cos(theta0), independent of how the traversal is
//! scheduled in time.
//!
//! Run with: cargo run --example precession_loop

use std::f64::consts::{PI, TAU};

use sta_phase::phase::integrate_phases;
use sta_phase::scenario::{precession_loop, EulerCurve, Series, Trajectory};

fn main() {
    let steps = 2000;

    println!(
        "{:>8} {:>14} {:>14} {:>10}",
        "theta0", "gamma_hat", "pi cos theta0", "diff"
    );
    for &theta0 in &[0.0, PI / 6.0, PI / 3.0, PI / 2.0, 2.0 * PI / 3.0, PI] {
        let traj = precession_loop(theta0, TAU, 1.0).expect("valid scenario");
        let run = integrate_phases(|t| traj.kinematics_at(t), 1.0, steps, false)
            .expect("integrates");
        let expected = PI * theta0.cos();
        println!(
            "{theta0:>8.4} {:>14.9} {expected:>14.9} {:>10.2e}",
            run.totals.geometric_full,
            (run.totals.geometric_full - expected).abs()
        );
    }
    println!();

    // chi never moves on this curve, so the dynamic phase is the exact
    // mirror of the geometric one.
    let traj = precession_loop(PI / 3.0, TAU, 1.0).expect("valid scenario");
    let run = integrate_phases(|t| traj.kinematics_at(t), 1.0, steps, false)
        .expect("integrates");
    println!(
        "theta0 = pi/3: delta_hat = {:.9}, gamma_hat = {:.9}, sum {:+.2e}",
        run.totals.dynamic_full,
        run.totals.geometric_full,
        run.totals.dynamic_full + run.totals.geometric_full
    );

    // The ray path closes but the rotor comes back to minus itself: the
    // double cover showing up as a 2pi phase ambiguity lives upstairs.
    let start = traj.sample(0.0).expect("sample").psi;
    let end = traj.sample(1.0).expect("sample").psi;
    println!(
        "double cover: |psi(T) + psi(0)| = {:.2e}, |psi(T) - psi(0)| = {:.3}",
        (end + start).norm_inf(),
        (end - start).norm_inf()
    );
    println!();

    // Same loop traversed on the schedule phi = 2pi·t²: the geometric
    // phase only sees the ray path, not the clock.
    let curve = EulerCurve {
        phi: Series {
            poly: vec![0.0, 0.0, TAU],
            ..Series::default()
        },
        theta: Series::constant(PI / 3.0),
        ..EulerCurve::default()
    };
    let reparam = Trajectory::new(curve, 1.0).expect("valid scenario");
    let rerun = integrate_phases(|t| reparam.kinematics_at(t), 1.0, steps, false)
        .expect("integrates");
    println!(
        "reparameterized phi = 2pi t^2: gamma_hat = {:.9} (shift {:.2e})",
        rerun.totals.geometric_full,
        (rerun.totals.geometric_full - run.totals.geometric_full).abs()
    );
}
