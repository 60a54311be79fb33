//! Full vs simplified phase-rate formulas. The two families agree
//! whenever the observer sees no spatial velocity; the cleanest curve
//! that separates them is a duality ramp under a constant boost, where
//! the gap has the closed form -(beta_dot/2)·tanh(b).
//!
//! Run with: cargo run --example phase_rates

use sta_phase::phase::{
    dynamic_rate_full, dynamic_rate_simple, geometric_rate_full, geometric_rate_simple,
    integrate_phases,
};
use sta_phase::scenario::beta_ramp;

fn main() {
    let rate = 0.4;
    let rapidity = 1.0f64;
    let duration = 2.0;
    let traj = beta_ramp(rate, rapidity, duration).expect("valid scenario");
    let gap = -(rate / 2.0) * rapidity.tanh();

    println!("beta(t) = {rate}·t under a constant z-boost of rapidity {rapidity}");
    println!("closed-form rate gap: -(beta_dot/2)·tanh(b) = {gap:.9}");
    println!();
    println!(
        "{:>5} {:>13} {:>13} {:>13} {:>13}",
        "t", "delta_full", "delta_simple", "gamma_full", "gamma_simple"
    );
    for i in 0..=4 {
        let t = duration * i as f64 / 4.0;
        let k = traj.kinematics_at(t).expect("sample");
        let s_dot = k.spin_rate();
        let df = dynamic_rate_full(&k, &s_dot).expect("rate");
        let gf = geometric_rate_full(&k, &s_dot).expect("rate");
        println!(
            "{t:>5.2} {:>13.9} {:>13.9} {:>13.9} {:>13.9}",
            df.total,
            dynamic_rate_simple(&k),
            gf.total,
            geometric_rate_simple(&k)
        );
    }
    println!();

    // The corrections in the two full rates are equal and opposite, so
    // both families sum to the same fiber rate -chi_dot/2 (here zero).
    let k = traj.kinematics_at(0.7).expect("sample");
    let s_dot = k.spin_rate();
    let df = dynamic_rate_full(&k, &s_dot).expect("rate");
    let gf = geometric_rate_full(&k, &s_dot).expect("rate");
    println!(
        "at t = 0.7: correction in delta {:+.9}, in gamma {:+.9}, family sums {:+.2e} / {:+.2e}",
        df.relativistic_correction,
        gf.relativistic_correction,
        df.total + gf.total,
        dynamic_rate_simple(&k) + geometric_rate_simple(&k)
    );
    println!();

    // Integrated totals: the full dynamic phase follows the closed form,
    // the simplified one stays at zero because the rotor never moves.
    let run = integrate_phases(|t| traj.kinematics_at(t), duration, 400, false)
        .expect("integrates");
    println!(
        "integrated delta_full   = {:>12.9} (closed form {:.9})",
        run.totals.dynamic_full,
        gap * duration
    );
    println!("integrated delta_simple = {:>12.9}", run.totals.dynamic_simple);
    println!(
        "ledger delta + gamma - (-d(chi)/2): {:+.2e}",
        run.totals.dynamic_full + run.totals.geometric_full - run.totals.total
    );
    println!();

    // Without the boost the observer rides with the wave and the
    // families collapse onto each other despite beta_dot != 0.
    let rest = beta_ramp(rate, 0.0, duration).expect("valid scenario");
    let mut worst = 0.0f64;
    for i in 0..=40 {
        let t = duration * i as f64 / 40.0;
        let k = rest.kinematics_at(t).expect("sample");
        let s_dot = k.spin_rate();
        let df = dynamic_rate_full(&k, &s_dot).expect("rate");
        worst = worst.max((df.total - dynamic_rate_simple(&k)).abs());
    }
    println!("zero boost: max |delta_full - delta_simple| over the grid = {worst:.2e}");
}
