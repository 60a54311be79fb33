//! Gauge shifts psi -> psi·e^{I sigma3 alpha(t)} move phase between the
//! dynamic ledger and the fiber angle while the geometric ledger stays
//! put: delta_hat picks up exactly alpha(T) - alpha(0).
//!
//! Run with: cargo run --example gauge_shift

use std::f64::consts::PI;

use sta_phase::phase::{dynamic_rate_full, geometric_rate_full, integrate_phases};
use sta_phase::scenario::{boosted_precession, with_gauge_shift, Series, Trajectory, TrigTerm};
use sta_phase::spinor::Kinematics;

fn rates(k: &Kinematics) -> (f64, f64) {
    let s_dot = k.spin_rate();
    (
        dynamic_rate_full(k, &s_dot).expect("rate").total,
        geometric_rate_full(k, &s_dot).expect("rate").total,
    )
}

fn main() {
    let duration = 2.5;
    let base = boosted_precession(0.8, PI / 3.0, 1.0, duration).expect("valid scenario");
    let alpha = Series {
        trig: vec![TrigTerm {
            amp: 0.3,
            freq: 1.0,
            phase: 0.0,
        }],
        ..Series::default()
    };
    let shifted = Trajectory::new(with_gauge_shift(&base.curve, &alpha), duration)
        .expect("valid scenario");

    println!("alpha(t) = 0.3 sin t applied to a boosted precession curve");
    println!();

    // Pointwise: the dynamic rate shifts by alpha_dot, the geometric
    // rate does not move at all.
    println!(
        "{:>5} {:>13} {:>13} {:>12}",
        "t", "d(delta_dot)", "alpha_dot", "d(gamma_dot)"
    );
    for i in 0..=5 {
        let t = duration * i as f64 / 5.0;
        let (d0, g0) = rates(&base.kinematics_at(t).expect("sample"));
        let (d1, g1) = rates(&shifted.kinematics_at(t).expect("sample"));
        println!(
            "{t:>5.2} {:>13.9} {:>13.9} {:>12.2e}",
            d1 - d0,
            alpha.derivative(t),
            (g1 - g0).abs()
        );
    }
    println!();

    // Integrated: delta_hat moves by the endpoint difference of alpha.
    let steps = 1000;
    let run0 = integrate_phases(|t| base.kinematics_at(t), duration, steps, false)
        .expect("integrates");
    let run1 = integrate_phases(|t| shifted.kinematics_at(t), duration, steps, false)
        .expect("integrates");
    let expected = alpha.value(duration) - alpha.value(0.0);
    println!(
        "delta_hat shift = {:.9} (alpha(T) - alpha(0) = {expected:.9})",
        run1.totals.dynamic_full - run0.totals.dynamic_full
    );
    println!(
        "gamma_hat shift = {:+.2e}",
        run1.totals.geometric_full - run0.totals.geometric_full
    );
    println!(
        "chi change absorbs the rest: d(chi)/2 shift = {:.9}",
        (run1.totals.chi_change - run0.totals.chi_change) / 2.0
    );
}
