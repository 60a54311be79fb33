//! Rotor observables: proper velocity v, spin vector s, and spin
//! bivector S, with the exact relations among them.
//!
//! Run with: cargo run --example observables

use sta_phase::ga::Multivector;
use sta_phase::rotor::{boost_rotor, euler_rotor};
use sta_phase::spinor::{spin_bivector, spin_vector, velocity};

fn main() {
    let r = boost_rotor([0.3, -0.2, 0.8]).compose(&euler_rotor(0.5, 1.0, -0.7));

    let v = velocity(&r);
    let s = spin_vector(&r);
    let spin = spin_bivector(&r);

    println!("v  = {v:.4}");
    println!("s  = {s:.4}");
    println!("S  = {spin:.4}");
    println!();

    // v is a unit timelike vector, s is spacelike with s² = -1/4, and
    // they are orthogonal.
    println!("v²        = {:+.12}", (v * v).scalar_part());
    println!("s²        = {:+.12}", (s * s).scalar_part());
    println!("s·v       = {:+.2e}", s.inner(&v).norm_inf());

    // The spin bivector is the dual combination S = I s v and squares to
    // the constant -1/4 whatever the rotor.
    let isv = Multivector::pseudoscalar() * s * v;
    println!("‖S - Isv‖ = {:.2e}", (spin - isv).norm_inf());
    println!("⟨SS⟩      = {:+.12}", spin.scalar_product(&spin));

    // Frame-dependent pieces: energy component v⁰ and the relation
    // s⁰ = 𝐬·𝐯 / v⁰ tying the two time components together.
    let v0 = v.coeff(0b0001);
    let s0 = s.coeff(0b0001);
    let v_rel = (v * Multivector::gamma(0)).grade_part(2);
    let s_rel = (s * Multivector::gamma(0)).grade_part(2);
    println!();
    println!("v⁰ = {v0:.6}, s⁰ = {s0:.6}");
    println!("𝐬·𝐯/v⁰ = {:.6}", s_rel.scalar_product(&v_rel) / v0);
}
