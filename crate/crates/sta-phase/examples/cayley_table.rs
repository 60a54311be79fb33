//! Dump the 16x16 structure-constant table and spot-check a few products
//! against hand results.
//!
//! Run with: cargo run --example cayley_table

use sta_phase::ga::{blade_grade, cayley_entry, cayley_table_text, Multivector};

fn main() {
    print!("{}", cayley_table_text());
    println!();

    // Blade e3 = γ0γ1, e5 = γ0γ2 and so on; the hex digit is the bit mask
    // over the generators.
    let (mask, sign) = cayley_entry(0b0011, 0b0101);
    println!("(γ0γ1)(γ0γ2) = {}e{:x}, grade {}", if sign > 0 { '+' } else { '-' }, mask, blade_grade(mask));

    // Generator squares carry the metric (+,-,-,-).
    for mu in 0..4 {
        let g = Multivector::gamma(mu);
        println!("γ{mu}² = {:+.0}", (g * g).scalar_part());
    }

    // The pseudoscalar squares to -1 and anticommutes with vectors.
    let i = Multivector::pseudoscalar();
    println!("I² = {:+.0}", (i * i).scalar_part());
    let anti = i * Multivector::gamma(2) + Multivector::gamma(2) * i;
    println!("Iγ2 + γ2I = 0 holds: {}", anti.norm_inf() == 0.0);

    // Relative vectors σk = γk γ0 square to +1 like Pauli matrices.
    let s1 = Multivector::sigma(1);
    let s2 = Multivector::sigma(2);
    println!("σ1² = {:+.0}", (s1 * s1).scalar_part());
    println!("σ1σ2 = Iσ3 holds: {}", (s1 * s2 - Multivector::isigma(3)).norm_inf() == 0.0);
}
