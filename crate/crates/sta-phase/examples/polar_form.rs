//! The spinor polar form ψ = (ρ e^{Iβ})^{1/2} R: decomposition,
//! reconstruction, and the positron case β = π.
//!
//! Run with: cargo run --example polar_form

use sta_phase::ga::Multivector;
use sta_phase::rotor::{boost_rotor, euler_rotor};
use sta_phase::spinor::{polar_compose, polar_decompose, SpinorPolar};

fn main() {
    // A plain scalar is a spinor with ρ = scalar², β = 0, R = 1.
    let p = polar_decompose(&Multivector::scalar(2.0)).unwrap();
    println!("ψ = 2:   ρ = {:.3}, β = {:.3}", p.rho, p.beta);

    // The pseudoscalar decomposes to (1, π, 1): the positron signature.
    let p = polar_decompose(&Multivector::pseudoscalar()).unwrap();
    println!("ψ = I:   ρ = {:.3}, β = {:.3}", p.rho, p.beta);

    // A generic even element: build one from polar data and round-trip it.
    let original = SpinorPolar {
        rho: 1.7,
        beta: -0.9,
        rotor: euler_rotor(0.3, 1.2, -0.5)
            .compose(&boost_rotor([0.2, -0.4, 0.6])),
    };
    let psi = polar_compose(&original);
    let back = polar_decompose(&psi).unwrap();
    println!(
        "round trip: Δρ = {:.2e}, Δβ = {:.2e}, ΔR = {:.2e}",
        (back.rho - original.rho).abs(),
        (back.beta - original.beta).abs(),
        (back.rotor.mv() - original.rotor.mv()).norm_inf()
    );

    // ψ rev(ψ) reads the polar data directly: ρ e^{Iβ}.
    let self_product = psi * psi.rev();
    println!(
        "ψ rev(ψ) = {:.4} + I·{:.4}  (ρcosβ = {:.4}, ρsinβ = {:.4})",
        self_product.scalar_part(),
        self_product.pseudoscalar_part(),
        original.rho * original.beta.cos(),
        original.rho * original.beta.sin()
    );

    // Null even elements (ψ rev(ψ) = 0) have no polar form.
    let null = Multivector::one() + Multivector::sigma(3);
    match polar_decompose(&null) {
        Err(e) => println!("1 + σ3: {e}"),
        Ok(_) => unreachable!(),
    }
}
