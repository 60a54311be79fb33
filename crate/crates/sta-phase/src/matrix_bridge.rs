//! Bridge to the standard column-spinor formulation of Dirac theory.
//!
//! Even multivectors ψ correspond to column spinors Ψ = rep(ψ)u₀ with
//! u₀ = (1,0,0,0)ᵀ in the Dirac representation. The correspondence obeys
//!
//! * iΨ      ↔ ψ Iσ3
//! * γ̂5 Ψ    ↔ ψ σ3
//! * i γ̂5 Ψ  ↔ I ψ
//! * γ̂_μ Ψ   ↔ γ_μ ψ γ0
//!
//! Everything matrix-side runs on `nalgebra` complex matrices so it can
//! serve as an independent oracle for the multivector arithmetic.

use std::sync::OnceLock;

use nalgebra::{Matrix4, SMatrix, SVector, Vector4};
use num_complex::Complex;

use crate::error::BridgeError;
use crate::ga::{Multivector, BLADE_COUNT};
use crate::tol;

pub type C64 = Complex<f64>;
pub type CMat4 = Matrix4<C64>;
pub type CVec4 = Vector4<C64>;

fn cx(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// Masks of the eight even basis blades, ascending.
pub const EVEN_MASKS: [usize; 8] = [0x0, 0x3, 0x5, 0x6, 0x9, 0xa, 0xc, 0xf];

/// The Dirac representation: γ̂⁰ diagonal, γ̂5 = iγ̂⁰γ̂¹γ̂²γ̂³ block-off-diagonal.
pub struct GammaRep {
    upper: [CMat4; 4],
    gamma5: CMat4,
    blades: [CMat4; BLADE_COUNT],
}

impl GammaRep {
    /// Shared table of the standard matrices.
    pub fn standard() -> &'static GammaRep {
        static REP: OnceLock<GammaRep> = OnceLock::new();
        REP.get_or_init(|| {
            let o = cx(0.0, 0.0);
            let g0 = Matrix4::from_diagonal(&Vector4::new(
                cx(1.0, 0.0),
                cx(1.0, 0.0),
                cx(-1.0, 0.0),
                cx(-1.0, 0.0),
            ));
            let block = |s: [[C64; 2]; 2]| {
                let mut m = Matrix4::from_element(o);
                for r in 0..2 {
                    for c in 0..2 {
                        m[(r, c + 2)] = s[r][c];
                        m[(r + 2, c)] = -s[r][c];
                    }
                }
                m
            };
            let g1 = block([[o, cx(1.0, 0.0)], [cx(1.0, 0.0), o]]);
            let g2 = block([[o, cx(0.0, -1.0)], [cx(0.0, 1.0), o]]);
            let g3 = block([[cx(1.0, 0.0), o], [o, cx(-1.0, 0.0)]]);
            let gamma5 = (g0 * g1 * g2 * g3) * cx(0.0, 1.0);
            let upper = [g0, g1, g2, g3];
            // Images of the sixteen basis blades, built from the
            // lower-index generators in ascending factor order.
            let mut blades = [Matrix4::identity(); BLADE_COUNT];
            for (mask, slot) in blades.iter_mut().enumerate() {
                let mut m = Matrix4::identity();
                for (i, g) in upper.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        m *= if i == 0 { *g } else { -g };
                    }
                }
                *slot = m;
            }
            GammaRep {
                upper,
                gamma5,
                blades,
            }
        })
    }

    /// Upper-index matrix γ̂^μ.
    pub fn upper(&self, mu: usize) -> &CMat4 {
        &self.upper[mu]
    }

    /// Lower-index matrix γ̂_μ = η_{μμ} γ̂^μ.
    pub fn lower(&self, mu: usize) -> CMat4 {
        if mu == 0 {
            self.upper[0]
        } else {
            -self.upper[mu]
        }
    }

    pub fn gamma5(&self) -> &CMat4 {
        &self.gamma5
    }

    /// Matrix image of one basis blade.
    pub fn blade(&self, mask: usize) -> &CMat4 {
        &self.blades[mask]
    }

    /// Matrix image of a full multivector.
    pub fn rep(&self, m: &Multivector) -> CMat4 {
        let mut acc = Matrix4::from_element(cx(0.0, 0.0));
        for (mask, c) in m.coefficients().iter().enumerate() {
            if *c != 0.0 {
                acc += self.blades[mask] * cx(*c, 0.0);
            }
        }
        acc
    }
}

/// Reference column: Ψ = rep(ψ)u₀.
pub fn reference_spinor() -> CVec4 {
    Vector4::new(cx(1.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0), cx(0.0, 0.0))
}

struct Bridge {
    to8: SMatrix<f64, 8, 8>,
    from8: SMatrix<f64, 8, 8>,
}

fn pack(v: &CVec4) -> SVector<f64, 8> {
    SVector::<f64, 8>::from_fn(|i, _| {
        let z = v[i / 2];
        if i % 2 == 0 {
            z.re
        } else {
            z.im
        }
    })
}

fn unpack(v: &SVector<f64, 8>) -> CVec4 {
    Vector4::from_fn(|i, _| cx(v[2 * i], v[2 * i + 1]))
}

fn bridge() -> &'static Bridge {
    static BRIDGE: OnceLock<Bridge> = OnceLock::new();
    BRIDGE.get_or_init(|| {
        let rep = GammaRep::standard();
        let u0 = reference_spinor();
        let mut to8 = SMatrix::<f64, 8, 8>::zeros();
        for (col, mask) in EVEN_MASKS.iter().enumerate() {
            let image = pack(&(rep.blade(*mask) * u0));
            for row in 0..8 {
                to8[(row, col)] = image[row];
            }
        }
        let from8 = to8
            .try_inverse()
            .expect("even-subalgebra to column-spinor map must be a bijection");
        Bridge { to8, from8 }
    })
}

/// Maps an even multivector to its column spinor.
pub fn to_matrix_spinor(psi: &Multivector) -> Result<CVec4, BridgeError> {
    let odd = psi.odd_part().norm_inf();
    if odd > tol::EXACT * (1.0 + psi.norm_inf()) {
        return Err(BridgeError::Spinor(crate::error::SpinorError::Ga(
            crate::error::GaError::NotEven { odd_norm: odd },
        )));
    }
    let x = SVector::<f64, 8>::from_fn(|i, _| psi.coeff(EVEN_MASKS[i]));
    Ok(unpack(&(bridge().to8 * x)))
}

/// Inverse map: column spinor back to the even multivector.
pub fn from_matrix_spinor(m: &CVec4) -> Multivector {
    let x = bridge().from8 * pack(m);
    let mut out = Multivector::ZERO;
    for (i, mask) in EVEN_MASKS.iter().enumerate() {
        out.set_coeff(*mask, x[i]);
    }
    out
}

/// The multivector counterpart of γ̂_μ Ψ.
pub fn left_gamma_action(mu: usize, psi: &Multivector) -> Multivector {
    Multivector::gamma(mu) * *psi * Multivector::gamma(0)
}

/// ⟨Ψ|Φ⟩ = Ψ†Φ expressed in multivector arithmetic: the hermitian
/// adjoint is the frame-dependent γ0 ψ̃ γ0.
pub fn amplitude_hermitian(psi: &Multivector, phi: &Multivector) -> C64 {
    let q = psi.hermitian_adjoint() * *phi;
    cx(
        q.scalar_part(),
        -q.scalar_product(&Multivector::isigma(3)),
    )
}

/// Ψ̄Φ = Ψ†γ̂⁰Φ, the Lorentz-invariant pairing; multivector side uses
/// plain reversion.
pub fn amplitude_dirac(psi: &Multivector, phi: &Multivector) -> C64 {
    let q = psi.rev() * *phi;
    cx(
        q.scalar_part(),
        -q.scalar_product(&Multivector::isigma(3)),
    )
}

/// Chiral rotation on the multivector side: ψ → e^{Iα} ψ.
pub fn chiral_transform(psi: &Multivector, alpha: f64) -> Multivector {
    (Multivector::scalar(alpha.cos()) + Multivector::pseudoscalar() * alpha.sin()) * *psi
}

/// Chiral rotation on the matrix side: Ψ → e^{iγ̂5 α} Ψ.
pub fn matrix_chiral_transform(psi: &CVec4, alpha: f64) -> CVec4 {
    let rep = GammaRep::standard();
    psi * cx(alpha.cos(), 0.0) + rep.gamma5 * psi * cx(0.0, alpha.sin())
}

/// Pulls (ρ, β, 𝐑) out of a column spinor using only matrix invariants:
/// ρ cos β = Ψ̄Ψ, ρ sin β = -Ψ̄ iγ̂5 Ψ, 𝐑 = e^{-iγ̂5 β/2} Ψ / √ρ.
pub fn extract_matrix_rotor(psi: &CVec4) -> Result<(f64, f64, CVec4), BridgeError> {
    let rep = GammaRep::standard();
    let bar = |a: &CVec4, b: &CVec4| (rep.upper[0] * a).dotc(b);
    let rho_cos = bar(psi, psi).re;
    let rho_sin = -(bar(psi, &(rep.gamma5 * psi * cx(0.0, 1.0)))).re;
    let rho = rho_cos.hypot(rho_sin);
    if rho <= tol::DEGENERATE {
        return Err(BridgeError::Spinor(
            crate::error::SpinorError::Degenerate { magnitude: rho },
        ));
    }
    let mut beta = rho_sin.atan2(rho_cos);
    if beta == -std::f64::consts::PI {
        beta = std::f64::consts::PI;
    }
    let r = matrix_chiral_transform(psi, -beta / 2.0) / cx(rho.sqrt(), 0.0);
    Ok((rho, beta, r))
}

/// Phase rate of a unit rotor spinor: Im(𝐑̄ 𝐑̇). The real part must vanish
/// for a curve that stays on the rotor manifold; drift is reported.
pub fn matrix_phase_rate(r: &CVec4, r_dot: &CVec4) -> Result<f64, BridgeError> {
    let rep = GammaRep::standard();
    let q = (rep.upper[0] * r).dotc(r_dot);
    let scale = 1.0 + r_dot.norm();
    if q.re.abs() > tol::CHAIN * scale {
        return Err(BridgeError::NormalizationDrift { residual: q.re });
    }
    Ok(q.im)
}

/// Im(Ψ†Ψ̇) by pure matrix arithmetic; equals ϱ times the full dynamic
/// phase rate and anchors that identity as an independent oracle.
pub fn matrix_dynamic_density(
    psi: &Multivector,
    psi_dot: &Multivector,
) -> Result<f64, BridgeError> {
    let a = to_matrix_spinor(psi)?;
    let b = to_matrix_spinor(psi_dot)?;
    Ok(a.dotc(&b).im)
}

/// A spinor field over spacetime with analytic partial derivatives.
pub trait SpinorField {
    /// ψ(x) at event x = (t, x, y, z).
    fn psi(&self, x: [f64; 4]) -> Multivector;
    /// ∂_μ ψ at x.
    fn dpsi(&self, x: [f64; 4], mu: usize) -> Multivector;
}

/// Residual of the real Dirac equation
/// □ψ Iσ3 - e A ψ - m ψ γ0, with □ = γ^μ ∂_μ.
///
/// Vanishes identically on plane-wave solutions; its size measures how far
/// off shell a trial field sits.
pub fn dirac_residual<F: SpinorField>(
    field: &F,
    potential: Option<&dyn Fn([f64; 4]) -> Multivector>,
    e: f64,
    m: f64,
    x: [f64; 4],
) -> Multivector {
    let psi = field.psi(x);
    let mut acc = Multivector::ZERO;
    for mu in 0..4 {
        acc = acc + Multivector::gamma_upper(mu) * field.dpsi(x, mu);
    }
    let mut res = acc * Multivector::isigma(3) - psi * Multivector::gamma(0) * m;
    if let Some(a) = potential {
        res = res - a(x) * psi * e;
    }
    res
}
