//! Rotors of Cl(1,3): bivector exponentials, Euler-angle and boost
//! constructors, the boost/rotation split, and Euler-angle extraction from
//! spatial rotors.
//!
//! Conventions: a rotor R is even with R rev(R) = 1 and acts two-sidedly,
//! c -> R c rev(R). Euler composition is ZYZ,
//! `exp(-Iσ3 φ/2) exp(-Iσ2 θ/2) exp(-Iσ3 χ/2)`, with θ in [0, π] and
//! φ, χ in (-π, π].

use serde::{Deserialize, Serialize};

use crate::error::RotorError;
use crate::ga::Multivector;
use crate::tol;

/// Exponential of a grade-2 multivector.
///
/// When B² is a pure scalar the closed trig/hyperbolic forms apply. A
/// general spacetime bivector has B² = scalar + pseudoscalar; that case
/// falls back to a truncated power series with scaling and squaring.
pub fn exp_bivector(b: &Multivector) -> Result<Multivector, RotorError> {
    let off = (*b - b.grade_part(2)).norm_inf();
    if off > tol::BIVECTOR_PURITY * (1.0 + b.norm_inf()) {
        return Err(RotorError::NotABivector { off_grade: off });
    }
    let b = b.grade_part(2);
    let sq = b * b;
    let s = sq.scalar_part();
    let p = sq.pseudoscalar_part();
    let scale = s.abs() + p.abs();

    if p.abs() <= tol::BIVECTOR_PURITY * (1.0 + scale) {
        if s < -tol::BIVECTOR_PURITY * (1.0 + scale) {
            // B² = -|B|²: rotation plane.
            let angle = (-s).sqrt();
            return Ok(Multivector::scalar(angle.cos()) + b * (angle.sin() / angle));
        }
        if s > tol::BIVECTOR_PURITY * (1.0 + scale) {
            // B² = +|B|²: boost plane.
            let rapidity = s.sqrt();
            return Ok(Multivector::scalar(rapidity.cosh()) + b * (rapidity.sinh() / rapidity));
        }
        // B² ≈ 0: the series below converges immediately.
    }
    Ok(exp_series(&b))
}

/// Scaled-and-squared truncated exponential series; valid for any even
/// argument, used when no closed form applies.
fn exp_series(b: &Multivector) -> Multivector {
    let mut halvings = 0u32;
    let mut scaled = *b;
    while scaled.norm_inf() >= 0.5 {
        scaled = scaled * 0.5;
        halvings += 1;
    }
    let mut sum = Multivector::one();
    let mut term = Multivector::one();
    for k in 1..=16 {
        term = term * scaled * (1.0 / k as f64);
        sum = sum + term;
    }
    for _ in 0..halvings {
        sum = sum * sum;
    }
    sum
}

/// Even multivector with R rev(R) = 1, proper and orthochronous.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RotorCoeffs", into = "RotorCoeffs")]
pub struct Rotor(Multivector);

impl Rotor {
    pub fn identity() -> Rotor {
        Rotor(Multivector::one())
    }

    /// Validates the rotor contract: even, R rev(R) = 1 within
    /// [`tol::ROTOR_UNITY`], and orthochronous (R γ0 rev(R) stays future
    /// pointing).
    pub fn try_new(m: Multivector) -> Result<Rotor, RotorError> {
        let odd = m.odd_part().norm_inf();
        if odd > tol::ROTOR_UNITY {
            return Err(RotorError::NotARotor { residual: odd });
        }
        let q = m * m.rev();
        let residual = (q - Multivector::one()).norm_inf();
        if residual > tol::ROTOR_UNITY {
            return Err(RotorError::NotARotor { residual });
        }
        let v0 = (m * Multivector::gamma(0) * m.rev()).coeff(0b0001);
        if v0 <= 0.0 {
            return Err(RotorError::NotOrthochronous { v0 });
        }
        Ok(Rotor(m))
    }

    /// For internally constructed values that satisfy the contract by
    /// algebra; checked in debug builds.
    pub(crate) fn new_unchecked(m: Multivector) -> Rotor {
        debug_assert!(
            (m * m.rev() - Multivector::one()).norm_inf() < 1e-8,
            "rotor contract violated"
        );
        Rotor(m)
    }

    #[inline]
    pub fn mv(&self) -> Multivector {
        self.0
    }

    #[inline]
    pub fn as_mv(&self) -> &Multivector {
        &self.0
    }

    pub fn reverse(&self) -> Rotor {
        Rotor(self.0.rev())
    }

    /// Rotor product (this applied after rhs when acting on the left).
    pub fn compose(&self, rhs: &Rotor) -> Rotor {
        Rotor(self.0 * rhs.0)
    }

    /// Two-sided action R c rev(R).
    pub fn rotate(&self, c: &Multivector) -> Multivector {
        self.0 * *c * self.0.rev()
    }

    /// Pulls R back onto the rotor manifold after integration drift:
    /// R / sqrt(<R rev(R)>_0).
    pub fn renormalized(&self) -> Rotor {
        let q = (self.0 * self.0.rev()).scalar_part();
        Rotor(self.0 * (1.0 / q.sqrt()))
    }
}

/// Free-function form of the two-sided rotor action.
pub fn rotate(c: &Multivector, r: &Rotor) -> Multivector {
    r.rotate(c)
}

/// Serialized rotor: the 8 even coefficients with blade labels.
#[derive(Serialize, Deserialize, Clone, Copy, Debug)]
#[serde(deny_unknown_fields)]
pub struct RotorCoeffs {
    pub scalar: f64,
    pub g01: f64,
    pub g02: f64,
    pub g03: f64,
    pub g12: f64,
    pub g13: f64,
    pub g23: f64,
    pub pseudo: f64,
}

impl From<Rotor> for RotorCoeffs {
    fn from(r: Rotor) -> RotorCoeffs {
        let m = r.mv();
        RotorCoeffs {
            scalar: m.coeff(0b0000),
            g01: m.coeff(0b0011),
            g02: m.coeff(0b0101),
            g03: m.coeff(0b1001),
            g12: m.coeff(0b0110),
            g13: m.coeff(0b1010),
            g23: m.coeff(0b1100),
            pseudo: m.coeff(0b1111),
        }
    }
}

impl TryFrom<RotorCoeffs> for Rotor {
    type Error = String;
    fn try_from(c: RotorCoeffs) -> Result<Rotor, String> {
        let mut m = Multivector::scalar(c.scalar);
        m.set_coeff(0b0011, c.g01);
        m.set_coeff(0b0101, c.g02);
        m.set_coeff(0b1001, c.g03);
        m.set_coeff(0b0110, c.g12);
        m.set_coeff(0b1010, c.g13);
        m.set_coeff(0b1100, c.g23);
        m.set_coeff(0b1111, c.pseudo);
        Rotor::try_new(m).map_err(|e| e.to_string())
    }
}

/// ZYZ Euler angles.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EulerAngles {
    pub phi: f64,
    pub theta: f64,
    pub chi: f64,
}

/// exp(-Iσ3 α/2): rotation about the 3-axis by α.
pub fn axis3_rotor(alpha: f64) -> Multivector {
    Multivector::scalar((alpha / 2.0).cos()) - Multivector::isigma(3) * (alpha / 2.0).sin()
}

/// exp(-Iσ2 α/2): rotation about the 2-axis by α.
pub fn axis2_rotor(alpha: f64) -> Multivector {
    Multivector::scalar((alpha / 2.0).cos()) - Multivector::isigma(2) * (alpha / 2.0).sin()
}

/// ZYZ Euler rotor `exp(-Iσ3 φ/2) exp(-Iσ2 θ/2) exp(-Iσ3 χ/2)`.
pub fn euler_rotor(phi: f64, theta: f64, chi: f64) -> Rotor {
    Rotor::new_unchecked(axis3_rotor(phi) * axis2_rotor(theta) * axis3_rotor(chi))
}

/// Pure boost `exp(-(b1 σ1 + b2 σ2 + b3 σ3)/2)` for rapidity vector b.
pub fn boost_rotor(b: [f64; 3]) -> Rotor {
    let mag = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
    if mag == 0.0 {
        return Rotor::identity();
    }
    let dir = Multivector::sigma(1) * (b[0] / mag)
        + Multivector::sigma(2) * (b[1] / mag)
        + Multivector::sigma(3) * (b[2] / mag);
    // dir² = +1, so the closed hyperbolic form is exact.
    let half = mag / 2.0;
    Rotor::new_unchecked(Multivector::scalar(half.cosh()) - dir * half.sinh())
}

/// Splits R = L·U into a pure boost L (taking γ0 to the rotor's velocity
/// vector) and a spatial rotor U that fixes γ0.
pub fn split_boost_rotation(r: &Rotor) -> Result<(Rotor, Rotor), RotorError> {
    let v = r.rotate(&Multivector::gamma(0));
    let v0 = v.coeff(0b0001);
    if v0 <= -1.0 + tol::SPLIT_SINGULAR {
        return Err(RotorError::SplitSingular { v0 });
    }
    let n = Multivector::one() + v * Multivector::gamma(0);
    let l = n * (1.0 / (2.0 * (1.0 + v0)).sqrt());
    let u = l.rev() * r.mv();
    Ok((Rotor::new_unchecked(l), Rotor::new_unchecked(u)))
}

/// Quaternion-style components (w, x, y, z) of a spatial rotor
/// U = w - x Iσ1 - y Iσ2 - z Iσ3 (so that the ZYZ parametrization reads
/// w = cos(θ/2)cos((φ+χ)/2), z = cos(θ/2)sin((φ+χ)/2),
/// y = sin(θ/2)cos((φ-χ)/2), x = -sin(θ/2)sin((φ-χ)/2)).
fn spatial_components(u: &Multivector) -> (f64, f64, f64, f64) {
    // Iσ1 = -e12(mask 0b1100), Iσ2 = +e10(0b1010), Iσ3 = -e6(0b0110).
    let w = u.scalar_part();
    let x = -(-u.coeff(0b1100));
    let y = -u.coeff(0b1010);
    let z = -(-u.coeff(0b0110));
    (w, x, y, z)
}

/// Inverse of [`euler_rotor`] up to the double cover.
///
/// Returns angles with θ in [0, π] and φ, χ in (-π, π], plus the sign s
/// such that `euler_rotor(angles) = s · U`. Near the gimbal axes
/// (|sin θ| < 1e-9) the azimuth is folded entirely into χ and φ is set to
/// zero. The representative is canonicalized to non-negative scalar part,
/// with <-Iσ3·U>_0 (then the remaining components) breaking exact ties.
pub fn euler_from_spatial(u: &Multivector) -> Result<(EulerAngles, f64), RotorError> {
    // A spatial rotor carries only {1, Iσn} components.
    let residual = u
        .coeff(0b0011)
        .abs()
        .max(u.coeff(0b0101).abs())
        .max(u.coeff(0b1001).abs())
        .max(u.coeff(0b1111).abs())
        .max(u.odd_part().norm_inf());
    if residual > tol::ROTOR_UNITY {
        return Err(RotorError::NotSpatial { residual });
    }
    let unit = (*u * u.rev() - Multivector::one()).norm_inf();
    if unit > tol::ROTOR_UNITY {
        return Err(RotorError::NotARotor { residual: unit });
    }

    let (mut w, mut x, mut y, mut z) = spatial_components(u);
    let mut sign = 1.0;
    let flip = |w: &mut f64, x: &mut f64, y: &mut f64, z: &mut f64, sign: &mut f64| {
        *w = -*w;
        *x = -*x;
        *y = -*y;
        *z = -*z;
        *sign = -*sign;
    };
    if w < 0.0 {
        flip(&mut w, &mut x, &mut y, &mut z, &mut sign);
    } else if w < tol::SIGN_TIE {
        // <-Iσ3·U>_0 = -z; make it non-negative, with y then x as deeper
        // deterministic tie-breaks.
        if -z < -tol::SIGN_TIE
            || (z.abs() <= tol::SIGN_TIE
                && (y < -tol::SIGN_TIE || (y.abs() <= tol::SIGN_TIE && x < 0.0)))
        {
            flip(&mut w, &mut x, &mut y, &mut z, &mut sign);
        }
    }

    let cos_half = (w * w + z * z).sqrt();
    let sin_half = (x * x + y * y).sqrt();
    let theta = 2.0 * sin_half.atan2(cos_half);
    let sin_theta = 2.0 * sin_half * cos_half;

    let (phi_raw, chi_raw) = if sin_theta < tol::GIMBAL {
        if cos_half >= sin_half {
            // θ ≈ 0: all azimuth into χ.
            (0.0, 2.0 * z.atan2(w))
        } else {
            // θ ≈ π: only φ-χ is defined; with φ := 0, χ = -2·atan2(-x, y).
            (0.0, -2.0 * (-x).atan2(y))
        }
    } else {
        let sum = z.atan2(w); // (φ+χ)/2
        let diff = (-x).atan2(y); // (φ-χ)/2
        (sum + diff, sum - diff)
    };

    // Each 2π wrap of a single angle flips the reconstructed rotor's sign.
    let (phi, flipped) = wrap_angle(phi_raw);
    if flipped {
        sign = -sign;
    }
    let (chi, flipped) = wrap_angle(chi_raw);
    if flipped {
        sign = -sign;
    }

    Ok((EulerAngles { phi, theta, chi }, sign))
}

/// Wraps into (-π, π]; reports whether a 2π shift was applied.
fn wrap_angle(a: f64) -> (f64, bool) {
    if a > std::f64::consts::PI {
        (a - 2.0 * std::f64::consts::PI, true)
    } else if a <= -std::f64::consts::PI {
        (a + 2.0 * std::f64::consts::PI, true)
    } else {
        (a, false)
    }
}
