//! Real Clifford algebra Cl(1,3) on a flat coefficient array.
//!
//! Basis blades are indexed by a 4-bit mask: bit `i` set means generator
//! `γ_i` is present, factors in ascending index order. Mask `0b0000` is the
//! scalar, `0b1111` the pseudoscalar `I = γ0γ1γ2γ3`. The metric is
//! (+,-,-,-).
//!
//! All products run off a structure-constant table computed at compile
//! time; [`cayley_table_text`] dumps it in a form that can be checked by
//! eye or diffed against an independent representation.

use crate::error::GaError;

pub const BLADE_COUNT: usize = 16;

/// Diagonal metric for the generators γ0..γ3.
pub const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

const METRIC_SIGN: [i8; 4] = [1, -1, -1, -1];

/// Sign from reordering the concatenation of two ascending blades into
/// ascending order (counts generator transpositions).
const fn perm_sign(a: u8, b: u8) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Full structure constant: sign of `blade(a) * blade(b)`; the product
/// lands on blade `a ^ b`.
const fn product_sign(a: u8, b: u8) -> i8 {
    let mut sign = perm_sign(a, b);
    let mut common = a & b;
    while common != 0 {
        let i = common.trailing_zeros() as usize;
        sign *= METRIC_SIGN[i];
        common &= common - 1;
    }
    sign
}

const fn build_cayley() -> [[i8; BLADE_COUNT]; BLADE_COUNT] {
    let mut table = [[0i8; BLADE_COUNT]; BLADE_COUNT];
    let mut a = 0;
    while a < BLADE_COUNT {
        let mut b = 0;
        while b < BLADE_COUNT {
            table[a][b] = product_sign(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    table
}

/// `CAYLEY[a][b]` is the sign of `blade(a)·blade(b)`; the target blade is
/// always `a ^ b`.
pub const CAYLEY: [[i8; BLADE_COUNT]; BLADE_COUNT] = build_cayley();

/// Grade of a basis blade (number of generators present).
#[inline]
pub const fn blade_grade(mask: usize) -> usize {
    (mask as u32).count_ones() as usize
}

/// Structure constant lookup: target blade mask and sign of the product of
/// two basis blades.
#[inline]
pub fn cayley_entry(a: usize, b: usize) -> (usize, i8) {
    (a ^ b, CAYLEY[a][b])
}

/// Reversion sign per grade: (-1)^(k(k-1)/2).
const REVERSION_SIGN: [f64; 5] = [1.0, 1.0, -1.0, -1.0, 1.0];

/// General element of Cl(1,3).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Multivector {
    c: [f64; BLADE_COUNT],
}

impl Multivector {
    pub const ZERO: Multivector = Multivector {
        c: [0.0; BLADE_COUNT],
    };

    #[inline]
    pub fn from_coefficients(c: [f64; BLADE_COUNT]) -> Self {
        Multivector { c }
    }

    #[inline]
    pub fn coefficients(&self) -> &[f64; BLADE_COUNT] {
        &self.c
    }

    #[inline]
    pub fn scalar(x: f64) -> Self {
        let mut m = Self::ZERO;
        m.c[0] = x;
        m
    }

    pub fn one() -> Self {
        Self::scalar(1.0)
    }

    /// Single basis blade with the given mask and weight 1.
    pub fn basis(mask: usize) -> Self {
        assert!(mask < BLADE_COUNT, "blade mask out of range");
        let mut m = Self::ZERO;
        m.c[mask] = 1.0;
        m
    }

    /// Generator γ_μ.
    pub fn gamma(mu: usize) -> Self {
        assert!(mu < 4, "generator index out of range");
        Self::basis(1 << mu)
    }

    /// Index-raised generator: γ^0 = γ0, γ^n = -γn.
    pub fn gamma_upper(mu: usize) -> Self {
        Self::gamma(mu) * METRIC[mu]
    }

    /// Pseudoscalar I = γ0γ1γ2γ3.
    pub fn pseudoscalar() -> Self {
        Self::basis(0b1111)
    }

    /// Relative (Pauli) frame vector σ_n = γ_n γ_0, n in 1..=3.
    pub fn sigma(n: usize) -> Self {
        assert!((1..=4).contains(&n) && n != 4, "sigma index must be 1..=3");
        Self::gamma(n) * Self::gamma(0)
    }

    /// Spatial bivector I σ_n.
    pub fn isigma(n: usize) -> Self {
        Self::pseudoscalar() * Self::sigma(n)
    }

    /// Vector from contravariant components v^μ.
    pub fn vector(v: [f64; 4]) -> Self {
        let mut m = Self::ZERO;
        for (mu, x) in v.into_iter().enumerate() {
            m.c[1 << mu] = x;
        }
        m
    }

    #[inline]
    pub fn coeff(&self, mask: usize) -> f64 {
        self.c[mask]
    }

    #[inline]
    pub fn set_coeff(&mut self, mask: usize, value: f64) {
        self.c[mask] = value;
    }

    #[inline]
    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    #[inline]
    pub fn pseudoscalar_part(&self) -> f64 {
        self.c[15]
    }

    /// Contravariant vector components (grade-1 part only).
    pub fn vector_components(&self) -> [f64; 4] {
        [self.c[1], self.c[2], self.c[4], self.c[8]]
    }

    /// Geometric product.
    pub fn gp(&self, rhs: &Multivector) -> Multivector {
        let mut out = Multivector::ZERO;
        for a in 0..BLADE_COUNT {
            let ca = self.c[a];
            if ca == 0.0 {
                continue;
            }
            for b in 0..BLADE_COUNT {
                let cb = rhs.c[b];
                if cb == 0.0 {
                    continue;
                }
                out.c[a ^ b] += ca * cb * CAYLEY[a][b] as f64;
            }
        }
        out
    }

    /// Grade-lowering inner product: per homogeneous pair of grades (j, k)
    /// keeps the grade-|j-k| part of the geometric product. For two vectors
    /// this is the symmetric scalar ½(ab+ba); for two bivectors the scalar
    /// part of ab.
    pub fn inner(&self, rhs: &Multivector) -> Multivector {
        let mut out = Multivector::ZERO;
        for a in 0..BLADE_COUNT {
            let ca = self.c[a];
            if ca == 0.0 {
                continue;
            }
            for b in 0..BLADE_COUNT {
                let cb = rhs.c[b];
                if cb == 0.0 {
                    continue;
                }
                let target = a ^ b;
                let want = blade_grade(a).abs_diff(blade_grade(b));
                if blade_grade(target) == want {
                    out.c[target] += ca * cb * CAYLEY[a][b] as f64;
                }
            }
        }
        out
    }

    /// Grade-raising outer product: keeps the grade-(j+k) part per pair.
    pub fn outer(&self, rhs: &Multivector) -> Multivector {
        let mut out = Multivector::ZERO;
        for a in 0..BLADE_COUNT {
            let ca = self.c[a];
            if ca == 0.0 {
                continue;
            }
            for b in 0..BLADE_COUNT {
                let cb = rhs.c[b];
                if cb == 0.0 {
                    continue;
                }
                // Disjoint masks <=> no metric contraction <=> grade adds.
                if a & b == 0 {
                    out.c[a ^ b] += ca * cb * CAYLEY[a][b] as f64;
                }
            }
        }
        out
    }

    /// Scalar part of the geometric product, as a number.
    pub fn scalar_product(&self, rhs: &Multivector) -> f64 {
        let mut acc = 0.0;
        for a in 0..BLADE_COUNT {
            let ca = self.c[a];
            if ca != 0.0 {
                // blade(a)·blade(b) is scalar only when b == a.
                acc += ca * rhs.c[a] * CAYLEY[a][a] as f64;
            }
        }
        acc
    }

    /// Projection onto grade k. k outside 0..=4 is a domain error.
    pub fn grade_projection(&self, k: usize) -> Result<Multivector, GaError> {
        if k > 4 {
            return Err(GaError::GradeOutOfRange { grade: k });
        }
        let mut out = Multivector::ZERO;
        for mask in 0..BLADE_COUNT {
            if blade_grade(mask) == k {
                out.c[mask] = self.c[mask];
            }
        }
        Ok(out)
    }

    #[inline]
    pub fn grade_part(&self, k: usize) -> Multivector {
        self.grade_projection(k).expect("grade in range")
    }

    /// Reversion: sign (-1)^(k(k-1)/2) per grade. rev(I) = +I here; the
    /// relabeled Pauli view has its own reversion.
    pub fn rev(&self) -> Multivector {
        let mut out = *self;
        for mask in 0..BLADE_COUNT {
            out.c[mask] *= REVERSION_SIGN[blade_grade(mask)];
        }
        out
    }

    /// Hermitian adjoint ψ† = γ0 · rev(ψ) · γ0.
    pub fn hermitian_adjoint(&self) -> Multivector {
        let g0 = Multivector::gamma(0);
        g0.gp(&self.rev()).gp(&g0)
    }

    pub fn is_even(&self, tol: f64) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(mask, &x)| blade_grade(mask) % 2 == 0 || x.abs() <= tol)
    }

    /// Even-grade part (grades 0, 2, 4).
    pub fn even_part(&self) -> Multivector {
        let mut out = Multivector::ZERO;
        for mask in 0..BLADE_COUNT {
            if blade_grade(mask) % 2 == 0 {
                out.c[mask] = self.c[mask];
            }
        }
        out
    }

    /// Odd-grade part (grades 1, 3).
    pub fn odd_part(&self) -> Multivector {
        *self - self.even_part()
    }

    /// Largest coefficient magnitude.
    pub fn norm_inf(&self) -> f64 {
        self.c.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    /// Euclidean norm of the coefficient vector (coordinate norm, not the
    /// algebra's indefinite magnitude).
    pub fn coeff_norm(&self) -> f64 {
        self.c.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn approx_eq(&self, rhs: &Multivector, tol: f64) -> bool {
        (*self - *rhs).norm_inf() <= tol
    }

    /// Reinterpret an even multivector in the Pauli basis {1, σn, Iσn, I}.
    /// Errors when odd-grade coefficients are present.
    pub fn pauli_view(&self) -> Result<PauliView, GaError> {
        let odd = self.odd_part().norm_inf();
        if odd > 1e-12 * (1.0 + self.norm_inf()) {
            return Err(GaError::NotEven { odd_norm: odd });
        }
        Ok(PauliView::from_even(self))
    }
}

impl std::ops::Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        let mut out = self;
        for i in 0..BLADE_COUNT {
            out.c[i] += rhs.c[i];
        }
        out
    }
}

impl std::ops::Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        let mut out = self;
        for i in 0..BLADE_COUNT {
            out.c[i] -= rhs.c[i];
        }
        out
    }
}

impl std::ops::Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self * -1.0
    }
}

impl std::ops::Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.gp(&rhs)
    }
}

impl std::ops::Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        let mut out = self;
        for i in 0..BLADE_COUNT {
            out.c[i] *= rhs;
        }
        out
    }
}

impl std::ops::Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs * self
    }
}

impl std::fmt::Display for Multivector {
    /// Sparse blade expansion such as `0.5 e0 - 1 e3`, or `0` when every
    /// coefficient vanishes. Honors the float precision flag (`{:.3}`).
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (mask, &c) in self.c.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            }
            match f.precision() {
                Some(p) => write!(f, "{:.p$} {}", c.abs(), blade_label(mask))?,
                None => write!(f, "{} {}", c.abs(), blade_label(mask))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Blade label of the form `e<mask-hex>`, e.g. `e0` for the scalar, `ef`
/// for the pseudoscalar.
pub fn blade_label(mask: usize) -> String {
    format!("e{mask:x}")
}

/// Text dump of the structure constants: 16 rows (left factor) by 16
/// columns (right factor), entries `+e<hex>` / `-e<hex>`, row-major.
pub fn cayley_table_text() -> String {
    let mut out = String::new();
    for a in 0..BLADE_COUNT {
        let mut row = Vec::with_capacity(BLADE_COUNT);
        for b in 0..BLADE_COUNT {
            let (target, sign) = cayley_entry(a, b);
            let sign = if sign >= 0 { '+' } else { '-' };
            row.push(format!("{sign}{}", blade_label(target)));
        }
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Even multivector relabeled over the Pauli basis {1, σ_n, Iσ_n, I}.
///
/// The coefficients are identical numbers viewed against different basis
/// elements, but the grade labels change: σ_n counts as a Pauli vector and
/// Iσ_n as a Pauli bivector, so the Pauli reversion differs from the
/// spacetime one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliView {
    pub scalar: f64,
    /// Components on σ1, σ2, σ3.
    pub vector: [f64; 3],
    /// Components on Iσ1, Iσ2, Iσ3.
    pub bivector: [f64; 3],
    /// Component on I (grade 3 in the Pauli labeling).
    pub pseudo: f64,
}

// Canonical-blade signs of the Pauli basis elements:
//   σ1 = -e3,  σ2 = -e5,  σ3 = -e9
//   Iσ1 = -e12, Iσ2 = +e10, Iσ3 = -e6
const SIGMA_MASK: [(usize, f64); 3] = [(0b0011, -1.0), (0b0101, -1.0), (0b1001, -1.0)];
const ISIGMA_MASK: [(usize, f64); 3] = [(0b1100, -1.0), (0b1010, 1.0), (0b0110, -1.0)];

impl PauliView {
    fn from_even(m: &Multivector) -> PauliView {
        let read = |(mask, sign): (usize, f64)| sign * m.coeff(mask);
        PauliView {
            scalar: m.scalar_part(),
            vector: [read(SIGMA_MASK[0]), read(SIGMA_MASK[1]), read(SIGMA_MASK[2])],
            bivector: [
                read(ISIGMA_MASK[0]),
                read(ISIGMA_MASK[1]),
                read(ISIGMA_MASK[2]),
            ],
            pseudo: m.pseudoscalar_part(),
        }
    }

    /// Back to the spacetime algebra (exact inverse of the relabeling).
    pub fn to_multivector(&self) -> Multivector {
        let mut m = Multivector::scalar(self.scalar);
        for n in 0..3 {
            let (mask, sign) = SIGMA_MASK[n];
            m.set_coeff(mask, sign * self.vector[n]);
            let (mask, sign) = ISIGMA_MASK[n];
            m.set_coeff(mask, sign * self.bivector[n]);
        }
        m.set_coeff(0b1111, self.pseudo);
        m
    }

    /// Pauli-algebra reversion: flips Iσ_n (grade 2) and I (grade 3),
    /// keeps the scalar and σ_n. Note rev(I) = -I here while the spacetime
    /// reversion has rev(I) = +I.
    pub fn reversion(&self) -> PauliView {
        PauliView {
            scalar: self.scalar,
            vector: self.vector,
            bivector: [-self.bivector[0], -self.bivector[1], -self.bivector[2]],
            pseudo: -self.pseudo,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_mv(rng: &mut ChaCha8Rng) -> Multivector {
        let mut c = [0.0; BLADE_COUNT];
        for x in &mut c {
            *x = rng.random_range(-1.0..1.0);
        }
        Multivector::from_coefficients(c)
    }

    #[test]
    fn display_lists_nonzero_blades() {
        let mut m = Multivector::scalar(0.5);
        m.set_coeff(0b0011, -1.0);
        m.set_coeff(0b1111, 0.25);
        assert_eq!(format!("{m}"), "0.5 e0 - 1 e3 + 0.25 ef");
        assert_eq!(format!("{:.2}", -m), "-0.50 e0 + 1.00 e3 - 0.25 ef");
        assert_eq!(format!("{}", Multivector::ZERO), "0");
    }

    #[test]
    fn generator_squares_follow_metric() {
        for mu in 0..4 {
            let g = Multivector::gamma(mu);
            assert!((g * g).approx_eq(&Multivector::scalar(METRIC[mu]), 0.0));
        }
    }

    #[test]
    fn generators_anticommute() {
        for mu in 0..4 {
            for nu in 0..4 {
                if mu == nu {
                    continue;
                }
                let a = Multivector::gamma(mu);
                let b = Multivector::gamma(nu);
                assert!((a * b + b * a).norm_inf() == 0.0);
            }
        }
    }

    #[test]
    fn pseudoscalar_facts() {
        let i = Multivector::pseudoscalar();
        assert!((i * i).approx_eq(&Multivector::scalar(-1.0), 0.0));
        // I anticommutes with vectors, commutes with even elements.
        for mu in 0..4 {
            let g = Multivector::gamma(mu);
            assert!((i * g + g * i).norm_inf() == 0.0);
        }
        for n in 1..=3 {
            let s = Multivector::sigma(n);
            assert!((i * s - s * i).norm_inf() == 0.0);
        }
        // I = σ1σ2σ3.
        let sss = Multivector::sigma(1) * Multivector::sigma(2) * Multivector::sigma(3);
        assert!(sss.approx_eq(&i, 0.0));
    }

    #[test]
    fn pauli_frame_relations() {
        // σn² = 1, σ1σ2 = -σ2σ1, Iσ1 = σ2σ3.
        for n in 1..=3 {
            let s = Multivector::sigma(n);
            assert!((s * s).approx_eq(&Multivector::one(), 0.0));
        }
        let (s1, s2, s3) = (
            Multivector::sigma(1),
            Multivector::sigma(2),
            Multivector::sigma(3),
        );
        assert!((s1 * s2 + s2 * s1).norm_inf() == 0.0);
        assert!(Multivector::isigma(1).approx_eq(&(s2 * s3), 0.0));
        assert!(Multivector::isigma(3).approx_eq(&(s1 * s2), 0.0));
    }

    #[test]
    fn product_is_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            let c = random_mv(&mut rng);
            let left = (a * b) * c;
            let right = a * (b * c);
            assert!(left.approx_eq(&right, 1e-10));
        }
    }

    #[test]
    fn inner_outer_vector_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..200 {
            let a = Multivector::vector([
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            ]);
            let b = Multivector::vector([
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            ]);
            let sym = (a * b + b * a) * 0.5;
            let asym = (a * b - b * a) * 0.5;
            assert!(a.inner(&b).approx_eq(&sym, 1e-12));
            assert!(a.outer(&b).approx_eq(&asym, 1e-12));
            assert!((a.inner(&b) + a.outer(&b)).approx_eq(&(a * b), 1e-12));
        }
    }

    #[test]
    fn inner_product_examples() {
        let s3 = Multivector::sigma(3);
        assert!((s3.inner(&s3)).approx_eq(&Multivector::one(), 0.0));
        let s1 = Multivector::sigma(1);
        let s2 = Multivector::sigma(2);
        assert!(s1.inner(&s2).norm_inf() == 0.0);
        let is3 = Multivector::isigma(3);
        assert!(is3.inner(&is3).approx_eq(&Multivector::scalar(-1.0), 0.0));
        // γ0·γ0 = 1, γ3·γ3 = -1.
        let g0 = Multivector::gamma(0);
        let g3 = Multivector::gamma(3);
        assert_eq!(g0.inner(&g0).scalar_part(), 1.0);
        assert_eq!(g3.inner(&g3).scalar_part(), -1.0);
    }

    #[test]
    fn grade_projection_behaviour() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = random_mv(&mut rng);
        let mut sum = Multivector::ZERO;
        for k in 0..=4 {
            sum = sum + m.grade_projection(k).unwrap();
        }
        assert!(sum.approx_eq(&m, 0.0));
        assert!(matches!(
            m.grade_projection(5),
            Err(GaError::GradeOutOfRange { grade: 5 })
        ));
    }

    #[test]
    fn reversion_is_an_antihomomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..200 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            assert!((a * b).rev().approx_eq(&(b.rev() * a.rev()), 1e-12));
        }
        // Spot signs: rev(γ0γ1) = -γ0γ1, rev(I) = +I.
        let b01 = Multivector::basis(0b0011);
        assert!(b01.rev().approx_eq(&-b01, 0.0));
        let i = Multivector::pseudoscalar();
        assert!(i.rev().approx_eq(&i, 0.0));
    }

    #[test]
    fn hermitian_adjoint_examples() {
        // γ0† = γ0, γ1† = -γ1, (Iσ3)† = -Iσ3, σ3† = σ3.
        let g0 = Multivector::gamma(0);
        assert!(g0.hermitian_adjoint().approx_eq(&g0, 0.0));
        let g1 = Multivector::gamma(1);
        assert!(g1.hermitian_adjoint().approx_eq(&-g1, 0.0));
        let is3 = Multivector::isigma(3);
        assert!(is3.hermitian_adjoint().approx_eq(&-is3, 0.0));
        let s3 = Multivector::sigma(3);
        assert!(s3.hermitian_adjoint().approx_eq(&s3, 0.0));
        // (AB)† = B†A†.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            let lhs = (a * b).hermitian_adjoint();
            let rhs = b.hermitian_adjoint() * a.hermitian_adjoint();
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn pauli_view_round_trip_and_reversion() {
        // pauli_view(γ1γ0) has σ1 as its vector part.
        let s1 = Multivector::gamma(1) * Multivector::gamma(0);
        let view = s1.pauli_view().unwrap();
        assert_eq!(view.vector, [1.0, 0.0, 0.0]);
        assert_eq!(view.scalar, 0.0);
        assert!(view.to_multivector().approx_eq(&s1, 0.0));

        // Pauli reversion negates Iσn and I but fixes σn; the spacetime
        // reversion does the opposite on σn and I.
        let i = Multivector::pseudoscalar();
        let iview = i.pauli_view().unwrap();
        assert_eq!(iview.reversion().pseudo, -1.0);
        assert_eq!(i.rev().pseudoscalar_part(), 1.0);
        let s3 = Multivector::sigma(3);
        assert_eq!(s3.pauli_view().unwrap().reversion().vector[2], 1.0);
        assert!(s3.rev().approx_eq(&-s3, 0.0));

        // Round trip on a generic even element.
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let m = random_mv(&mut rng).even_part();
        let back = m.pauli_view().unwrap().to_multivector();
        assert!(back.approx_eq(&m, 0.0));

        // Odd input is rejected.
        assert!(Multivector::gamma(2).pauli_view().is_err());
    }

    #[test]
    fn pauli_reversion_matches_hermitian_adjoint_on_even() {
        // For even elements, γ0 rev(ψ) γ0 equals the Pauli reversion.
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let m = random_mv(&mut rng).even_part();
            let lhs = m.hermitian_adjoint();
            let rhs = m.pauli_view().unwrap().reversion().to_multivector();
            assert!(lhs.approx_eq(&rhs, 1e-12));
        }
    }

    #[test]
    fn cayley_text_spot_entries() {
        let text = cayley_table_text();
        let rows: Vec<&str> = text.lines().collect();
        assert_eq!(rows.len(), 16);
        let entry = |a: usize, b: usize| rows[a].split(' ').nth(b).unwrap().to_string();
        // γ1·γ1 = -1 and γ0·γ0 = +1.
        assert_eq!(entry(0b0010, 0b0010), "-e0");
        assert_eq!(entry(0b0001, 0b0001), "+e0");
        // I·I = -1.
        assert_eq!(entry(0b1111, 0b1111), "-e0");
        // γ0·γ1 = +e3.
        assert_eq!(entry(0b0001, 0b0010), "+e3");
        // Identity row and column.
        assert_eq!(entry(0, 0b1010), "+ea");
        assert_eq!(entry(0b1010, 0), "+ea");
    }

    #[test]
    fn scalar_product_matches_full_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..100 {
            let a = random_mv(&mut rng);
            let b = random_mv(&mut rng);
            let direct = a.scalar_product(&b);
            let full = (a * b).scalar_part();
            assert!((direct - full).abs() <= 1e-12);
        }
    }
}
