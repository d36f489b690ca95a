//! The complex relativistic phase space S⁴: vectors in ℂ⁴ with the
//! Minkowski-bilinear scalar product and its Lorentzian/symplectic split.
//!
//! Coordinates are stored contravariant (`a^μ`) in the real basis `u_μ`.
//! Index lowering is always an explicit contraction with [`Metric`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Vector4;
use num_complex::Complex64;

use crate::error::{PhaseError, Result};

/// The flat metric `η = diag(1, -1, -1, -1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Metric;

impl Metric {
    pub const DIAGONAL: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

    /// `η_{μν}`.
    #[inline]
    pub fn component(mu: usize, nu: usize) -> f64 {
        assert!(mu < 4 && nu < 4, "metric index out of range");
        if mu == nu {
            Self::DIAGONAL[mu]
        } else {
            0.0
        }
    }

    /// `η_{μμ}`.
    #[inline]
    pub fn diag(mu: usize) -> f64 {
        Self::DIAGONAL[mu]
    }

    /// Lowers the index of a contravariant vector: `a_μ = η_{μν} a^ν`.
    pub fn lower(a: &PhaseVector) -> [Complex64; 4] {
        std::array::from_fn(|mu| a.0[mu] * Self::DIAGONAL[mu])
    }
}

/// An element of S⁴, `a = a^μ u_μ` with `a^μ = p^μ + i x^μ`.
#[derive(Clone, Copy, PartialEq)]
pub struct PhaseVector(pub(crate) Vector4<Complex64>);

impl PhaseVector {
    pub fn new(coords: [Complex64; 4]) -> Self {
        Self(Vector4::from(coords))
    }

    /// Validating constructor; rejects NaN and infinite coordinates.
    pub fn try_new(coords: [Complex64; 4]) -> Result<Self> {
        if coords.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
            Ok(Self::new(coords))
        } else {
            Err(PhaseError::NonFinite)
        }
    }

    pub fn zero() -> Self {
        Self(Vector4::zeros())
    }

    /// The real basis vector `u_μ`.
    pub fn basis(mu: usize) -> Self {
        assert!(mu < 4, "basis index out of range");
        let mut v = Vector4::zeros();
        v[mu] = Complex64::new(1.0, 0.0);
        Self(v)
    }

    pub fn from_real(p: [f64; 4]) -> Self {
        Self::new(p.map(|x| Complex64::new(x, 0.0)))
    }

    /// Builds `p + i x` from a momentum and a position four-vector.
    pub fn from_parts(momentum: [f64; 4], position: [f64; 4]) -> Self {
        Self::new(std::array::from_fn(|mu| Complex64::new(momentum[mu], position[mu])))
    }

    pub fn coords(&self) -> [Complex64; 4] {
        [self.0[0], self.0[1], self.0[2], self.0[3]]
    }

    #[inline]
    pub fn component(&self, mu: usize) -> Complex64 {
        self.0[mu]
    }

    pub fn as_vector(&self) -> &Vector4<Complex64> {
        &self.0
    }

    pub fn from_vector(v: Vector4<Complex64>) -> Self {
        Self(v)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn scale(&self, lambda: Complex64) -> Self {
        Self(self.0 * lambda)
    }

    pub fn conjugate(&self) -> Self {
        conjugate(self)
    }

    /// Real part `p^μ`.
    pub fn real_part(&self) -> [f64; 4] {
        std::array::from_fn(|mu| self.0[mu].re)
    }

    /// Imaginary part `x^μ`.
    pub fn imag_part(&self) -> [f64; 4] {
        std::array::from_fn(|mu| self.0[mu].im)
    }

    /// Largest absolute imaginary coordinate.
    pub fn imag_residual(&self) -> f64 {
        self.0.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// Largest coordinate modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest coordinate modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.0 - other.0).iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Euclidean (coordinate) squared length `Σ|a^μ|²`.
    pub fn euclidean_norm_sqr(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }
}

impl fmt::Debug for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PhaseVector").field(&self.coords()).finish()
    }
}

impl Add for PhaseVector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for PhaseVector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Neg for PhaseVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Mul<PhaseVector> for Complex64 {
    type Output = PhaseVector;
    fn mul(self, rhs: PhaseVector) -> PhaseVector {
        rhs.scale(self)
    }
}

impl Mul<PhaseVector> for f64 {
    type Output = PhaseVector;
    fn mul(self, rhs: PhaseVector) -> PhaseVector {
        PhaseVector(rhs.0 * Complex64::new(self, 0.0))
    }
}

/// `⟨a|b⟩ = η_{μν} a^μ b^ν`, complex-linear in both slots.
pub fn scalar_product(a: &PhaseVector, b: &PhaseVector) -> Complex64 {
    (0..4).map(|mu| a.0[mu] * b.0[mu] * Metric::diag(mu)).sum()
}

/// `a² = ⟨a|a⟩`; any complex number.
pub fn scalar_square(a: &PhaseVector) -> Complex64 {
    scalar_product(a, a)
}

/// Coordinate-wise complex conjugation in the u-basis.
pub fn conjugate(a: &PhaseVector) -> PhaseVector {
    PhaseVector(a.0.map(|c| c.conj()))
}

/// `Re⟨ā|b⟩`, the Lorentz product extended to M ⊕ iM.
pub fn lorentz_product(a: &PhaseVector, b: &PhaseVector) -> f64 {
    scalar_product(&conjugate(a), b).re
}

/// `Im⟨ā|b⟩`, the relativistic symplectic form. Pairs M with iM.
pub fn symplectic_bracket(a: &PhaseVector, b: &PhaseVector) -> f64 {
    scalar_product(&conjugate(a), b).im
}

/// Splits `a = p + i x` into momentum `p` and position `x`.
pub fn decompose(a: &PhaseVector) -> ([f64; 4], [f64; 4]) {
    (a.real_part(), a.imag_part())
}

/// `½Re(⟨ā|a⟩ + a²)`, which equals `p²` for `a = p + i x`.
pub fn momentum_square_via_invariants(a: &PhaseVector) -> f64 {
    0.5 * (scalar_product(&conjugate(a), a) + scalar_square(a)).re
}

/// `½Re(⟨ā|a⟩ − a²)`, which equals `x²` for `a = p + i x`.
pub fn position_square_via_invariants(a: &PhaseVector) -> f64 {
    0.5 * (scalar_product(&conjugate(a), a) - scalar_square(a)).re
}

/// Minkowski square of a real four-vector.
pub fn minkowski_square(v: &[f64; 4]) -> f64 {
    (0..4).map(|mu| Metric::diag(mu) * v[mu] * v[mu]).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn u(mu: usize) -> PhaseVector {
        PhaseVector::basis(mu)
    }

    const I: Complex64 = Complex64::new(0.0, 1.0);

    #[test]
    fn metric_is_diagonal_mostly_minus() {
        for mu in 0..4 {
            for nu in 0..4 {
                let expected = match (mu, nu) {
                    (0, 0) => 1.0,
                    (a, b) if a == b => -1.0,
                    _ => 0.0,
                };
                assert_eq!(Metric::component(mu, nu), expected);
            }
        }
    }

    #[test]
    fn scalar_product_on_basis() {
        assert_eq!(scalar_product(&u(0), &u(0)), c(1.0, 0.0));
        assert_eq!(scalar_product(&u(1), &u(1)), c(-1.0, 0.0));
        assert_eq!(scalar_product(&u(0), &u(1)), c(0.0, 0.0));
        // no conjugation: (i u0)·(i u0) = i² = -1
        let iu0 = u(0).scale(I);
        assert_eq!(scalar_product(&iu0, &iu0), c(-1.0, 0.0));
    }

    #[test]
    fn scalar_square_examples() {
        assert_eq!(scalar_square(&u(0)), c(1.0, 0.0));
        let a = PhaseVector::new([c(1.0, 0.0), I, c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(scalar_square(&a), c(2.0, 0.0));
        assert_eq!(scalar_square(&(u(0) + u(1))), c(0.0, 0.0));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&u(0)), u(0));
        assert_eq!(conjugate(&u(2).scale(I)), u(2).scale(-I));
        assert_eq!(conjugate(&u(3).scale(c(1.0, 2.0))), u(3).scale(c(1.0, -2.0)));
    }

    #[test]
    fn lorentz_product_examples() {
        let iu0 = u(0).scale(I);
        assert_eq!(lorentz_product(&u(0), &u(0)), 1.0);
        assert_eq!(lorentz_product(&iu0, &iu0), 1.0);
        assert_eq!(lorentz_product(&u(0), &iu0), 0.0);
    }

    #[test]
    fn symplectic_bracket_examples() {
        assert_eq!(symplectic_bracket(&u(0), &u(0)), 0.0);
        assert_eq!(symplectic_bracket(&u(0), &u(0).scale(I)), 1.0);
        assert_eq!(symplectic_bracket(&u(1), &u(1).scale(I)), -1.0);
    }

    #[test]
    fn decompose_examples() {
        let a = u(0).scale(c(1.0, 2.0));
        let (p, x) = decompose(&a);
        assert_eq!(p, [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(x, [2.0, 0.0, 0.0, 0.0]);
        assert_eq!(minkowski_square(&p), 1.0);
        // ½Re(5 + (1+2i)²) = ½(5 - 3) = 1
        assert!((momentum_square_via_invariants(&a) - 1.0).abs() < 1e-15);
        assert!((position_square_via_invariants(&a) - 4.0).abs() < 1e-15);

        let (p, x) = decompose(&u(1));
        assert_eq!(p, [0.0, 1.0, 0.0, 0.0]);
        assert_eq!(x, [0.0; 4]);
    }

    #[test]
    fn from_parts_round_trips_through_decompose() {
        let p = [1.5, -0.25, 3.0, 0.125];
        let x = [-2.0, 0.5, 0.0, 7.0];
        assert_eq!(decompose(&PhaseVector::from_parts(p, x)), (p, x));
    }

    #[test]
    fn try_new_rejects_nan() {
        let bad = [c(f64::NAN, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert_eq!(PhaseVector::try_new(bad), Err(PhaseError::NonFinite));
        let inf = [c(0.0, 0.0), c(0.0, f64::INFINITY), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(PhaseVector::try_new(inf).is_err());
    }

    #[test]
    fn lowering_applies_metric() {
        let a = PhaseVector::from_real([1.0, 2.0, 3.0, 4.0]);
        let lowered = Metric::lower(&a);
        assert_eq!(lowered.map(|z| z.re), [1.0, -2.0, -3.0, -4.0]);
    }
}
