//! Complex linear maps on S⁴.
//!
//! A [`PhaseOperator`] stores the mixed tensor `X_α^γ` as a 4×4 matrix
//! whose entry `[γ][μ]` is the coefficient of `u_γ` in the image of `u_μ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::space::{Metric, PhaseVector};

#[derive(Clone, Copy, PartialEq)]
pub struct PhaseOperator(pub(crate) Matrix4<Complex64>);

impl PhaseOperator {
    pub fn zero() -> Self {
        Self(Matrix4::zeros())
    }

    pub fn identity() -> Self {
        Self(Matrix4::identity())
    }

    pub fn from_matrix(m: Matrix4<Complex64>) -> Self {
        Self(m)
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.0
    }

    /// Builds the operator from its rows (`rows[γ][μ]`).
    pub fn from_rows(rows: [[Complex64; 4]; 4]) -> Self {
        Self(Matrix4::from_fn(|r, c| rows[r][c]))
    }

    pub fn from_real_rows(rows: [[f64; 4]; 4]) -> Self {
        Self(Matrix4::from_fn(|r, c| Complex64::new(rows[r][c], 0.0)))
    }

    pub fn from_fn(f: impl FnMut(usize, usize) -> Complex64) -> Self {
        Self(Matrix4::from_fn(f))
    }

    /// Operator whose column `μ` is `images[μ]`, the image of `u_μ`.
    pub fn from_images(images: [PhaseVector; 4]) -> Self {
        Self(Matrix4::from_fn(|r, c| images[c].component(r)))
    }

    pub fn rows(&self) -> [[Complex64; 4]; 4] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.0[(r, c)]))
    }

    #[inline]
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn apply(&self, v: &PhaseVector) -> PhaseVector {
        PhaseVector::from_vector(self.0 * v.as_vector())
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self(self.0 * other.0)
    }

    pub fn scale(&self, lambda: Complex64) -> Self {
        Self(self.0 * lambda)
    }

    pub fn scale_real(&self, lambda: f64) -> Self {
        self.scale(Complex64::new(lambda, 0.0))
    }

    /// Entrywise complex conjugate in the u-basis.
    pub fn conjugate(&self) -> Self {
        Self(self.0.map(|c| c.conj()))
    }

    pub fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        commutator(self, other)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        Self(self.0 * other.0 + other.0 * self.0)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Lowered matrix `X_{αβ} = η_{γβ} X_α^γ`, indexed `[α][β]`.
    pub fn lowered(&self) -> [[Complex64; 4]; 4] {
        std::array::from_fn(|alpha| std::array::from_fn(|beta| self.0[(beta, alpha)] * Metric::diag(beta)))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.0 - other.0).iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest absolute imaginary part over all entries.
    pub fn imag_residual(&self) -> f64 {
        self.0.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }

    /// Maximum absolute column sum (the induced 1-norm).
    pub fn norm_one(&self) -> f64 {
        (0..4)
            .map(|c| (0..4).map(|r| self.0[(r, c)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut out = Self::identity();
        for _ in 0..n {
            out = out.compose(self);
        }
        out
    }

    /// `exp(φ X)` by scaling and squaring with a truncated Taylor series.
    pub fn exp_scaled(&self, phi: f64) -> Self {
        matrix_exp(&self.scale_real(phi))
    }
}

/// `AB − BA`.
pub fn commutator(a: &PhaseOperator, b: &PhaseOperator) -> PhaseOperator {
    PhaseOperator(a.0 * b.0 - b.0 * a.0)
}

/// Matrix exponential of a 4×4 complex operator.
///
/// Scales `X` by `2^-s` until its 1-norm is at most ½, sums the Taylor
/// series until terms drop below machine precision, then squares `s` times.
pub fn matrix_exp(x: &PhaseOperator) -> PhaseOperator {
    let norm = x.norm_one();
    if norm == 0.0 {
        return PhaseOperator::identity();
    }
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = x.0 * Complex64::new(2f64.powi(-squarings), 0.0);

    let mut sum = Matrix4::<Complex64>::identity();
    let mut term = Matrix4::<Complex64>::identity();
    for k in 1..=30 {
        term = term * scaled * Complex64::new(1.0 / k as f64, 0.0);
        sum += term;
        let term_size = term.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if term_size <= f64::EPSILON * 1e-3 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    PhaseOperator(sum)
}

impl fmt::Debug for PhaseOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PhaseOperator").field(&self.rows()).finish()
    }
}

impl Add for PhaseOperator {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for PhaseOperator {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Neg for PhaseOperator {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Mul for PhaseOperator {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}

impl Mul<PhaseVector> for PhaseOperator {
    type Output = PhaseVector;
    fn mul(self, rhs: PhaseVector) -> PhaseVector {
        self.apply(&rhs)
    }
}

impl Mul<PhaseOperator> for Complex64 {
    type Output = PhaseOperator;
    fn mul(self, rhs: PhaseOperator) -> PhaseOperator {
        rhs.scale(self)
    }
}

impl Mul<PhaseOperator> for f64 {
    type Output = PhaseOperator;
    fn mul(self, rhs: PhaseOperator) -> PhaseOperator {
        rhs.scale_real(self)
    }
}

impl std::iter::Sum for PhaseOperator {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn columns_are_images_of_basis_vectors() {
        let images = [
            PhaseVector::basis(1),
            PhaseVector::basis(0),
            PhaseVector::basis(3).scale(c(0.0, 2.0)),
            PhaseVector::zero(),
        ];
        let op = PhaseOperator::from_images(images);
        for (mu, image) in images.iter().enumerate() {
            assert_eq!(op.apply(&PhaseVector::basis(mu)), *image);
        }
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(matrix_exp(&PhaseOperator::zero()), PhaseOperator::identity());
    }

    #[test]
    fn exp_of_diagonal_matches_scalar_exp() {
        let d = PhaseOperator::from_fn(|r, col| {
            if r == col {
                c(r as f64 - 1.5, 0.3 * r as f64)
            } else {
                c(0.0, 0.0)
            }
        });
        let e = d.exp_scaled(2.0);
        for k in 0..4 {
            let expected = (d.entry(k, k) * 2.0).exp();
            assert!((e.entry(k, k) - expected).norm() < 1e-13 * expected.norm().max(1.0));
        }
    }

    #[test]
    fn exp_matches_nalgebra_on_a_dense_matrix() {
        let x = PhaseOperator::from_fn(|r, col| {
            c(
                ((r * 7 + col * 3) % 5) as f64 * 0.4 - 0.8,
                ((r + 2 * col) % 3) as f64 * 0.3,
            )
        });
        let ours = matrix_exp(&x);
        let oracle = x.0.exp();
        let scale = oracle.iter().map(|z| z.norm()).fold(1.0, f64::max);
        assert!(ours.max_abs_diff(&PhaseOperator(oracle)) < 1e-13 * scale);
    }

    #[test]
    fn commutator_of_self_vanishes() {
        let x = PhaseOperator::from_fn(|r, col| c(r as f64, col as f64));
        assert_eq!(commutator(&x, &x), PhaseOperator::zero());
    }
}
