//! Uniform electromagnetic fields as qo(S⁴) elements, the complex
//! Faraday tensor, and charged-particle evolution `dp/dτ = 𝔉 p`.
//!
//! Units are natural with `q/m = 1`.
//!
//! Two real field operators exist and differ in the sign of the magnetic
//! part:
//!
//! * [`field_tensor`]: `Σ Eʲ D_{0j} + Σ Bʲ D⊥_{0j}`,
//! * [`evolution_generator`]: `𝔉_c + 𝔉̄_c = Σ Eʲ D_{0j} − Σ Bʲ D⊥_{0j}`.
//!
//! Both evolution solvers use [`evolution_generator`], which is the operator
//! the factorized closed form actually exponentiates.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{PhaseError, Result};
use crate::liealgebra::QoElement;
use crate::operator::{commutator, PhaseOperator};
use crate::representations::{d_perp, pi_half, Chirality, PoincareGenerator};
use crate::space::PhaseVector;
use crate::triproduct::d_basis;

/// Below this `|wτ|` the `sinh(wτ)/w` kernel switches to its Taylor series.
pub const SERIES_THRESHOLD: f64 = 1e-4;

/// Largest imaginary part accepted in an initial momentum.
pub const REALITY_TOLERANCE: f64 = 1e-12;

/// A uniform field given by its electric and magnetic 3-vectors.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct EMField {
    pub e: [f64; 3],
    pub b: [f64; 3],
}

impl EMField {
    pub fn new(e: [f64; 3], b: [f64; 3]) -> Self {
        Self { e, b }
    }

    pub fn try_new(e: [f64; 3], b: [f64; 3]) -> Result<Self> {
        if e.iter().chain(b.iter()).all(|x| x.is_finite()) {
            Ok(Self { e, b })
        } else {
            Err(PhaseError::NonFinite)
        }
    }

    /// Rebuilds a field from a Faraday vector `F_c = E + iB`.
    pub fn from_faraday_vector(fc: [Complex64; 3]) -> Self {
        Self {
            e: fc.map(|z| z.re),
            b: fc.map(|z| z.im),
        }
    }

    /// `F_c = E + iB`.
    pub fn faraday_vector(&self) -> [Complex64; 3] {
        std::array::from_fn(|j| Complex64::new(self.e[j], self.b[j]))
    }
}

/// `z(F) = F_c · F_c` and a square root `w` of `z/4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldInvariant {
    pub z: Complex64,
    pub w: Complex64,
}

/// `𝔉 = Σ Eʲ D_{0j} + Σ Bʲ D⊥_{0j}`; a real element of qo(S⁴).
pub fn field_tensor(f: &EMField) -> QoElement {
    let op: PhaseOperator = (1..=3)
        .map(|j| d_basis(0, j).scale_real(f.e[j - 1]) + d_perp(j).scale_real(f.b[j - 1]))
        .sum();
    QoElement::from_operator_unchecked(&op)
}

/// `𝔉_c = Σ F_cʲ π⁺(M_{0j})`.
pub fn faraday_tensor(f: &EMField) -> PhaseOperator {
    let fc = f.faraday_vector();
    (1..=3)
        .map(|j| {
            let generator = pi_half(PoincareGenerator::Angular(0, j), Chirality::Plus);
            generator.l0.operator().scale(fc[j - 1])
        })
        .sum()
}

/// `𝔉̄_c`: entrywise conjugate of [`faraday_tensor`].
pub fn faraday_conjugate(f: &EMField) -> PhaseOperator {
    faraday_tensor(f).conjugate()
}

/// `𝔉_c + 𝔉̄_c`, the generator of the evolution `dp/dτ = 𝔉 p`.
pub fn evolution_generator(f: &EMField) -> PhaseOperator {
    let fc = faraday_tensor(f);
    // 𝔉_c + 𝔉̄_c = 2 Re 𝔉_c entrywise.
    PhaseOperator::from_fn(|r, c| Complex64::new(2.0 * fc.entry(r, c).re, 0.0))
}

/// `[𝔉, p] = 𝔉(p)`.
pub fn lorentz_force(field_op: &PhaseOperator, p: &PhaseVector) -> PhaseVector {
    field_op.apply(p)
}

/// `z = Σ (F_cʲ)²`, `w = √(z/4)` on the principal branch.
///
/// The evolution formula is even in `w`, so the branch never affects
/// downstream results.
pub fn invariant_z(f: &EMField) -> FieldInvariant {
    let z: Complex64 = f.faraday_vector().iter().map(|c| c * c).sum();
    FieldInvariant { z, w: (z / 4.0).sqrt() }
}

/// `sinh(wτ)/w`, continued analytically to `τ` at `w = 0`.
fn sinhc(w: Complex64, tau: f64) -> Complex64 {
    let x = w * tau;
    if x.norm() < SERIES_THRESHOLD {
        let x2 = x * x;
        (Complex64::new(1.0, 0.0) + x2 / 6.0 + x2 * x2 / 120.0) * tau
    } else {
        x.sinh() / w
    }
}

/// `exp(τ 𝔉_c) = cosh(wτ) I + (sinh(wτ)/w) 𝔉_c` using a given root `w`.
pub fn exp_faraday_with_root(f: &EMField, w: Complex64, tau: f64) -> PhaseOperator {
    let fc = faraday_tensor(f);
    PhaseOperator::identity().scale((w * tau).cosh()) + fc.scale(sinhc(w, tau))
}

/// `exp(τ 𝔉_c)` in closed form.
pub fn exp_faraday(f: &EMField, tau: f64) -> PhaseOperator {
    exp_faraday_with_root(f, invariant_z(f).w, tau)
}

/// `exp(τ 𝔉̄_c)`; the conjugate of [`exp_faraday`] for real `τ`.
pub fn exp_faraday_conjugate(f: &EMField, tau: f64) -> PhaseOperator {
    exp_faraday(f, tau).conjugate()
}

pub fn require_real(p0: &PhaseVector) -> Result<()> {
    let residual = p0.imag_residual();
    if residual > REALITY_TOLERANCE || !p0.is_finite() {
        return Err(PhaseError::NotReal {
            residual,
            tolerance: REALITY_TOLERANCE,
        });
    }
    Ok(())
}

/// `p(τ) = exp(τ 𝔉̄_c) exp(τ 𝔉_c) p₀`.
///
/// `p0` must be a real four-momentum.
pub fn evolve_closed_form(f: &EMField, p0: &PhaseVector, tau: f64) -> Result<PhaseVector> {
    require_real(p0)?;
    let forward = exp_faraday(f, tau);
    Ok(forward.conjugate().apply(&forward.apply(p0)))
}

/// Classical RK4 on `dp/dτ = (𝔉_c + 𝔉̄_c) p` with `steps` equal steps.
pub fn evolve_numeric(f: &EMField, p0: &PhaseVector, tau: f64, steps: usize) -> Result<PhaseVector> {
    if steps == 0 {
        return Err(PhaseError::ZeroSteps);
    }
    Ok(rk4_linear(&evolution_generator(f), p0, tau, steps))
}

/// RK4 for the linear system `y' = A y` on `[0, τ]`.
pub fn rk4_linear(a: &PhaseOperator, y0: &PhaseVector, tau: f64, steps: usize) -> PhaseVector {
    let h = tau / steps as f64;
    let half = Complex64::new(0.5 * h, 0.0);
    let full = Complex64::new(h, 0.0);
    let sixth = Complex64::new(h / 6.0, 0.0);
    let m = a.matrix();
    let mut y = *y0.as_vector();
    for _ in 0..steps {
        let k1 = m * y;
        let k2 = m * (y + k1 * half);
        let k3 = m * (y + k2 * half);
        let k4 = m * (y + k3 * full);
        y += (k1 + (k2 + k3) * Complex64::new(2.0, 0.0) + k4) * sixth;
    }
    PhaseVector::from_vector(y)
}

/// Re-extracts `F_c` from an operator in the span of `π⁺(M_{0j})`, using
/// `tr(π⁺(M_{0j}) π⁺(M_{0k})) = δ_{jk}`.
pub fn faraday_components(op: &PhaseOperator) -> [Complex64; 3] {
    std::array::from_fn(|j| {
        let generator = pi_half(PoincareGenerator::Angular(0, j + 1), Chirality::Plus);
        op.compose(generator.l0.operator()).trace()
    })
}

/// The field seen after conjugating `𝔉_c` with `g`: components of `g 𝔉_c g⁻¹`.
pub fn transform_field(f: &EMField, g: &PhaseOperator, g_inv: &PhaseOperator) -> EMField {
    let moved = g.compose(&faraday_tensor(f)).compose(g_inv);
    EMField::from_faraday_vector(faraday_components(&moved))
}

/// `[𝔉_c, 𝔉̄_c]`.
pub fn faraday_commutator(f: &EMField) -> PhaseOperator {
    commutator(&faraday_tensor(f), &faraday_conjugate(f))
}
