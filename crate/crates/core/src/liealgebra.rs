//! The quasi-orthogonal algebra qo(S⁴), membership tests for the group
//! QO(S⁴), and the graded Lie algebra L(S⁴) = L₀ ⊕ L₁ ⊕ L₂.

use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;

use crate::error::{PhaseError, Result};
pub use crate::operator::commutator;
use crate::operator::PhaseOperator;
use crate::space::{scalar_product, symplectic_bracket, Metric, PhaseVector};
use crate::triproduct::d_basis;

/// Antisymmetric coefficient tensor `x^{αβ}`.
pub type Coefficients = [[Complex64; 4]; 4];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// An element of qo(S⁴): the coefficients `x^{αβ}` together with the
/// realized operator.
///
/// The operator is the sum over **all ordered pairs**,
/// `X = Σ_{α,β} x^{αβ} D_{αβ}`, so a pair `(x^{01}, x^{10} = −x^{01})`
/// contributes `2 x^{01} D_{01}`. The coefficient view doubles as the
/// antisymmetric two-tensor (ℳ⁶) picture.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QoElement {
    coeffs: Coefficients,
    operator: PhaseOperator,
}

impl QoElement {
    pub fn zero() -> Self {
        Self {
            coeffs: [[ZERO; 4]; 4],
            operator: PhaseOperator::zero(),
        }
    }

    pub fn coeffs(&self) -> &Coefficients {
        &self.coeffs
    }

    pub fn operator(&self) -> &PhaseOperator {
        &self.operator
    }

    /// Recovers the coefficients of an operator already known to lie in
    /// qo(S⁴). Uses `X u_γ = −2η_{γγ} Σ_β x^{γβ} u_β`.
    pub fn from_operator(op: &PhaseOperator, tol: f64) -> Result<Self> {
        let residual = qo_residual(op);
        if residual > tol {
            return Err(PhaseError::NotQuasiOrthogonalAlgebra {
                residual,
                tolerance: tol,
            });
        }
        Ok(Self::from_operator_unchecked(op))
    }

    pub(crate) fn from_operator_unchecked(op: &PhaseOperator) -> Self {
        let mut coeffs = [[ZERO; 4]; 4];
        for gamma in 0..4 {
            for beta in (gamma + 1)..4 {
                // Average the two estimates so rounding noise stays antisymmetric.
                let upper = -op.entry(beta, gamma) * Metric::diag(gamma) * 0.5;
                let lower = -op.entry(gamma, beta) * Metric::diag(beta) * 0.5;
                let x = (upper - lower) * 0.5;
                coeffs[gamma][beta] = x;
                coeffs[beta][gamma] = -x;
            }
        }
        Self { coeffs, operator: *op }
    }

    pub fn scale(&self, lambda: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.map(|row| row.map(|x| x * lambda)),
            operator: self.operator.scale(lambda),
        }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        Self::from_operator_unchecked(&commutator(&self.operator, &other.operator))
    }
}

impl Add for QoElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut coeffs = self.coeffs;
        for (row, other) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            for (x, y) in row.iter_mut().zip(other.iter()) {
                *x += y;
            }
        }
        Self {
            coeffs,
            operator: self.operator + rhs.operator,
        }
    }
}

impl Neg for QoElement {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Sub for QoElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// Realizes `Σ_{α,β} x^{αβ} D_{αβ}` from an antisymmetric tensor.
///
/// The tensor must satisfy `x^{βα} = −x^{αβ}` exactly.
pub fn qo_realize(coeffs: Coefficients) -> Result<QoElement> {
    for alpha in 0..4 {
        for beta in alpha..4 {
            let residual = (coeffs[alpha][beta] + coeffs[beta][alpha]).norm();
            if residual != 0.0 {
                return Err(PhaseError::NotAntisymmetric { alpha, beta, residual });
            }
        }
    }
    let mut operator = PhaseOperator::zero();
    for (alpha, row) in coeffs.iter().enumerate() {
        for (beta, x) in row.iter().enumerate() {
            if alpha != beta && *x != ZERO {
                operator = operator + d_basis(alpha, beta).scale(*x);
            }
        }
    }
    Ok(QoElement { coeffs, operator })
}

/// `max |⟨g u_α | g u_β⟩ − η_{αβ}|` over the 16 basis pairs.
pub fn quasi_orthogonality_residual(g: &PhaseOperator) -> f64 {
    let images: [PhaseVector; 4] = std::array::from_fn(|mu| g.apply(&PhaseVector::basis(mu)));
    let mut worst = 0.0f64;
    for alpha in 0..4 {
        for beta in 0..4 {
            let lhs = scalar_product(&images[alpha], &images[beta]);
            worst = worst.max((lhs - Metric::component(alpha, beta)).norm());
        }
    }
    worst
}

/// Whether `g` preserves the scalar product, i.e. `gᵀηg = η`, within `tol`.
pub fn is_quasi_orthogonal(g: &PhaseOperator, tol: f64) -> bool {
    quasi_orthogonality_residual(g) <= tol
}

/// `max |⟨X u_α | u_β⟩ + ⟨u_α | X u_β⟩|` over basis pairs.
pub fn qo_residual(x: &PhaseOperator) -> f64 {
    let lowered = x.lowered();
    let mut worst = 0.0f64;
    for alpha in 0..4 {
        for beta in 0..4 {
            worst = worst.max((lowered[alpha][beta] + lowered[beta][alpha]).norm());
        }
    }
    worst
}

/// Whether `⟨Xa|b⟩ + ⟨a|Xb⟩ = 0` on all basis pairs within `tol`.
pub fn is_in_qo(x: &PhaseOperator, tol: f64) -> bool {
    qo_residual(x) <= tol
}

/// How an L₀ element acts on L₁ inside the graded bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModuleAction {
    /// `[A, v] = A v`; the spin-1 rule.
    #[default]
    Linear,
    /// `[A, v] = (A + Ā) v`; the rule paired with the spin-1/2
    /// representations, where `Ā` is the entrywise conjugate.
    RealPart,
}

impl ModuleAction {
    pub fn act(self, a: &PhaseOperator, v: &PhaseVector) -> PhaseVector {
        match self {
            ModuleAction::Linear => a.apply(v),
            ModuleAction::RealPart => (*a + a.conjugate()).apply(v),
        }
    }
}

/// An element `(l0, l1, l2)` of L(S⁴) = qo(S⁴) ⊕ S⁴ ⊕ ℂ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradedElement {
    pub l0: QoElement,
    pub l1: PhaseVector,
    pub l2: Complex64,
}

impl GradedElement {
    pub fn new(l0: QoElement, l1: PhaseVector, l2: Complex64) -> Self {
        Self { l0, l1, l2 }
    }

    pub fn zero() -> Self {
        Self::new(QoElement::zero(), PhaseVector::zero(), ZERO)
    }

    pub fn grade0(l0: QoElement) -> Self {
        Self { l0, ..Self::zero() }
    }

    pub fn grade1(l1: PhaseVector) -> Self {
        Self { l1, ..Self::zero() }
    }

    pub fn grade2(l2: Complex64) -> Self {
        Self { l2, ..Self::zero() }
    }

    pub fn scale_real(&self, lambda: f64) -> Self {
        let l = Complex64::new(lambda, 0.0);
        Self::new(self.l0.scale(l), self.l1.scale(l), self.l2 * l)
    }

    /// Largest componentwise modulus of `self − other` across all grades.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.l0
            .operator()
            .max_abs_diff(other.l0.operator())
            .max(self.l1.max_abs_diff(&other.l1))
            .max((self.l2 - other.l2).norm())
    }

    pub fn max_abs(&self) -> f64 {
        self.l0.operator().max_abs().max(self.l1.max_abs()).max(self.l2.norm())
    }
}

impl Add for GradedElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.l0 + rhs.l0, self.l1 + rhs.l1, self.l2 + rhs.l2)
    }
}

impl Sub for GradedElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.l0 - rhs.l0, self.l1 - rhs.l1, self.l2 - rhs.l2)
    }
}

impl Neg for GradedElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.l0, -self.l1, -self.l2)
    }
}

/// The graded bracket with the spin-1 action of L₀ on L₁.
pub fn graded_bracket(x: &GradedElement, y: &GradedElement) -> GradedElement {
    graded_bracket_with(x, y, ModuleAction::Linear)
}

/// The graded bracket with an explicit L₀–L₁ rule:
///
/// * `[L₀, L₀]`: operator commutator,
/// * `[A, v] = action(A) v`, `[v, A] = −action(A) v`,
/// * `[a, b] = Im⟨ā|b⟩ ∈ L₂` for `a, b ∈ L₁`,
/// * anything bracketed with L₂ vanishes.
pub fn graded_bracket_with(x: &GradedElement, y: &GradedElement, action: ModuleAction) -> GradedElement {
    let l0 = x.l0.commutator(&y.l0);
    let l1 = action.act(x.l0.operator(), &y.l1) - action.act(y.l0.operator(), &x.l1);
    let l2 = Complex64::new(symplectic_bracket(&x.l1, &y.l1), 0.0);
    GradedElement::new(l0, l1, l2)
}
