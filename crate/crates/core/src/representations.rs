//! Spin-1 and spin-1/2 representations of the Poincaré algebra on
//! L(S⁴), their exponential flows, and the Newman–Penrose tetrad.
//!
//! Conventions fixed here:
//!
//! * `D⊥_{0j}` is hard-coded cyclically: `D⊥_{01} = D_{23}`,
//!   `D⊥_{02} = D_{31}`, `D⊥_{03} = D_{12}`.
//! * `π⁺(M_{kl}) = −i π⁺(M_{0j})` for `(k, l, j)` cyclic in `(1, 2, 3)`.
//! * `π⁻` is the entrywise complex conjugate of `π⁺` in the u-basis, so
//!   `π⁻(M_{kl}) = +i π⁻(M_{0j})`.
//! * Spin-1 boosts: `exp(φ D_{01})` carries `−sinh φ` off the diagonal
//!   because `D_{01} u_0 = −u_1`. The textbook boost matrix with `+sinh φ`
//!   is `exp(−φ D_{01})`.
//! * Spin-1/2 closed-form flows are `cos(φ/2) I + 2 sin(φ/2) X` for
//!   rotations and `cosh(φ/2) I + 2 sinh(φ/2) X` for boosts, with the
//!   factor 2 forced by `X² = ∓¼ I`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{PhaseError, Result};
use crate::liealgebra::{graded_bracket_with, GradedElement, ModuleAction, QoElement};
use crate::operator::{matrix_exp, PhaseOperator};
use crate::space::PhaseVector;
use crate::triproduct::d_basis;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A generator of the Poincaré algebra: `P_μ` or `M_{αβ}` with `α ≠ β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PoincareGenerator {
    Translation(usize),
    Angular(usize, usize),
}

impl PoincareGenerator {
    pub fn translation(mu: usize) -> Result<Self> {
        if mu > 3 {
            return Err(PhaseError::IndexOutOfRange(mu));
        }
        Ok(Self::Translation(mu))
    }

    pub fn angular(alpha: usize, beta: usize) -> Result<Self> {
        if alpha > 3 {
            return Err(PhaseError::IndexOutOfRange(alpha));
        }
        if beta > 3 {
            return Err(PhaseError::IndexOutOfRange(beta));
        }
        if alpha == beta {
            return Err(PhaseError::DegenerateGenerator(alpha));
        }
        Ok(Self::Angular(alpha, beta))
    }

    /// `M_{βα}` with `β > α` becomes `(M_{αβ}, −1)`; everything else `(self, 1)`.
    pub fn canonical(self) -> (Self, f64) {
        match self {
            Self::Angular(a, b) if a > b => (Self::Angular(b, a), -1.0),
            other => (other, 1.0),
        }
    }

    pub fn is_translation(&self) -> bool {
        matches!(self, Self::Translation(_))
    }

    pub fn label(&self) -> String {
        match self {
            Self::Translation(mu) => format!("P{mu}"),
            Self::Angular(a, b) => format!("M{a}{b}"),
        }
    }

    /// The four translations.
    pub fn translations() -> [Self; 4] {
        std::array::from_fn(Self::Translation)
    }

    /// The six angular generators in the order
    /// `M01, M02, M03, M23, M31, M12` (boosts, then rotations `J_1..J_3`).
    pub fn angular_generators() -> [Self; 6] {
        [
            Self::Angular(0, 1),
            Self::Angular(0, 2),
            Self::Angular(0, 3),
            Self::Angular(2, 3),
            Self::Angular(3, 1),
            Self::Angular(1, 2),
        ]
    }

    /// Every generator, including both index orders of each `M`.
    pub fn all_labels() -> Vec<Self> {
        let mut out: Vec<Self> = Self::translations().to_vec();
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    out.push(Self::Angular(a, b));
                }
            }
        }
        out
    }
}

impl fmt::Display for PoincareGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for PoincareGenerator {
    type Err = PhaseError;

    /// Accepts `P0`, `P_0`, `M01`, `M_01`, `M_{01}` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || PhaseError::UnknownGenerator(s.to_string());
        let cleaned: String = s.trim().chars().filter(|c| !matches!(c, '_' | '{' | '}')).collect();
        let mut chars = cleaned.chars();
        let head = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let digits: Vec<usize> = chars
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(unknown))
            .collect::<Result<_>>()?;
        match (head, digits.as_slice()) {
            ('P', [mu]) => Self::translation(*mu).map_err(|_| unknown()),
            ('M', [a, b]) => Self::angular(*a, *b).map_err(|_| unknown()),
            _ => Err(unknown()),
        }
    }
}

/// Sign selector for `D±_{0j}` and `π±`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn sign(self) -> f64 {
        match self {
            Chirality::Plus => 1.0,
            Chirality::Minus => -1.0,
        }
    }
}

/// Which representation of the Poincaré algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Spin1,
    SpinHalfPlus,
    SpinHalfMinus,
}

impl Representation {
    pub const ALL: [Representation; 3] = [
        Representation::Spin1,
        Representation::SpinHalfPlus,
        Representation::SpinHalfMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Representation::Spin1 => "spin1",
            Representation::SpinHalfPlus => "spin_half_plus",
            Representation::SpinHalfMinus => "spin_half_minus",
        }
    }

    pub fn chirality(self) -> Option<Chirality> {
        match self {
            Representation::Spin1 => None,
            Representation::SpinHalfPlus => Some(Chirality::Plus),
            Representation::SpinHalfMinus => Some(Chirality::Minus),
        }
    }

    /// The L₀–L₁ rule the representation is paired with.
    pub fn module_action(self) -> ModuleAction {
        match self {
            Representation::Spin1 => ModuleAction::Linear,
            _ => ModuleAction::RealPart,
        }
    }

    pub fn image(self, g: PoincareGenerator) -> GradedElement {
        match self.chirality() {
            None => pi_spin1(g),
            Some(ch) => pi_half(g, ch),
        }
    }

    /// Operator image of an angular generator.
    ///
    /// # Panics
    ///
    /// Panics for translations, which map into L₁.
    pub fn angular_operator(self, g: PoincareGenerator) -> PhaseOperator {
        assert!(!g.is_translation(), "translations have no operator image");
        *self.image(g).l0.operator()
    }

    /// Bracket in L(S⁴) with this representation's L₀–L₁ rule.
    pub fn bracket(self, x: &GradedElement, y: &GradedElement) -> GradedElement {
        graded_bracket_with(x, y, self.module_action())
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Representation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "spin1" | "spin_1" | "pi" => Ok(Representation::Spin1),
            "spin_half_plus" | "pi_plus" | "plus" => Ok(Representation::SpinHalfPlus),
            "spin_half_minus" | "pi_minus" | "minus" => Ok(Representation::SpinHalfMinus),
            _ => Err(format!(
                "unknown representation `{s}` (expected spin1, spin_half_plus or spin_half_minus)"
            )),
        }
    }
}

fn qo_unchecked(op: PhaseOperator) -> QoElement {
    QoElement::from_operator_unchecked(&op)
}

/// `π(P_α) = u_α ∈ L₁`, `π(M_{αβ}) = D_{αβ} ∈ L₀`.
pub fn pi_spin1(g: PoincareGenerator) -> GradedElement {
    match g {
        PoincareGenerator::Translation(mu) => GradedElement::grade1(PhaseVector::basis(mu)),
        PoincareGenerator::Angular(a, b) => GradedElement::grade0(qo_unchecked(d_basis(a, b))),
    }
}

/// The spatial pair `(k, l)` with `(k, l, j)` cyclic in `(1, 2, 3)`.
pub fn perp_pair(j: usize) -> (usize, usize) {
    match j {
        1 => (2, 3),
        2 => (3, 1),
        3 => (1, 2),
        _ => panic!("spatial index {j} out of range 1..=3"),
    }
}

/// `D⊥_{0j}`: `D_{23}`, `D_{31}`, `D_{12}` for `j = 1, 2, 3`.
pub fn d_perp(j: usize) -> PhaseOperator {
    let (k, l) = perp_pair(j);
    d_basis(k, l)
}

/// `D±_{0j} = D_{0j} ± i D⊥_{0j}`.
pub fn d_pm(j: usize, chirality: Chirality) -> PhaseOperator {
    d_basis(0, j) + d_perp(j).scale(I * chirality.sign())
}

/// Spatial `j` and orientation `±1` such that `M_{kl} = ±M_{k'l'}` with
/// `(k', l', j)` cyclic.
fn rotation_axis(k: usize, l: usize) -> (usize, f64) {
    match (k, l) {
        (2, 3) => (1, 1.0),
        (3, 2) => (1, -1.0),
        (3, 1) => (2, 1.0),
        (1, 3) => (2, -1.0),
        (1, 2) => (3, 1.0),
        (2, 1) => (3, -1.0),
        _ => panic!("M{k}{l} is not a spatial rotation"),
    }
}

/// `π±(M_{0j}) = ½ D±_{0j}`, `π±(M_{kl}) = ∓i π±(M_{0j})` for `(k, l, j)`
/// cyclic, `π±(P_μ) = u_μ`.
///
/// Brackets against L₁ use [`ModuleAction::RealPart`].
pub fn pi_half(g: PoincareGenerator, chirality: Chirality) -> GradedElement {
    let (canonical, sign) = g.canonical();
    match canonical {
        PoincareGenerator::Translation(mu) => GradedElement::grade1(PhaseVector::basis(mu)),
        PoincareGenerator::Angular(0, j) => {
            GradedElement::grade0(qo_unchecked(d_pm(j, chirality).scale_real(0.5 * sign)))
        }
        PoincareGenerator::Angular(k, l) => {
            let (j, orientation) = rotation_axis(k, l);
            let factor = -I * chirality.sign() * (0.5 * sign * orientation);
            GradedElement::grade0(qo_unchecked(d_pm(j, chirality).scale(factor)))
        }
    }
}

/// `exp(φ X)`.
pub fn exponential_flow(x: &PhaseOperator, phi: f64) -> PhaseOperator {
    matrix_exp(&x.scale_real(phi))
}

/// Closed form of a spin-1/2 flow `exp(φ π±(g))` for an angular generator.
pub fn half_spin_flow_closed_form(g: PoincareGenerator, chirality: Chirality, phi: f64) -> PhaseOperator {
    let (canonical, _) = g.canonical();
    let generator = *pi_half(g, chirality).l0.operator();
    let id = PhaseOperator::identity();
    match canonical {
        PoincareGenerator::Angular(0, _) => {
            id.scale_real((0.5 * phi).cosh()) + generator.scale_real(2.0 * (0.5 * phi).sinh())
        }
        PoincareGenerator::Angular(_, _) => {
            id.scale_real((0.5 * phi).cos()) + generator.scale_real(2.0 * (0.5 * phi).sin())
        }
        PoincareGenerator::Translation(_) => panic!("translations have no operator flow"),
    }
}

/// Change of basis from `(u_0, u_1, u_2, u_3)` to a null tetrad.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NpBasis {
    /// Columns are the tetrad vectors in u-coordinates.
    matrix: PhaseOperator,
    inverse: PhaseOperator,
}

impl NpBasis {
    /// Tetrad `(l, m, n, m̄)` with `l = (u₀+u₃)/√2`, `m = (u₁+iu₂)/√2`,
    /// `n = (u₀−u₃)/√2`, `m̄ = (u₁−iu₂)/√2`.
    pub fn standard() -> Self {
        Self::from_columns([Self::l(), Self::m(), Self::n(), Self::m_bar()])
    }

    /// Tetrad `(l, m̄, n, m)`: the entrywise conjugate of [`NpBasis::standard`].
    /// In it, `π⁻` generators are the conjugates of the `π⁺` generators in
    /// the standard tetrad.
    pub fn conjugate() -> Self {
        Self::from_columns([Self::l(), Self::m_bar(), Self::n(), Self::m()])
    }

    fn from_columns(cols: [PhaseVector; 4]) -> Self {
        let matrix = PhaseOperator::from_images(cols);
        // The tetrad columns are orthonormal for the Hermitian inner product.
        let inverse = matrix.conjugate().transpose();
        Self { matrix, inverse }
    }

    pub fn l() -> PhaseVector {
        (PhaseVector::basis(0) + PhaseVector::basis(3)).scale(Complex64::from(std::f64::consts::FRAC_1_SQRT_2))
    }

    pub fn n() -> PhaseVector {
        (PhaseVector::basis(0) - PhaseVector::basis(3)).scale(Complex64::from(std::f64::consts::FRAC_1_SQRT_2))
    }

    pub fn m() -> PhaseVector {
        (PhaseVector::basis(1) + PhaseVector::basis(2).scale(I)).scale(Complex64::from(std::f64::consts::FRAC_1_SQRT_2))
    }

    pub fn m_bar() -> PhaseVector {
        (PhaseVector::basis(1) - PhaseVector::basis(2).scale(I)).scale(Complex64::from(std::f64::consts::FRAC_1_SQRT_2))
    }

    pub fn matrix(&self) -> &PhaseOperator {
        &self.matrix
    }

    pub fn inverse(&self) -> &PhaseOperator {
        &self.inverse
    }

    /// Tetrad vector `k` (column `k`) in u-coordinates.
    pub fn vector(&self, k: usize) -> PhaseVector {
        PhaseVector::new(std::array::from_fn(|r| self.matrix.entry(r, k)))
    }

    /// u-coordinates → tetrad coordinates.
    pub fn to_tetrad_coords(&self, v: &PhaseVector) -> PhaseVector {
        self.inverse.apply(v)
    }

    pub fn from_tetrad_coords(&self, v: &PhaseVector) -> PhaseVector {
        self.matrix.apply(v)
    }

    /// Similarity transform of an operator into the tetrad basis.
    pub fn transform(&self, a: &PhaseOperator) -> PhaseOperator {
        self.inverse.compose(a).compose(&self.matrix)
    }
}

/// The standard NP tetrad `(l, m, n, m̄)`.
pub fn np_matrix() -> NpBasis {
    NpBasis::standard()
}

/// `A` expressed in the standard tetrad `(l, m, n, m̄)`.
pub fn to_np_basis(a: &PhaseOperator) -> PhaseOperator {
    NpBasis::standard().transform(a)
}

pub type Block = [[Complex64; 2]; 2];

/// Pauli matrix `σ_j`, `j ∈ {1, 2, 3}`.
pub fn pauli(j: usize) -> Block {
    let o = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    match j {
        1 => [[o, one], [one, o]],
        2 => [[o, -I], [I, o]],
        3 => [[one, o], [o, -one]],
        _ => panic!("Pauli index {j} out of range 1..=3"),
    }
}

/// `σ̄_j`, the entrywise conjugate of `σ_j`.
pub fn pauli_bar(j: usize) -> Block {
    pauli(j).map(|row| row.map(|z| z.conj()))
}

fn scale_block(b: Block, s: Complex64) -> Block {
    b.map(|row| row.map(|z| z * s))
}

fn block_of(a: &PhaseOperator, r0: usize, c0: usize) -> Block {
    std::array::from_fn(|r| std::array::from_fn(|c| a.entry(r0 + r, c0 + c)))
}

fn block_residual(a: &Block, b: &Block) -> f64 {
    let mut worst = 0.0f64;
    for r in 0..2 {
        for c in 0..2 {
            worst = worst.max((a[r][c] - b[r][c]).norm());
        }
    }
    worst
}

/// Block structure of one spin-1/2 generator in a null tetrad.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NpBlockReport {
    pub label: String,
    #[serde(skip)]
    pub matrix: PhaseOperator,
    /// Largest entry of the two off-diagonal 2×2 blocks.
    pub offdiag_residual: f64,
    /// Distance of the upper block from its expected pattern.
    pub upper_residual: f64,
    /// Distance of the lower block from its expected pattern.
    pub lower_residual: f64,
}

impl NpBlockReport {
    pub fn max_residual(&self) -> f64 {
        self.offdiag_residual.max(self.upper_residual).max(self.lower_residual)
    }
}

/// Expresses the six angular generators of a spin-1/2 representation in
/// a null tetrad and compares them with the block pattern
/// `π⁺(M_{0j}) = −½ diag(σ̄_j, σ_j)`, `π⁺(J_j) = (i/2) diag(σ̄_j, σ_j)`.
///
/// `π⁻` uses the conjugate tetrad `(l, m̄, n, m)` and the conjugated
/// pattern.
pub fn np_block_report(chirality: Chirality) -> Vec<NpBlockReport> {
    let (basis, conj) = match chirality {
        Chirality::Plus => (NpBasis::standard(), false),
        Chirality::Minus => (NpBasis::conjugate(), true),
    };
    let fix = |b: Block| if conj { b.map(|row| row.map(|z| z.conj())) } else { b };
    PoincareGenerator::angular_generators()
        .iter()
        .enumerate()
        .map(|(idx, g)| {
            let j = idx % 3 + 1;
            let coeff = if idx < 3 {
                Complex64::new(-0.5, 0.0)
            } else {
                Complex64::new(0.0, 0.5)
            };
            let upper = fix(scale_block(pauli_bar(j), coeff));
            let lower = fix(scale_block(pauli(j), coeff));
            let op = *pi_half(*g, chirality).l0.operator();
            let m = basis.transform(&op);
            let zero = [[Complex64::new(0.0, 0.0); 2]; 2];
            let offdiag = block_residual(&block_of(&m, 0, 2), &zero).max(block_residual(&block_of(&m, 2, 0), &zero));
            let label = if idx < 3 {
                g.label()
            } else {
                format!("J{j}={}", g.label())
            };
            NpBlockReport {
                label,
                matrix: m,
                offdiag_residual: offdiag,
                upper_residual: block_residual(&block_of(&m, 0, 0), &upper),
                lower_residual: block_residual(&block_of(&m, 2, 2), &lower),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealgebra::commutator;
    use crate::space::scalar_product;

    fn m(a: usize, b: usize) -> PoincareGenerator {
        PoincareGenerator::Angular(a, b)
    }

    fn op(rep: Representation, a: usize, b: usize) -> PhaseOperator {
        rep.angular_operator(m(a, b))
    }

    #[test]
    fn spin1_images() {
        let p0 = pi_spin1(PoincareGenerator::Translation(0));
        assert_eq!(p0.l1, PhaseVector::basis(0));
        assert_eq!(*pi_spin1(m(0, 1)).l0.operator(), d_basis(0, 1));
        assert_eq!(*pi_spin1(m(1, 0)).l0.operator(), -d_basis(0, 1));
    }

    #[test]
    fn generator_parsing_and_canonical_form() {
        assert_eq!(
            "P0".parse::<PoincareGenerator>().unwrap(),
            PoincareGenerator::Translation(0)
        );
        assert_eq!("M_{23}".parse::<PoincareGenerator>().unwrap(), m(2, 3));
        assert_eq!("m10".parse::<PoincareGenerator>().unwrap(), m(1, 0));
        assert_eq!(m(3, 1).canonical(), (m(1, 3), -1.0));
        for bad in ["", "M11", "M0", "P4", "X01", "M012", "Mab"] {
            assert!(bad.parse::<PoincareGenerator>().is_err(), "{bad}");
        }
    }

    #[test]
    fn d_perp_examples() {
        assert_eq!(d_perp(1), d_basis(2, 3));
        assert_eq!(d_perp(2), d_basis(3, 1));
        assert_eq!(d_perp(3), d_basis(1, 2));
        // D⊥₂₃ = −D₀₁: the perp of D₂₃ = D⊥₀₁ is −D₀₁.
        let i_perp3 = d_perp(3).scale(I);
        assert_eq!(i_perp3.powi(3), i_perp3);
        assert_eq!(d_perp(3).compose(&d_basis(0, 3)), PhaseOperator::zero());
    }

    #[test]
    fn d_pm_squares_and_anticommutes() {
        for ch in [Chirality::Plus, Chirality::Minus] {
            for j in 1..=3 {
                assert_eq!(d_pm(j, ch).powi(2), PhaseOperator::identity());
                for k in 1..=3 {
                    if j != k {
                        let ac = d_pm(j, ch).anticommutator(&d_pm(k, ch));
                        assert_eq!(ac, PhaseOperator::zero());
                    }
                }
            }
        }
        assert_eq!(d_basis(0, 1).compose(&d_perp(1)), PhaseOperator::zero());
    }

    #[test]
    fn pi_plus_worked_examples() {
        let rep = Representation::SpinHalfPlus;
        let expected = (d_basis(0, 1) + d_basis(2, 3).scale(I)).scale_real(0.5);
        assert_eq!(op(rep, 0, 1), expected);
        assert_eq!(op(rep, 2, 3), op(rep, 0, 1).scale(-I));
        let lhs = commutator(&op(rep, 2, 3), &op(rep, 1, 2));
        assert!(lhs.max_abs_diff(&-op(rep, 3, 1)) <= 1e-15);
    }

    #[test]
    fn pi_minus_is_conjugate_of_pi_plus() {
        for g in PoincareGenerator::angular_generators() {
            let plus = Representation::SpinHalfPlus.angular_operator(g);
            let minus = Representation::SpinHalfMinus.angular_operator(g);
            assert_eq!(minus, plus.conjugate());
        }
    }

    #[test]
    fn exp_of_zero_is_identity() {
        assert_eq!(exponential_flow(&d_basis(0, 1), 0.0), PhaseOperator::identity());
    }

    #[test]
    fn spin1_boost_has_hyperbolic_block() {
        let phi = 0.7;
        let b = exponential_flow(&d_basis(0, 1), phi);
        let (ch, sh) = (phi.cosh(), phi.sinh());
        let expected = PhaseOperator::from_real_rows([
            [ch, -sh, 0.0, 0.0],
            [-sh, ch, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]);
        assert!(b.max_abs_diff(&expected) < 1e-14);
        // rapidity −φ reproduces the +sinh textbook matrix
        let textbook = exponential_flow(&d_basis(0, 1), -phi);
        assert!((textbook.entry(0, 1).re - sh).abs() < 1e-14);
    }

    #[test]
    fn spin_half_rotation_changes_sign_after_full_turn() {
        let x = op(Representation::SpinHalfPlus, 1, 2);
        let full = exponential_flow(&x, 2.0 * std::f64::consts::PI);
        assert!(full.max_abs_diff(&-PhaseOperator::identity()) < 1e-12);
    }

    #[test]
    fn half_spin_closed_forms_match_exponential() {
        for ch in [Chirality::Plus, Chirality::Minus] {
            for g in PoincareGenerator::angular_generators() {
                for phi in [0.3, 1.0, 5.0] {
                    let closed = half_spin_flow_closed_form(g, ch, phi);
                    let x = *pi_half(g, ch).l0.operator();
                    let exact = exponential_flow(&x, phi);
                    assert!(closed.max_abs_diff(&exact) < 1e-12 * exact.max_abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn np_vectors_and_products() {
        let basis = np_matrix();
        assert_eq!(basis.vector(0), NpBasis::l());
        let l = NpBasis::l();
        let n = NpBasis::n();
        assert!((scalar_product(&l, &n) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(scalar_product(&l, &l).norm() < 1e-15);
        let round = basis.matrix().compose(basis.inverse());
        assert!(round.max_abs_diff(&PhaseOperator::identity()) < 1e-15);
    }

    #[test]
    fn np_transform_examples() {
        assert!(to_np_basis(&PhaseOperator::identity()).max_abs_diff(&PhaseOperator::identity()) < 1e-15);
        let a = to_np_basis(&op(Representation::SpinHalfPlus, 0, 3));
        for r in 0..4 {
            for c in 0..4 {
                let z = a.entry(r, c);
                if r == c {
                    assert!((z.norm() - 0.5).abs() < 1e-15);
                } else {
                    assert!(z.norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn np_blocks_are_diagonal_for_both_chiralities() {
        for ch in [Chirality::Plus, Chirality::Minus] {
            for rep in np_block_report(ch) {
                assert!(rep.offdiag_residual < 1e-12, "{}", rep.label);
                assert!(rep.upper_residual < 1e-12, "{}", rep.label);
            }
        }
    }

    #[test]
    fn np_minus_blocks_conjugate_plus_blocks() {
        let plus = np_block_report(Chirality::Plus);
        let minus = np_block_report(Chirality::Minus);
        for (p, m) in plus.iter().zip(minus.iter()) {
            assert!(m.matrix.max_abs_diff(&p.matrix.conjugate()) < 1e-15);
        }
    }
}
