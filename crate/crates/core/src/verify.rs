//! Seeded property suites over every module, producing machine-readable
//! reports.
//!
//! Each check carries a nominal tolerance. The run tolerance rescales all
//! of them: a check passes when `residual ≤ nominal × tolerance / 1e-12`,
//! so the default run tolerance of `1e-12` applies the nominal values as-is.
//!
//! Draw order: a single ChaCha8 stream seeded from the run seed is consumed
//! by the suites in the order `space`, `triproduct`, `liealgebra`,
//! `representations`, `em`; within a suite, checks draw in source order.

use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::em::{
    self, evolution_generator, exp_faraday, exp_faraday_with_root, faraday_commutator, faraday_tensor, invariant_z,
    EMField,
};
use crate::liealgebra::{
    graded_bracket, is_in_qo, qo_realize, quasi_orthogonality_residual, Coefficients, GradedElement, QoElement,
};
use crate::operator::{commutator, matrix_exp, PhaseOperator};
use crate::representations::{
    d_perp, d_pm, exponential_flow, np_block_report, pi_half, Chirality, PoincareGenerator, Representation,
};
use crate::space::{
    decompose, minkowski_square, momentum_square_via_invariants, position_square_via_invariants, scalar_product,
    symplectic_bracket, Metric, PhaseVector,
};
use crate::triproduct::{d_basis, d_hat, d_operator, tri_product, tri_product_coords};
use crate::DEFAULT_TOLERANCE;

/// Random samples per randomized property.
pub const SAMPLES: usize = 500;
/// Fields in the evolution suite.
pub const FIELD_COUNT: usize = 100;
/// Null fields among them.
pub const NULL_FIELD_COUNT: usize = 10;
/// RK4 steps used for each closed-form comparison.
pub const RK4_STEPS: usize = 10_000;
/// Proper-time checkpoints for the evolution suite.
pub const TAU_GRID: [f64; 6] = [0.0, 1.0, 2.5, 5.0, 7.5, 10.0];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            seed: 42,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub residual: f64,
    #[serde(skip)]
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Suite {
    name: &'static str,
    scale: f64,
    checks: Vec<CheckResult>,
    started: Instant,
}

impl Suite {
    fn new(name: &'static str, cfg: &VerifyConfig) -> Self {
        Self {
            name,
            scale: cfg.tolerance / DEFAULT_TOLERANCE,
            checks: Vec::new(),
            started: Instant::now(),
        }
    }

    fn check(&mut self, id: impl Into<String>, residual: f64, nominal: f64) {
        let threshold = nominal * self.scale;
        self.checks.push(CheckResult {
            id: id.into(),
            residual,
            threshold,
            pass: residual <= threshold,
        });
    }

    fn finish(self) -> SuiteReport {
        let pass = self.checks.iter().all(|c| c.pass);
        SuiteReport {
            suite: self.name.to_string(),
            checks: self.checks,
            pass,
            wall_time: self.started.elapsed(),
        }
    }
}

/// Seeded source of random test objects.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn real(&mut self) -> f64 {
        self.rng.random_range(-1.0..1.0)
    }

    pub fn complex(&mut self) -> Complex64 {
        let re = self.real();
        let im = self.real();
        Complex64::new(re, im)
    }

    pub fn vector(&mut self) -> PhaseVector {
        PhaseVector::new(std::array::from_fn(|_| self.complex()))
    }

    pub fn real_vector(&mut self) -> PhaseVector {
        PhaseVector::from_real(std::array::from_fn(|_| self.real()))
    }

    pub fn imaginary_vector(&mut self) -> PhaseVector {
        PhaseVector::from_parts([0.0; 4], std::array::from_fn(|_| self.real()))
    }

    pub fn operator(&mut self) -> PhaseOperator {
        PhaseOperator::from_fn(|_, _| self.complex())
    }

    /// Antisymmetric coefficients; real when `real` is set.
    pub fn coefficients(&mut self, real: bool) -> Coefficients {
        let mut coeffs = [[Complex64::new(0.0, 0.0); 4]; 4];
        for a in 0..4 {
            for b in (a + 1)..4 {
                let x = if real {
                    Complex64::new(self.real(), 0.0)
                } else {
                    self.complex()
                };
                coeffs[a][b] = x;
                coeffs[b][a] = -x;
            }
        }
        coeffs
    }

    pub fn qo_element(&mut self, real: bool) -> QoElement {
        qo_realize(self.coefficients(real)).expect("sampled coefficients are antisymmetric")
    }

    /// Graded element with real L₀ coefficients and complex L₁, L₂ parts.
    pub fn graded(&mut self) -> GradedElement {
        let l0 = self.qo_element(true);
        let l1 = self.vector();
        let l2 = self.complex();
        GradedElement::new(l0, l1, l2)
    }

    /// Uniform in the unit ball.
    pub fn ball3(&mut self) -> [f64; 3] {
        loop {
            let v = [self.real(), self.real(), self.real()];
            if norm3(&v) <= 1.0 {
                return v;
            }
        }
    }

    /// Field with `|E|, |B| ≤ 1`.
    pub fn field(&mut self) -> EMField {
        let e = self.ball3();
        let b = self.ball3();
        EMField::new(e, b)
    }

    /// Field with `|E| = |B| ≤ 1` and `E ⊥ B`, so `z(F) = 0`.
    pub fn null_field(&mut self) -> EMField {
        loop {
            let e = self.ball3();
            let r = self.ball3();
            let cross = cross3(&e, &r);
            let (ne, nc) = (norm3(&e), norm3(&cross));
            if ne > 1e-3 && nc > 1e-3 {
                let b = cross.map(|x| x * ne / nc);
                return EMField::new(e, b);
            }
        }
    }

    /// `count` fields of which the first `nulls` are null.
    pub fn field_set(&mut self, count: usize, nulls: usize) -> Vec<EMField> {
        (0..count)
            .map(|k| if k < nulls { self.null_field() } else { self.field() })
            .collect()
    }

    /// Real four-momentum on the unit mass shell.
    pub fn momentum(&mut self) -> PhaseVector {
        let p = self.ball3();
        let energy = (1.0 + p.iter().map(|x| x * x).sum::<f64>()).sqrt();
        PhaseVector::from_real([energy, p[0], p[1], p[2]])
    }
}

fn norm3(v: &[f64; 3]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn cross3(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// `|a − b| / max(1, |a|, |b|)` on vectors.
pub fn rel_vec(a: &PhaseVector, b: &PhaseVector) -> f64 {
    a.max_abs_diff(b) / a.max_abs().max(b.max_abs()).max(1.0)
}

/// `|a − b| / max(1, |a|, |b|)` on operators.
pub fn rel_op(a: &PhaseOperator, b: &PhaseOperator) -> f64 {
    a.max_abs_diff(b) / a.max_abs().max(b.max_abs()).max(1.0)
}

fn rel_scalar(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

/// Runs every suite in the documented order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    let mut sampler = Sampler::new(cfg.seed);
    vec![
        suite_space(cfg, &mut sampler),
        suite_triproduct(cfg, &mut sampler),
        suite_liealgebra(cfg, &mut sampler),
        suite_representations(cfg, &mut sampler),
        suite_em(cfg, &mut sampler),
    ]
}

pub fn suite_space(cfg: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut suite = Suite::new("space", cfg);
    let (mut left, mut right, mut sym) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..SAMPLES {
        let lambda = s.complex();
        let (a, b, c) = (s.vector(), s.vector(), s.vector());
        let lhs = scalar_product(&(a.scale(lambda) + c), &b);
        let rhs = lambda * scalar_product(&a, &b) + scalar_product(&c, &b);
        left = left.max(rel_scalar(lhs, rhs));
        let lhs = scalar_product(&b, &(a.scale(lambda) + c));
        let rhs = lambda * scalar_product(&b, &a) + scalar_product(&b, &c);
        right = right.max(rel_scalar(lhs, rhs));
        sym = sym.max((scalar_product(&a, &b) - scalar_product(&b, &a)).norm());
    }
    suite.check(format!("bilinearity.left[{SAMPLES}]"), left, 1e-12);
    suite.check(format!("bilinearity.right[{SAMPLES}]"), right, 1e-12);
    suite.check(format!("symmetry[{SAMPLES}]"), sym, 1e-15);

    let (mut pm, mut xm) = (0.0f64, 0.0f64);
    for _ in 0..SAMPLES {
        let a = s.vector();
        let (p, x) = decompose(&a);
        pm = pm.max((minkowski_square(&p) - momentum_square_via_invariants(&a)).abs());
        xm = xm.max((minkowski_square(&x) - position_square_via_invariants(&a)).abs());
    }
    suite.check(format!("decomposition.momentum[{SAMPLES}]"), pm, 1e-12);
    suite.check(format!("decomposition.position[{SAMPLES}]"), xm, 1e-12);

    let (mut anti, mut real, mut imag) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..SAMPLES {
        let (a, b) = (s.vector(), s.vector());
        anti = anti.max((symplectic_bracket(&a, &b) + symplectic_bracket(&b, &a)).abs());
        let (p, q) = (s.real_vector(), s.real_vector());
        real = real.max(symplectic_bracket(&p, &q).abs());
        let (x, y) = (s.imaginary_vector(), s.imaginary_vector());
        imag = imag.max(symplectic_bracket(&x, &y).abs());
    }
    suite.check(format!("symplectic.antisymmetry[{SAMPLES}]"), anti, 1e-15);
    suite.check(format!("symplectic.real_pairs_vanish[{SAMPLES}]"), real, 1e-15);
    suite.check(format!("symplectic.imaginary_pairs_vanish[{SAMPLES}]"), imag, 1e-15);
    suite.finish()
}

/// Both sides of `[D(x,y), D(a,b)] = D(D(x,y)a, b) − D(a, D(y,x)b)`.
pub fn jordan_sides(
    x: &PhaseVector,
    y: &PhaseVector,
    a: &PhaseVector,
    b: &PhaseVector,
) -> (PhaseOperator, PhaseOperator) {
    let dxy = d_operator(x, y);
    let lhs = commutator(&dxy, &d_operator(a, b));
    let rhs = d_operator(&dxy.apply(a), b) - d_operator(a, &d_operator(y, x).apply(b));
    (lhs, rhs)
}

pub fn suite_triproduct(cfg: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut suite = Suite::new("triproduct", cfg);
    let (mut outer, mut coords) = (0.0f64, 0.0f64);
    let mut linear = [0.0f64; 3];
    for _ in 0..SAMPLES {
        let (a, b, c, d) = (s.vector(), s.vector(), s.vector(), s.vector());
        let lambda = s.complex();
        outer = outer.max(rel_vec(&tri_product(&a, &b, &c), &tri_product(&c, &b, &a)));
        coords = coords.max(tri_product(&a, &b, &c).max_abs_diff(&tri_product_coords(&a, &b, &c)));
        let mixed = a.scale(lambda) + d;
        let slots = [
            (
                tri_product(&mixed, &b, &c),
                tri_product(&a, &b, &c).scale(lambda) + tri_product(&d, &b, &c),
            ),
            (
                tri_product(&b, &mixed, &c),
                tri_product(&b, &a, &c).scale(lambda) + tri_product(&b, &d, &c),
            ),
            (
                tri_product(&b, &c, &mixed),
                tri_product(&b, &c, &a).scale(lambda) + tri_product(&b, &c, &d),
            ),
        ];
        for (slot, (lhs, rhs)) in slots.iter().enumerate() {
            linear[slot] = linear[slot].max(rel_vec(lhs, rhs));
        }
    }
    suite.check(format!("outer_symmetry[{SAMPLES}]"), outer, 1e-12);
    for (slot, r) in linear.iter().enumerate() {
        suite.check(format!("trilinearity.slot{slot}[{SAMPLES}]"), *r, 1e-12);
    }
    suite.check(format!("coordinate_form[{SAMPLES}]"), coords, 1e-13);

    let mut jordan = 0.0f64;
    for _ in 0..SAMPLES {
        let (x, y, a, b) = (s.vector(), s.vector(), s.vector(), s.vector());
        let (lhs, rhs) = jordan_sides(&x, &y, &a, &b);
        jordan = jordan.max(rel_op(&lhs, &rhs));
    }
    suite.check(format!("jordan_identity[{SAMPLES}]"), jordan, 1e-10);

    for alpha in 0..4 {
        for beta in 0..4 {
            let r = d_basis(alpha, beta).max_abs_diff(&d_hat(&PhaseVector::basis(alpha), &PhaseVector::basis(beta)));
            suite.check(format!("d_basis_vs_d_hat[{alpha},{beta}]"), r, 0.0);
        }
    }
    suite.finish()
}

/// `η_{να}D_{μβ} − η_{μα}D_{νβ} + η_{νβ}D_{αμ} − η_{μβ}D_{αν}`.
pub fn lorentz_bracket_rhs(mu: usize, nu: usize, alpha: usize, beta: usize) -> PhaseOperator {
    let eta = Metric::component;
    d_basis(mu, beta).scale_real(eta(nu, alpha)) - d_basis(nu, beta).scale_real(eta(mu, alpha))
        + d_basis(alpha, mu).scale_real(eta(nu, beta))
        - d_basis(alpha, nu).scale_real(eta(mu, beta))
}

fn numerical_rank(m: DMatrix<f64>, cutoff: f64) -> usize {
    m.svd(false, false)
        .singular_values
        .iter()
        .filter(|&&sv| sv > cutoff)
        .count()
}

/// Dimension of `{X : ⟨Xa|b⟩ + ⟨a|Xb⟩ = 0}` over ℝ-valued matrices,
/// which equals the complex dimension of qo(S⁴).
pub fn qo_solution_dimension() -> usize {
    // Column k is the image of the k-th elementary matrix under X ↦ X_low + X_lowᵀ.
    let mut map = DMatrix::<f64>::zeros(16, 16);
    for k in 0..16 {
        let x = PhaseOperator::from_fn(|r, c| Complex64::new(if r * 4 + c == k { 1.0 } else { 0.0 }, 0.0));
        let low = x.lowered();
        for a in 0..4 {
            for b in 0..4 {
                map[(a * 4 + b, k)] = (low[a][b] + low[b][a]).re;
            }
        }
    }
    16 - numerical_rank(map, 1e-10)
}

/// Rank of the six operators `D₀₁, D₀₂, D₀₃, D₂₃, D₃₁, D₁₂` as vectors in ℂ¹⁶.
pub fn qo_basis_rank() -> usize {
    let mut m = DMatrix::<f64>::zeros(16, 6);
    for (col, g) in PoincareGenerator::angular_generators().iter().enumerate() {
        let PoincareGenerator::Angular(a, b) = *g else {
            unreachable!()
        };
        let d = d_basis(a, b);
        for r in 0..4 {
            for c in 0..4 {
                m[(r * 4 + c, col)] = d.entry(r, c).re;
            }
        }
    }
    numerical_rank(m, 1e-10)
}

pub fn suite_liealgebra(cfg: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut suite = Suite::new("liealgebra", cfg);
    for mu in 0..4 {
        for nu in 0..4 {
            for alpha in 0..4 {
                for beta in 0..4 {
                    let lhs = commutator(&d_basis(mu, nu), &d_basis(alpha, beta));
                    let r = lhs.max_abs_diff(&lorentz_bracket_rhs(mu, nu, alpha, beta));
                    suite.check(format!("lorentz_bracket[{mu},{nu}][{alpha},{beta}]"), r, 1e-13);
                }
            }
        }
    }

    suite.check("qo.basis_rank", (qo_basis_rank() as f64 - 6.0).abs(), 0.0);
    suite.check(
        "qo.solution_dimension",
        (qo_solution_dimension() as f64 - 6.0).abs(),
        0.0,
    );
    let mut span = 0.0f64;
    let mut membership = 0.0f64;
    for _ in 0..SAMPLES {
        // Project a random operator onto qo: X ↦ ½(X − η Xᵀ η).
        let x = s.operator();
        let eta = PhaseOperator::from_real_rows([
            [1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [0.0, 0.0, -1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ]);
        let projected = (x - eta.compose(&x.transpose()).compose(&eta)).scale_real(0.5);
        membership = membership.max(if is_in_qo(&projected, 1e-13) { 0.0 } else { 1.0 });
        let q = QoElement::from_operator(&projected, 1e-13).map(|q| q.coeffs().to_owned());
        let rebuilt = q.ok().and_then(|c| qo_realize(c).ok());
        span = span.max(match rebuilt {
            Some(e) => e.operator().max_abs_diff(&projected),
            None => f64::INFINITY,
        });
    }
    suite.check(format!("qo.projection_membership[{SAMPLES}]"), membership, 0.0);
    suite.check(format!("qo.span[{SAMPLES}]"), span, 1e-13);

    let (mut anti, mut jacobi) = (0.0f64, 0.0f64);
    for _ in 0..SAMPLES {
        let (x, y, z) = (s.graded(), s.graded(), s.graded());
        let xy = graded_bracket(&x, &y);
        anti = anti.max(xy.max_abs_diff(&-graded_bracket(&y, &x)));
        let sum = graded_bracket(&x, &graded_bracket(&y, &z))
            + graded_bracket(&y, &graded_bracket(&z, &x))
            + graded_bracket(&z, &graded_bracket(&x, &y));
        let scale = [x, y, z].iter().map(|g| g.max_abs()).fold(1.0, f64::max);
        jacobi = jacobi.max(sum.max_abs() / (scale * scale * scale));
    }
    suite.check(format!("graded.antisymmetry[{SAMPLES}]"), anti, 1e-13);
    suite.check(format!("graded.jacobi[{SAMPLES}]"), jacobi, 1e-10);

    for t in [0.1, 1.0, 2.5] {
        let mut worst = 0.0f64;
        for _ in 0..SAMPLES / 5 {
            let x = s.qo_element(false);
            let g = matrix_exp(&x.operator().scale_real(t));
            worst = worst.max(quasi_orthogonality_residual(&g) / g.max_abs().powi(2).max(1.0));
        }
        suite.check(format!("group.exp_preserves_product[t={t}]"), worst, 1e-12);
    }
    suite.finish()
}

/// Runs the three Poincaré relation families for one representation.
pub fn poincare_residuals(rep: Representation) -> Vec<(String, f64)> {
    let name = rep.name();
    let mut out = Vec::new();
    let eta = Metric::component;
    let img = |g| rep.image(g);
    for mu in 0..4 {
        for nu in 0..4 {
            let r = rep.bracket(
                &img(PoincareGenerator::Translation(mu)),
                &img(PoincareGenerator::Translation(nu)),
            );
            out.push((format!("{name}.translations[{mu},{nu}]"), r.max_abs()));
        }
    }
    for alpha in 0..4 {
        for beta in 0..4 {
            if alpha == beta {
                continue;
            }
            for mu in 0..4 {
                let lhs = rep.bracket(
                    &img(PoincareGenerator::Angular(alpha, beta)),
                    &img(PoincareGenerator::Translation(mu)),
                );
                let rhs = PhaseVector::basis(alpha).scale(eta(mu, beta).into())
                    - PhaseVector::basis(beta).scale(eta(mu, alpha).into());
                let r = lhs.l1.max_abs_diff(&rhs) + lhs.l0.operator().max_abs() + lhs.l2.norm();
                out.push((format!("{name}.angular_translation[{alpha},{beta}][{mu}]"), r));
            }
        }
    }
    let m = |a: usize, b: usize| -> PhaseOperator {
        if a == b {
            PhaseOperator::zero()
        } else {
            rep.angular_operator(PoincareGenerator::Angular(a, b))
        }
    };
    for mu in 0..4 {
        for nu in 0..4 {
            if mu == nu {
                continue;
            }
            for alpha in 0..4 {
                for beta in 0..4 {
                    if alpha == beta {
                        continue;
                    }
                    let lhs = commutator(&m(mu, nu), &m(alpha, beta));
                    let rhs = m(nu, alpha).scale_real(eta(mu, beta)) + m(mu, beta).scale_real(eta(nu, alpha))
                        - m(nu, beta).scale_real(eta(mu, alpha))
                        - m(mu, alpha).scale_real(eta(nu, beta));
                    out.push((
                        format!("{name}.lorentz[{mu},{nu}][{alpha},{beta}]"),
                        lhs.max_abs_diff(&rhs),
                    ));
                }
            }
        }
    }
    out
}

/// The four hand-computed spin-1/2 commutators:
/// `[π⁺(M₂₃), π⁺(M₁₂)] = −π⁺(M₃₁)`, `[π⁺(M₀₁), π⁺(M₃₁)] = π⁺(M₀₃)`,
/// `[π⁺(M₀₁), π⁺(M₀₃)] = π⁺(M₃₁)`, `[π⁺(M₀₁), π⁺(M₂₃)] = 0`.
///
/// The middle two are often quoted with a minus sign. Both follow from the first
/// via `π⁺(M₀ⱼ) = iπ⁺(M_kl)`, and the Lorentz relation fixes them as positive.
pub fn worked_spin_half_residuals() -> Vec<(String, f64)> {
    let p = |a, b| Representation::SpinHalfPlus.angular_operator(PoincareGenerator::Angular(a, b));
    let cases = [
        ("[M23,M12]=-M31", commutator(&p(2, 3), &p(1, 2)), -p(3, 1)),
        ("[M01,M31]=M03", commutator(&p(0, 1), &p(3, 1)), p(0, 3)),
        ("[M01,M03]=M31", commutator(&p(0, 1), &p(0, 3)), p(3, 1)),
        ("[M01,M23]=0", commutator(&p(0, 1), &p(2, 3)), PhaseOperator::zero()),
    ];
    cases
        .into_iter()
        .map(|(id, lhs, rhs)| (format!("spin_half_plus.worked{id}"), lhs.max_abs_diff(&rhs)))
        .collect()
}

/// `½{D±₀ⱼ, D±₀ₖ} − δⱼₖ I` for all `j, k` and both signs.
pub fn car_residuals() -> Vec<(String, f64)> {
    let mut out = Vec::new();
    for (ch, tag) in [(Chirality::Plus, '+'), (Chirality::Minus, '-')] {
        for j in 1..=3 {
            for k in 1..=3 {
                let ac = d_pm(j, ch).anticommutator(&d_pm(k, ch)).scale_real(0.5);
                let expected = if j == k {
                    PhaseOperator::identity()
                } else {
                    PhaseOperator::zero()
                };
                out.push((format!("car[{tag}][{j},{k}]"), ac.max_abs_diff(&expected)));
            }
        }
    }
    out
}

/// `D₀ⱼ³ = D₀ⱼ`, `(iDⱼₖ)³ = iDⱼₖ`, `(iD⊥₀ⱼ)³ = iD⊥₀ⱼ`, `(D±₀ⱼ)³ = D±₀ⱼ`.
pub fn tripotent_residuals() -> Vec<(String, f64)> {
    let i = Complex64::new(0.0, 1.0);
    let mut out = Vec::new();
    for j in 1..=3 {
        let d = d_basis(0, j);
        out.push((format!("tripotent.D0{j}"), d.powi(3).max_abs_diff(&d)));
    }
    for (j, k) in [(1, 2), (1, 3), (2, 3)] {
        let d = d_basis(j, k).scale(i);
        out.push((format!("tripotent.iD{j}{k}"), d.powi(3).max_abs_diff(&d)));
    }
    for j in 1..=3 {
        let d = d_perp(j).scale(i);
        out.push((format!("tripotent.iDperp0{j}"), d.powi(3).max_abs_diff(&d)));
        out.push((
            format!("orthogonal.Dperp0{j}D0{j}"),
            d_perp(j).compose(&d_basis(0, j)).max_abs(),
        ));
        for (ch, tag) in [(Chirality::Plus, '+'), (Chirality::Minus, '-')] {
            let d = d_pm(j, ch);
            out.push((format!("tripotent.D{tag}0{j}"), d.powi(3).max_abs_diff(&d)));
        }
    }
    out
}

pub fn suite_representations(cfg: &VerifyConfig, _s: &mut Sampler) -> SuiteReport {
    let mut suite = Suite::new("representations", cfg);
    for rep in Representation::ALL {
        for (id, r) in poincare_residuals(rep) {
            suite.check(id, r, 1e-13);
        }
    }
    for (id, r) in worked_spin_half_residuals() {
        suite.check(id, r, 1e-14);
    }
    for (id, r) in tripotent_residuals().into_iter().chain(car_residuals()) {
        suite.check(id, r, 1e-14);
    }

    let quarter = PhaseOperator::identity().scale_real(0.25);
    for g in PoincareGenerator::angular_generators() {
        let x = *pi_half(g, Chirality::Plus).l0.operator();
        let (kind, expected) = match g {
            PoincareGenerator::Angular(0, _) => ("boost", quarter),
            _ => ("rotation", -quarter),
        };
        suite.check(format!("square.{kind}[{g}]"), x.powi(2).max_abs_diff(&expected), 1e-14);
    }

    for rep in Representation::ALL {
        for g in PoincareGenerator::angular_generators() {
            let x = rep.angular_operator(g);
            for phi in [0.3, 1.0, 5.0] {
                let prod = exponential_flow(&x, phi).compose(&exponential_flow(&x, -phi));
                suite.check(
                    format!("flow.inverse[{rep}][{g}][phi={phi}]"),
                    rel_op(&prod, &PhaseOperator::identity()),
                    1e-12,
                );
            }
        }
    }

    for g in PoincareGenerator::angular_generators() {
        let x = Representation::Spin1.angular_operator(g);
        let mut worst = 0.0f64;
        for phi in [0.3, 1.0, 5.0] {
            let flow = exponential_flow(&x, phi);
            for mu in 0..4 {
                worst = worst.max(flow.apply(&PhaseVector::basis(mu)).imag_residual());
                let imag = PhaseVector::basis(mu).scale(Complex64::new(0.0, 1.0));
                let image = flow.apply(&imag);
                worst = worst.max(image.real_part().iter().fold(0.0f64, |m, x| m.max(x.abs())));
            }
        }
        suite.check(format!("spin1.subspaces_invariant[{g}]"), worst, 1e-13);
    }

    for g in PoincareGenerator::angular_generators() {
        let plus = Representation::SpinHalfPlus.angular_operator(g);
        let minus = Representation::SpinHalfMinus.angular_operator(g);
        suite.check(
            format!("pi_minus.conjugate[{g}]"),
            minus.max_abs_diff(&plus.conjugate()),
            0.0,
        );
    }

    for ch in [Chirality::Plus, Chirality::Minus] {
        for report in np_block_report(ch) {
            suite.check(
                format!("np.block_diagonal[{ch:?}][{}]", report.label),
                report.offdiag_residual,
                1e-12,
            );
        }
    }
    suite.finish()
}

/// Largest scaled deviations for one field over a proper-time grid.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct EvolutionResiduals {
    /// `|p_closed − p_rk4|∞ / max(1, |p_closed|∞)`.
    pub deviation: f64,
    /// `|p(τ)² − p₀²| / max(1, Σ|p^μ|²)`.
    pub mass_shell: f64,
    /// `|Im p_closed|∞ / max(1, |p_closed|∞)`.
    pub reality: f64,
    /// Same three, unscaled.
    pub abs_deviation: f64,
    pub abs_mass_shell: f64,
    pub abs_reality: f64,
}

pub fn evolution_residuals(f: &EMField, p0: &PhaseVector, taus: &[f64], steps: usize) -> EvolutionResiduals {
    let mut out = EvolutionResiduals::default();
    let shell0 = scalar_product(p0, p0);
    for &tau in taus {
        let closed = em::evolve_closed_form(f, p0, tau).expect("sampled momentum is real");
        let numeric = em::evolve_numeric(f, p0, tau, steps).expect("steps >= 1");
        let size = closed.max_abs().max(1.0);
        let dev = closed.max_abs_diff(&numeric);
        let shell = (scalar_product(&closed, &closed) - shell0).norm();
        let imag = closed.imag_residual();
        out.abs_deviation = out.abs_deviation.max(dev);
        out.abs_mass_shell = out.abs_mass_shell.max(shell);
        out.abs_reality = out.abs_reality.max(imag);
        out.deviation = out.deviation.max(dev / size);
        out.mass_shell = out.mass_shell.max(shell / closed.euclidean_norm_sqr().max(1.0));
        out.reality = out.reality.max(imag / size);
    }
    out
}

/// `exp(τ𝔉)` against `exp(τ𝔉̄_c) exp(τ𝔉_c)`, both by matrix exponential.
pub fn factorization_residual(f: &EMField, tau: f64) -> f64 {
    let full = matrix_exp(&evolution_generator(f).scale_real(tau));
    let fc = faraday_tensor(f);
    let factored = matrix_exp(&fc.conjugate().scale_real(tau)).compose(&matrix_exp(&fc.scale_real(tau)));
    rel_op(&full, &factored)
}

pub fn suite_em(cfg: &VerifyConfig, s: &mut Sampler) -> SuiteReport {
    let mut suite = Suite::new("em", cfg);
    let (mut square, mut commute) = (0.0f64, 0.0f64);
    for _ in 0..SAMPLES {
        let f = s.field();
        let fc = faraday_tensor(&f);
        let expected = PhaseOperator::identity().scale(invariant_z(&f).z / 4.0);
        square = square.max(fc.powi(2).max_abs_diff(&expected));
        commute = commute.max(faraday_commutator(&f).max_abs());
    }
    suite.check(format!("faraday.square[{SAMPLES}]"), square, 1e-12);
    suite.check(format!("faraday.commute[{SAMPLES}]"), commute, 1e-12);

    let fields = s.field_set(FIELD_COUNT, NULL_FIELD_COUNT);
    let momenta: Vec<PhaseVector> = (0..FIELD_COUNT).map(|_| s.momentum()).collect();

    let mut factor = 0.0f64;
    let mut closed_vs_exp = 0.0f64;
    let mut branch = 0.0f64;
    for f in &fields {
        for &tau in &TAU_GRID {
            factor = factor.max(factorization_residual(f, tau));
            let exact = matrix_exp(&faraday_tensor(f).scale_real(tau));
            closed_vs_exp = closed_vs_exp.max(rel_op(&exp_faraday(f, tau), &exact));
            let w = invariant_z(f).w;
            branch = branch.max(exp_faraday_with_root(f, w, tau).max_abs_diff(&exp_faraday_with_root(f, -w, tau)));
        }
    }
    suite.check(format!("flow.factorization[{FIELD_COUNT}]"), factor, 1e-11);
    suite.check(
        format!("closed_form_vs_matrix_exp[{FIELD_COUNT}]"),
        closed_vs_exp,
        1e-12,
    );
    suite.check(format!("branch_independence[{FIELD_COUNT}]"), branch, 0.0);

    let mut worst = EvolutionResiduals::default();
    for (f, p0) in fields.iter().zip(momenta.iter()) {
        let r = evolution_residuals(f, p0, &TAU_GRID, RK4_STEPS);
        worst.deviation = worst.deviation.max(r.deviation);
        worst.mass_shell = worst.mass_shell.max(r.mass_shell);
        worst.reality = worst.reality.max(r.reality);
    }
    suite.check(format!("closed_form_vs_rk4[{FIELD_COUNT}]"), worst.deviation, 1e-8);
    suite.check(format!("mass_shell[{FIELD_COUNT}]"), worst.mass_shell, 1e-11);
    suite.check(format!("reality[{FIELD_COUNT}]"), worst.reality, 1e-11);

    let mut invariance = 0.0f64;
    for f in &fields {
        let z = invariant_z(f).z;
        for j in 1..=3 {
            let x = *pi_half(PoincareGenerator::Angular(0, j), Chirality::Plus).l0.operator();
            for phi in [0.4, -1.1] {
                let g = exponential_flow(&x, phi);
                let g_inv = exponential_flow(&x, -phi);
                let moved = em::transform_field(f, &g, &g_inv);
                invariance = invariance.max(rel_scalar(invariant_z(&moved).z, z));
            }
        }
    }
    suite.check(format!("z.lorentz_invariance[{FIELD_COUNT}]"), invariance, 1e-11);

    let mut force = 0.0f64;
    for (f, p) in fields.iter().zip(momenta.iter()) {
        for op in [*em::field_tensor(f).operator(), evolution_generator(f)] {
            force = force.max(scalar_product(p, &em::lorentz_force(&op, p)).norm());
        }
    }
    suite.check(format!("lorentz_force.orthogonal[{FIELD_COUNT}]"), force, 1e-13);
    suite.finish()
}

pub fn all_pass(reports: &[SuiteReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
