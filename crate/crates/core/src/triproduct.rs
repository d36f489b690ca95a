//! The geometric tri-product on S⁴ and the operators it induces.

use num_complex::Complex64;

pub use crate::operator::PhaseOperator;
use crate::space::{scalar_product, Metric, PhaseVector};

/// `{a, b, c} = ⟨a|b⟩c − ⟨c|a⟩b + ⟨b|c⟩a`.
pub fn tri_product(a: &PhaseVector, b: &PhaseVector, c: &PhaseVector) -> PhaseVector {
    c.scale(scalar_product(a, b)) - b.scale(scalar_product(c, a)) + a.scale(scalar_product(b, c))
}

/// The same product written out in coordinates,
/// `d^μ = η_{αβ}a^α b^β c^μ − η_{αβ}c^α a^β b^μ + η_{αβ}b^α c^β a^μ`.
///
/// Kept as a separate code path so the two forms can be checked against
/// each other.
pub fn tri_product_coords(a: &PhaseVector, b: &PhaseVector, c: &PhaseVector) -> PhaseVector {
    let contract = |x: &PhaseVector, y: &PhaseVector| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for alpha in 0..4 {
            for beta in 0..4 {
                let eta = Metric::component(alpha, beta);
                if eta != 0.0 {
                    acc += x.component(alpha) * y.component(beta) * eta;
                }
            }
        }
        acc
    };
    let ab = contract(a, b);
    let ca = contract(c, a);
    let bc = contract(b, c);
    PhaseVector::new(std::array::from_fn(|mu| {
        ab * c.component(mu) - ca * b.component(mu) + bc * a.component(mu)
    }))
}

/// `D(a, b): c ↦ {a, b, c}`.
pub fn d_operator(a: &PhaseVector, b: &PhaseVector) -> PhaseOperator {
    PhaseOperator::from_images(std::array::from_fn(|mu| tri_product(a, b, &PhaseVector::basis(mu))))
}

/// `D̂(a, b) = ½(D(a, b) − D(b, a))`.
pub fn d_hat(a: &PhaseVector, b: &PhaseVector) -> PhaseOperator {
    (d_operator(a, b) - d_operator(b, a)).scale_real(0.5)
}

/// `D_{αβ}` in closed form: `D_{αβ} u_γ = −η_{γα} u_β + η_{βγ} u_α`.
///
/// Agrees with `d_hat(u_α, u_β)` but shares no code with it.
pub fn d_basis(alpha: usize, beta: usize) -> PhaseOperator {
    assert!(alpha < 4 && beta < 4, "d_basis index out of range");
    let mut rows = [[0.0f64; 4]; 4];
    for (gamma, _) in Metric::DIAGONAL.iter().enumerate() {
        rows[beta][gamma] -= Metric::component(gamma, alpha);
        rows[alpha][gamma] += Metric::component(beta, gamma);
    }
    PhaseOperator::from_real_rows(rows)
}
