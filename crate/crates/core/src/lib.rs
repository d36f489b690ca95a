//! Numerical library for the complex relativistic phase space S⁴ = ℂ⁴.
//!
//! * [`space`]: vectors, the Minkowski-bilinear scalar product and its
//!   Lorentzian/symplectic split.
//! * [`triproduct`]: the geometric tri-product and the `D`, `D̂`, `D_{αβ}`
//!   operators.
//! * [`liealgebra`]: qo(S⁴), QO(S⁴) membership and the graded algebra
//!   L(S⁴) = L₀ ⊕ L₁ ⊕ L₂.
//! * [`representations`]: spin-1 `π` and spin-1/2 `π±` representations of the
//!   Poincaré algebra, flows, and the Newman–Penrose tetrad.
//! * [`em`]: field tensors, the complex Faraday tensor and closed-form
//!   charged-particle evolution.
//! * [`verify`]: seeded property suites and machine-readable reports.
//! * [`cli`]: the `phasespace` command-line front end.
//!
//! Everything is a pure function over small immutable values.

// Tensor code reads best with explicit index loops.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod em;
pub mod error;
pub mod format;
pub mod liealgebra;
pub mod operator;
pub mod representations;
pub mod space;
pub mod triproduct;
pub mod verify;

pub use num_complex::Complex64;

pub use em::{EMField, FieldInvariant};
pub use error::{PhaseError, Result};
pub use liealgebra::{GradedElement, ModuleAction, QoElement};
pub use operator::PhaseOperator;
pub use representations::{Chirality, NpBasis, PoincareGenerator, Representation};
pub use space::{Metric, PhaseVector};

/// Default absolute comparison tolerance for order-one quantities.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
