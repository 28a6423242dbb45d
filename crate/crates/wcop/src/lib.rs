//! Weighted composition operators on finite discrete measure spaces.
//!
//! A space is a finite list of atoms with positive masses μ(x); a symbol
//! (φ, w) induces the operator C_{φ,w} f = w·(f∘φ) on L²(μ). This crate
//! builds those operators in an orthonormal frame, computes their reciprocals
//! (Moore–Penrose inverses) from closed-form fiber formulas, and verifies
//! every identity against an independent Jacobi-SVD pseudoinverse oracle.
//!
//! The main pieces:
//!
//! * [`measure`]: spaces, symbols, L² vectors, the inner product;
//! * [`operator`]: operator matrices, the density h_{φ,w}, conditional
//!   expectations, kernel projections;
//! * [`reciprocal`]: the closed-form reciprocal family C_{φ,w}†, (C_{φ,w}*)†,
//!   M_w†, C_φ†, derived weights, the unitary part;
//! * [`oracle`]: one-sided Jacobi SVD, pseudoinverse, Penrose checks;
//! * [`suite`]: executable checkers for the operator identities, producing
//!   [`report::VerificationReport`]s;
//! * [`scenario`]: deterministic reference truncations and seeded random
//!   symbols.
//!
//! All numerics are generic over the real scalar (`f32` or `f64`) through
//! [`scalar::Scalar`]; the aliases below fix the double-precision types used
//! by the command-line tools and the verification defaults.

pub mod matrix;
pub mod measure;
pub mod operator;
pub mod oracle;
pub mod reciprocal;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod scenario;
pub mod suite;

pub use matrix::{Frame, OperatorMatrix};
pub use measure::{DiscreteMeasureSpace, L2Function, ValidationError, WeightedSymbol};
pub use operator::DensityFunction;
pub use oracle::{OracleError, SvdResult};
pub use reciprocal::{ReciprocalError, ReciprocalPair};
pub use report::{
    Check, ConditionCheck, ConditionProfile, ConditionStatus, Tolerances, VerificationReport,
};
pub use scalar::Scalar;
pub use scenario::{FiberProfile, ScenarioError, ScenarioKind, ScenarioSpec};
pub use suite::SuiteError;

/// Complex value over a real scalar.
pub use num_complex::Complex;

/// Double-precision complex value.
pub type C64 = Complex<f64>;
/// Single-precision complex value.
pub type C32 = Complex<f32>;

/// Double-precision aliases (the defaults used by the CLI and the
/// acceptance suite).
pub type Space64 = DiscreteMeasureSpace<f64>;
pub type Symbol64 = WeightedSymbol<f64>;
pub type Function64 = L2Function<f64>;
pub type Matrix64 = OperatorMatrix<f64>;
pub type Density64 = DensityFunction<f64>;
pub type Report64 = VerificationReport<f64>;
pub type Profile64 = ConditionProfile<f64>;
pub type Tolerances64 = Tolerances<f64>;

/// Single-precision aliases.
pub type Space32 = DiscreteMeasureSpace<f32>;
pub type Symbol32 = WeightedSymbol<f32>;
pub type Function32 = L2Function<f32>;
pub type Matrix32 = OperatorMatrix<f32>;
