//! Closed-form reciprocals (maximal Tseng / Moore–Penrose inverses) of
//! weighted composition operators and their relatives.
//!
//! On a finite discrete space the reciprocal of C_{φ,w} acts by a weighted
//! fiber average,
//!
//! ```text
//! (C† f)(x) = Σ_{y: φ(y)=x} f(y)·conj(w(y))·μ(y)  /  Σ_{y: φ(y)=x} |w(y)|²·μ(y)
//! ```
//!
//! with value 0 wherever the denominator vanishes, and the reciprocal of the
//! adjoint is again a weighted composition operator, with the derived weight
//! ŵ = w / (h_{φ,w}∘φ). Reciprocal matrices are assembled column by column
//! from these formulas, never by matrix algebra, so they stay fully
//! independent of the SVD oracle that validates them.

use crate::matrix::{matrix_from_map, OperatorMatrix};
use crate::measure::{L2Function, ValidationError, WeightedSymbol};
use crate::operator::{fiber_data, kernel_projector, matrix_of};
use crate::scalar::{Scalar, C};
use num_complex::Complex;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ReciprocalError {
    #[error("composition reciprocal requires weight identically 1; atom {label} has weight {re}{im:+}i")]
    NonUnitWeight { label: String, re: f64, im: f64 },
    #[error("quotient reciprocal requires nonzero weight everywhere; atom {label} has weight 0")]
    ZeroWeight { label: String },
}

/// A forward operator with its formula-based reciprocal and the two
/// projections from the defining identities: C C† = P onto the closure of the
/// range, C† C = P onto the orthocomplement of the kernel.
#[derive(Debug, Clone)]
pub struct ReciprocalPair<T: Scalar> {
    pub forward: OperatorMatrix<T>,
    pub reciprocal: OperatorMatrix<T>,
    pub kernel_proj: OperatorMatrix<T>,
    pub range_proj: OperatorMatrix<T>,
}

/// (C_{φ,w}† f)(x): the conj(w)-weighted fiber average of f against μ,
/// normalized by the μ_w-mass of the fiber; 0 on fibers of zero μ_w-mass.
pub fn wco_reciprocal<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    f: &L2Function<T>,
) -> L2Function<T> {
    assert_eq!(f.len(), symbol.size(), "function length mismatch");
    let fibers = fiber_data(symbol);
    let space = symbol.space();
    let values = (0..symbol.size())
        .map(|x| {
            if !fibers.active[x] {
                return Complex::new(T::zero(), T::zero());
            }
            let mut num = Complex::new(T::zero(), T::zero());
            for &y in symbol.fiber(x) {
                num = num + f.value(y) * symbol.weight_at(y).conj() * space.mass(y);
            }
            let den = fibers.fiber_weight_mass[x];
            Complex::new(num.re / den, num.im / den)
        })
        .collect();
    L2Function::from_raw(values)
}

/// ((C_{φ,w}*)† f)(x) = w(x)·f(φ(x)) / h_{φ,w}(φ(x)), 0 where the density
/// vanishes at φ(x).
pub fn adjoint_reciprocal<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    f: &L2Function<T>,
) -> L2Function<T> {
    assert_eq!(f.len(), symbol.size(), "function length mismatch");
    let fibers = fiber_data(symbol);
    let values = (0..symbol.size())
        .map(|x| {
            let target = symbol.phi_at(x);
            if !fibers.active[target] {
                return Complex::new(T::zero(), T::zero());
            }
            let h = fibers.density[target];
            let v = symbol.weight_at(x) * f.value(target);
            Complex::new(v.re / h, v.im / h)
        })
        .collect();
    L2Function::from_raw(values)
}

/// The derived symbol with weight ŵ = w / (h_{φ,w}∘φ), which realizes the
/// reciprocal of the adjoint as the weighted composition operator C_{φ,ŵ}.
pub fn derived_weight_hat<T: Scalar>(symbol: &WeightedSymbol<T>) -> WeightedSymbol<T> {
    let fibers = fiber_data(symbol);
    let weight = (0..symbol.size())
        .map(|x| {
            let target = symbol.phi_at(x);
            if !fibers.active[target] {
                return Complex::new(T::zero(), T::zero());
            }
            let h = fibers.density[target];
            let w = symbol.weight_at(x);
            Complex::new(w.re / h, w.im / h)
        })
        .collect();
    symbol
        .with_weight(weight)
        .expect("derived weight stays finite")
}

/// The derived symbol with weight 1̂ = 1 / (h_φ∘φ): the hat construction
/// applied after replacing w by the constant 1.
pub fn derived_one_hat<T: Scalar>(symbol: &WeightedSymbol<T>) -> WeightedSymbol<T> {
    derived_weight_hat(&symbol.with_unit_weight())
}

/// (M_w† f)(x) = f(x)/w(x) where w(x) ≠ 0 (exactly), else 0.
pub fn multiplication_reciprocal<T: Scalar>(
    weight: &[C<T>],
    f: &L2Function<T>,
) -> L2Function<T> {
    assert_eq!(f.len(), weight.len(), "function length mismatch");
    let values = weight
        .iter()
        .zip(f.values())
        .map(|(w, v)| {
            if w.re == T::zero() && w.im == T::zero() {
                Complex::new(T::zero(), T::zero())
            } else {
                v / w
            }
        })
        .collect();
    L2Function::from_raw(values)
}

/// Diagonal entries of M_w†: 1/w(x) where w(x) ≠ 0, else 0.
pub fn multiplication_reciprocal_diagonal<T: Scalar>(weight: &[C<T>]) -> Vec<C<T>> {
    weight
        .iter()
        .map(|w| {
            if w.re == T::zero() && w.im == T::zero() {
                Complex::new(T::zero(), T::zero())
            } else {
                Complex::new(T::one(), T::zero()) / w
            }
        })
        .collect()
}

/// (C_φ† f)(x): the plain μ-weighted fiber average pushed forward, defined for
/// symbols with weight identically 1; zero off the atoms of μ∘φ⁻¹.
pub fn composition_reciprocal<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    f: &L2Function<T>,
) -> Result<L2Function<T>, ReciprocalError> {
    if let Some(x) = (0..symbol.size())
        .find(|&x| symbol.weight_at(x) != Complex::new(T::one(), T::zero()))
    {
        let w = symbol.weight_at(x);
        return Err(ReciprocalError::NonUnitWeight {
            label: symbol.space().label(x).to_string(),
            re: crate::scalar::display_f64(w.re),
            im: crate::scalar::display_f64(w.im),
        });
    }
    Ok(wco_reciprocal(symbol, f))
}

/// The unitary part of the polar decomposition C_{φ,w} = U·|C_{φ,w}| as a
/// matrix: U = C_{φ,w̃} with w̃ = w / √(h_{φ,w}∘φ). U is a partial isometry.
pub fn unitary_part<T: Scalar>(symbol: &WeightedSymbol<T>) -> OperatorMatrix<T> {
    let fibers = fiber_data(symbol);
    let weight = (0..symbol.size())
        .map(|x| {
            let target = symbol.phi_at(x);
            if !fibers.active[target] {
                return Complex::new(T::zero(), T::zero());
            }
            let s = fibers.density[target].sqrt();
            let w = symbol.weight_at(x);
            Complex::new(w.re / s, w.im / s)
        })
        .collect();
    matrix_of(
        &symbol
            .with_weight(weight)
            .expect("polar weight stays finite"),
    )
}

/// Assembles the forward matrix, the formula-based reciprocal matrix (columns
/// are the closed form applied to frame basis vectors), the kernel projector,
/// and the range projector C·C†.
pub fn reciprocal_pair<T: Scalar>(symbol: &WeightedSymbol<T>) -> ReciprocalPair<T> {
    let forward = matrix_of(symbol);
    let reciprocal = matrix_from_map(symbol.space(), |f| wco_reciprocal(symbol, f));
    let kernel_proj = kernel_projector(symbol);
    let range_proj = forward.mul(&reciprocal);
    ReciprocalPair {
        forward,
        reciprocal,
        kernel_proj,
        range_proj,
    }
}

/// Matrix of the reciprocal of the adjoint, assembled from the closed form.
pub fn adjoint_reciprocal_matrix<T: Scalar>(symbol: &WeightedSymbol<T>) -> OperatorMatrix<T> {
    matrix_from_map(symbol.space(), |f| adjoint_reciprocal(symbol, f))
}

/// The quotient form of the reciprocal, valid when w vanishes nowhere:
/// C† f = E_φ(f·conj(w))∘φ⁻¹ / E_φ(|w|²)∘φ⁻¹. Coincides with
/// `wco_reciprocal` on its domain of validity.
pub fn quotient_reciprocal<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    f: &L2Function<T>,
) -> Result<L2Function<T>, ReciprocalError> {
    if let Some(x) = (0..symbol.size()).find(|&x| {
        let w = symbol.weight_at(x);
        w.re == T::zero() && w.im == T::zero()
    }) {
        return Err(ReciprocalError::ZeroWeight {
            label: symbol.space().label(x).to_string(),
        });
    }
    assert_eq!(f.len(), symbol.size(), "function length mismatch");
    let space = symbol.space();
    let unit = symbol.with_unit_weight();
    let fibers = fiber_data(&unit);
    let values = (0..symbol.size())
        .map(|x| {
            if !fibers.active[x] {
                return Complex::new(T::zero(), T::zero());
            }
            // Unweighted fiber averages of f·conj(w) and |w|² share the
            // normalizing fiber mass, which cancels in the quotient; both are
            // kept explicit to mirror the defining expression.
            let fiber_mass = fibers.fiber_weight_mass[x];
            let mut num = Complex::new(T::zero(), T::zero());
            let mut den = T::zero();
            for &y in unit.fiber(x) {
                num = num + f.value(y) * symbol.weight_at(y).conj() * space.mass(y);
                den = den + symbol.weight_at(y).norm_sqr() * space.mass(y);
            }
            let avg_num = Complex::new(num.re / fiber_mass, num.im / fiber_mass);
            let avg_den = den / fiber_mass;
            Complex::new(avg_num.re / avg_den, avg_num.im / avg_den)
        })
        .collect();
    Ok(L2Function::from_raw(values))
}

/// Largest K over Δ∩{w≠0} of 1/h_{φ,w}(φ(y)); `None` when the indicator set
/// misses the weight's support (then C†χ_Δ = 0).
pub fn indicator_domain_constant<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    set: &[usize],
) -> Option<T> {
    let fibers = fiber_data(symbol);
    let mut best: Option<T> = None;
    for &y in set {
        let w = symbol.weight_at(y);
        if w.re == T::zero() && w.im == T::zero() {
            continue;
        }
        let h = fibers.density[symbol.phi_at(y)];
        // y carries positive μ_w-mass into its fiber, so h > 0 here.
        let k = T::one() / h;
        best = Some(best.map_or(k, |b: T| b.max(k)));
    }
    best
}

/// Sanity error kept alongside the pair for callers that persist it.
pub fn validate_pair<T: Scalar>(pair: &ReciprocalPair<T>) -> Result<(), ValidationError> {
    let dims = [
        pair.forward.dim(),
        pair.reciprocal.dim(),
        pair.kernel_proj.dim(),
        pair.range_proj.dim(),
    ];
    if dims.iter().any(|&d| d != dims[0]) {
        return Err(ValidationError::FunctionLengthMismatch {
            len: dims[1],
            expected: dims[0],
        });
    }
    Ok(())
}
