//! Matrix representations of weighted composition operators and their
//! measure-theoretic primitives: the pushforward density h_{φ,w}, fiberwise
//! conditional expectation, its pushforward, and kernel projections.
//!
//! On a finite discrete space every fiber φ⁻¹({x}) is a finite set of atoms,
//! so the density is an exact fiber sum
//!
//! ```text
//! h_{φ,w}(x) = Σ_{y: φ(y)=x} |w(y)|²·μ(y) / μ(x)
//! ```
//!
//! and the conditional expectation is the μ_w-weighted fiber average. The
//! measure-theoretic conventions 1/0 = ∞ and 0·∞ = 0 are realized by explicit
//! zero-mass branching; no floating-point infinities are produced.

use crate::matrix::OperatorMatrix;
use crate::measure::{DiscreteMeasureSpace, L2Function, WeightedSymbol};
use crate::scalar::{real, Scalar, C};
use num_complex::Complex;

/// A nonnegative real function per atom (a Radon–Nikodym density).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityFunction<T: Scalar> {
    values: Vec<T>,
}

impl<T: Scalar> DensityFunction<T> {
    pub(crate) fn from_raw(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn value(&self, x: usize) -> T {
        self.values[x]
    }

    pub fn max(&self) -> T {
        self.values.iter().fold(T::zero(), |acc, &v| acc.max(v))
    }

    /// Threshold below which a density value counts as zero:
    /// ε_h = 1e-12 · max(1, max h). Exact fiber sums of exact zeros stay
    /// exactly zero, but densities of derived weights (ŵ, w̃) carry rounding.
    pub fn zero_threshold(&self) -> T {
        real::<T>(1e-12) * T::one().max(self.max())
    }

    /// True when the density counts as positive at `x`.
    pub fn positive_at(&self, x: usize, threshold: T) -> bool {
        self.values[x] > threshold
    }
}

/// Per-symbol fiber bookkeeping shared by the operations below.
pub(crate) struct FiberData<T: Scalar> {
    /// μ_w(φ⁻¹({x})) per atom x.
    pub fiber_weight_mass: Vec<T>,
    /// h_{φ,w}(x) = μ_w(φ⁻¹({x})) / μ(x).
    pub density: Vec<T>,
    /// h_{φ,w}(x) > ε_h, i.e. x is an atom of μ_w∘φ⁻¹.
    pub active: Vec<bool>,
}

pub(crate) fn fiber_data<T: Scalar>(symbol: &WeightedSymbol<T>) -> FiberData<T> {
    let n = symbol.size();
    let space = symbol.space();
    let mut fiber_weight_mass = vec![T::zero(); n];
    let mut density = vec![T::zero(); n];
    for x in 0..n {
        let mut mass = T::zero();
        for &y in symbol.fiber(x) {
            mass = mass + symbol.weight_measure_at(y);
        }
        fiber_weight_mass[x] = mass;
        density[x] = mass / space.mass(x);
    }
    let max = density.iter().fold(T::zero(), |acc, &v| acc.max(v));
    let threshold = real::<T>(1e-12) * T::one().max(max);
    let active = density.iter().map(|&h| h > threshold).collect();
    FiberData {
        fiber_weight_mass,
        density,
        active,
    }
}

/// Applies the operator itself: (C_{φ,w} f)(x) = w(x)·f(φ(x)).
pub fn apply_operator<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    f: &L2Function<T>,
) -> L2Function<T> {
    assert_eq!(f.len(), symbol.size(), "function length mismatch");
    let values = (0..symbol.size())
        .map(|x| symbol.weight_at(x) * f.value(symbol.phi_at(x)))
        .collect();
    L2Function::from_raw(values)
}

/// Matrix of C_{φ,w} in the ℓ²-frame:
/// A[x][y] = w(x)·√(μ(x)/μ(y)) when φ(x) = y, else 0.
pub fn matrix_of<T: Scalar>(symbol: &WeightedSymbol<T>) -> OperatorMatrix<T> {
    let n = symbol.size();
    let space = symbol.space();
    let mut m = OperatorMatrix::zeros(n);
    for x in 0..n {
        let y = symbol.phi_at(x);
        let scale = (space.mass(x) / space.mass(y)).sqrt();
        let w = symbol.weight_at(x);
        m.set(x, y, Complex::new(w.re * scale, w.im * scale));
    }
    m
}

/// The density h_{φ,w} of μ_w∘φ⁻¹ with respect to μ.
pub fn radon_nikodym<T: Scalar>(symbol: &WeightedSymbol<T>) -> DensityFunction<T> {
    DensityFunction::from_raw(fiber_data(symbol).density)
}

/// Conditional expectation E_{φ,w}(f) with respect to φ⁻¹-measurable sets and
/// the measure μ_w: the μ_w-weighted average of f over the fiber through each
/// atom. On fibers of zero μ_w-mass the value is 0.
pub fn conditional_expectation<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    f: &L2Function<T>,
) -> L2Function<T> {
    assert_eq!(f.len(), symbol.size(), "function length mismatch");
    let fibers = fiber_data(symbol);
    let averages = fiber_averages(symbol, f, &fibers);
    let values = (0..symbol.size())
        .map(|y| averages[symbol.phi_at(y)])
        .collect();
    L2Function::from_raw(values)
}

/// The pushforward E_{φ,w}(f)∘φ⁻¹: the fiber average placed at the fiber's
/// base atom, 0 wherever h_{φ,w} vanishes.
pub fn expectation_pushforward<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    f: &L2Function<T>,
) -> L2Function<T> {
    assert_eq!(f.len(), symbol.size(), "function length mismatch");
    let fibers = fiber_data(symbol);
    L2Function::from_raw(fiber_averages(symbol, f, &fibers))
}

/// μ_w-weighted fiber averages indexed by the base atom; 0 on inactive fibers.
fn fiber_averages<T: Scalar>(
    symbol: &WeightedSymbol<T>,
    f: &L2Function<T>,
    fibers: &FiberData<T>,
) -> Vec<C<T>> {
    (0..symbol.size())
        .map(|x| {
            if !fibers.active[x] {
                return Complex::new(T::zero(), T::zero());
            }
            let mut num = Complex::new(T::zero(), T::zero());
            for &y in symbol.fiber(x) {
                num = num + f.value(y) * symbol.weight_measure_at(y);
            }
            let den = fibers.fiber_weight_mass[x];
            Complex::new(num.re / den, num.im / den)
        })
        .collect()
}

/// Orthogonal projection onto ker C_{φ,w} = χ_{{h_{φ,w}=0}}·L²(μ): the 0/1
/// diagonal selecting atoms where the density vanishes.
pub fn kernel_projector<T: Scalar>(symbol: &WeightedSymbol<T>) -> OperatorMatrix<T> {
    let fibers = fiber_data(symbol);
    let n = symbol.size();
    let mut m = OperatorMatrix::zeros(n);
    for x in 0..n {
        if !fibers.active[x] {
            m.set(x, x, Complex::new(T::one(), T::zero()));
        }
    }
    m
}

/// Multiplication operator M_g as a matrix (diagonal in the ℓ²-frame).
pub fn multiplication_matrix<T: Scalar>(
    space: &DiscreteMeasureSpace<T>,
    g: &[C<T>],
) -> OperatorMatrix<T> {
    assert_eq!(g.len(), space.size(), "multiplier length mismatch");
    OperatorMatrix::diagonal(g)
}
