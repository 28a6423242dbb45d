//! Finite discrete measure spaces, weighted composition symbols, and L²(μ)
//! vectors.
//!
//! A space is a list of labeled atoms with strictly positive finite masses
//! μ(x). A symbol is a total self-map φ of the atoms together with a complex
//! weight w per atom; it induces the operator f ↦ w·(f∘φ) on L²(μ). Zero
//! masses are rejected at construction so that almost-everywhere statements
//! become exact statements about atoms.

use crate::scalar::{display_f64, real, Scalar, C};
use num_complex::Complex;
use thiserror::Error;

/// Hard cap on the number of atoms; matrices are dense.
pub const MAX_ATOMS: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ValidationError {
    #[error("mass count {masses} does not match label count {labels}")]
    LengthMismatch { labels: usize, masses: usize },
    #[error("empty space: at least one atom is required")]
    EmptySpace,
    #[error("space too large: {size} atoms exceeds the cap of {MAX_ATOMS}")]
    TooLarge { size: usize },
    #[error("duplicate label `{label}`")]
    DuplicateLabel { label: String },
    #[error("non-positive mass at {label}: {value}")]
    NonPositiveMass { label: String, value: f64 },
    #[error("non-finite mass at {label}")]
    NonFiniteMass { label: String },
    #[error("phi length {phi} does not match space size {size}")]
    PhiLengthMismatch { phi: usize, size: usize },
    #[error("phi image out of range at {label}: target {target} not below {size}")]
    PhiOutOfRange {
        label: String,
        target: usize,
        size: usize,
    },
    #[error("weight length {weights} does not match space size {size}")]
    WeightLengthMismatch { weights: usize, size: usize },
    #[error("non-finite weight at {label}")]
    NonFiniteWeight { label: String },
    #[error("function length {len} does not match space size {expected}")]
    FunctionLengthMismatch { len: usize, expected: usize },
    #[error("non-finite function value at index {index}")]
    NonFiniteValue { index: usize },
}

/// A finite measure space: distinct atom labels with masses μ(x) > 0.
///
/// Atom order is the user-supplied order; every vector and matrix in the
/// crate indexes atoms in this order.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteMeasureSpace<T: Scalar> {
    labels: Vec<String>,
    masses: Vec<T>,
}

impl<T: Scalar> DiscreteMeasureSpace<T> {
    /// Validates and builds a space (`build_space`).
    pub fn new(
        labels: Vec<String>,
        masses: Vec<T>,
    ) -> Result<Self, ValidationError> {
        if labels.len() != masses.len() {
            return Err(ValidationError::LengthMismatch {
                labels: labels.len(),
                masses: masses.len(),
            });
        }
        if labels.is_empty() {
            return Err(ValidationError::EmptySpace);
        }
        if labels.len() > MAX_ATOMS {
            return Err(ValidationError::TooLarge { size: labels.len() });
        }
        let mut seen = std::collections::HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(ValidationError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        for (label, &mass) in labels.iter().zip(&masses) {
            if !mass.is_finite() {
                return Err(ValidationError::NonFiniteMass {
                    label: label.clone(),
                });
            }
            if mass <= T::zero() {
                return Err(ValidationError::NonPositiveMass {
                    label: label.clone(),
                    value: display_f64(mass),
                });
            }
        }
        Ok(Self { labels, masses })
    }

    /// Space with the given masses and labels "0", "1", ...
    pub fn with_indexed_labels(masses: Vec<T>) -> Result<Self, ValidationError> {
        let labels = (0..masses.len()).map(|i| i.to_string()).collect();
        Self::new(labels, masses)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mass(&self, index: usize) -> T {
        self.masses[index]
    }

    pub fn masses(&self) -> &[T] {
        &self.masses
    }

    /// Total mass μ(Δ) of a set of atom indices.
    pub fn set_mass(&self, indices: &[usize]) -> T {
        indices
            .iter()
            .fold(T::zero(), |acc, &i| acc + self.masses[i])
    }
}

/// A transformation φ and weight w over a space; induces f ↦ w·(f∘φ).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSymbol<T: Scalar> {
    space: DiscreteMeasureSpace<T>,
    phi: Vec<usize>,
    weight: Vec<C<T>>,
    /// μ_w(x) = |w(x)|²·μ(x), the weighted measure of each atom.
    weight_measure: Vec<T>,
    /// fibers[x] = φ⁻¹({x}), each in increasing atom order.
    fibers: Vec<Vec<usize>>,
}

impl<T: Scalar> WeightedSymbol<T> {
    /// Validates and builds a symbol (`build_symbol`).
    ///
    /// Totality of φ makes the pushforward of μ_w automatically absolutely
    /// continuous with respect to μ, so no further admissibility check is
    /// needed.
    pub fn new(
        space: DiscreteMeasureSpace<T>,
        phi: Vec<usize>,
        weight: Vec<C<T>>,
    ) -> Result<Self, ValidationError> {
        let size = space.size();
        if phi.len() != size {
            return Err(ValidationError::PhiLengthMismatch {
                phi: phi.len(),
                size,
            });
        }
        for (x, &target) in phi.iter().enumerate() {
            if target >= size {
                return Err(ValidationError::PhiOutOfRange {
                    label: space.label(x).to_string(),
                    target,
                    size,
                });
            }
        }
        if weight.len() != size {
            return Err(ValidationError::WeightLengthMismatch {
                weights: weight.len(),
                size,
            });
        }
        for (x, w) in weight.iter().enumerate() {
            if !w.re.is_finite() || !w.im.is_finite() {
                return Err(ValidationError::NonFiniteWeight {
                    label: space.label(x).to_string(),
                });
            }
        }
        let weight_measure: Vec<T> = weight
            .iter()
            .zip(space.masses())
            .map(|(w, &m)| w.norm_sqr() * m)
            .collect();
        let mut fibers = vec![Vec::new(); size];
        for (y, &target) in phi.iter().enumerate() {
            fibers[target].push(y);
        }
        Ok(Self {
            space,
            phi,
            weight,
            weight_measure,
            fibers,
        })
    }

    /// The identity symbol: φ = id, w ≡ 1, inducing the identity operator.
    pub fn identity(space: DiscreteMeasureSpace<T>) -> Self {
        let size = space.size();
        let phi = (0..size).collect();
        let weight = vec![Complex::new(T::one(), T::zero()); size];
        Self::new(space, phi, weight).expect("identity symbol is valid")
    }

    pub fn space(&self) -> &DiscreteMeasureSpace<T> {
        &self.space
    }

    pub fn size(&self) -> usize {
        self.space.size()
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn phi_at(&self, x: usize) -> usize {
        self.phi[x]
    }

    pub fn weight(&self) -> &[C<T>] {
        &self.weight
    }

    pub fn weight_at(&self, x: usize) -> C<T> {
        self.weight[x]
    }

    /// μ_w(x) = |w(x)|²·μ(x).
    pub fn weight_measure_at(&self, x: usize) -> T {
        self.weight_measure[x]
    }

    /// The fiber φ⁻¹({x}).
    pub fn fiber(&self, x: usize) -> &[usize] {
        &self.fibers[x]
    }

    /// Same space and φ, weight replaced.
    pub fn with_weight(&self, weight: Vec<C<T>>) -> Result<Self, ValidationError> {
        Self::new(self.space.clone(), self.phi.clone(), weight)
    }

    /// Same space and φ, weight ≡ 1 (the plain composition symbol).
    pub fn with_unit_weight(&self) -> Self {
        let one = Complex::new(T::one(), T::zero());
        self.with_weight(vec![one; self.size()])
            .expect("unit weight is valid")
    }

    /// True when every weight equals 1 exactly.
    pub fn has_unit_weight(&self) -> bool {
        self.weight
            .iter()
            .all(|w| w.re == T::one() && w.im == T::zero())
    }

    /// True when no weight is exactly zero.
    pub fn has_nonzero_weight(&self) -> bool {
        self.weight
            .iter()
            .all(|w| w.re != T::zero() || w.im != T::zero())
    }
}

/// An element of L²(μ): one complex value per atom.
#[derive(Debug, Clone, PartialEq)]
pub struct L2Function<T: Scalar> {
    values: Vec<C<T>>,
}

impl<T: Scalar> L2Function<T> {
    /// Validates finiteness of every entry.
    pub fn new(values: Vec<C<T>>) -> Result<Self, ValidationError> {
        for (index, v) in values.iter().enumerate() {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(ValidationError::NonFiniteValue { index });
            }
        }
        Ok(Self { values })
    }

    pub(crate) fn from_raw(values: Vec<C<T>>) -> Self {
        Self { values }
    }

    pub fn zero(len: usize) -> Self {
        Self {
            values: vec![Complex::new(T::zero(), T::zero()); len],
        }
    }

    /// Indicator basis function e_i (1 at atom `i`, 0 elsewhere).
    pub fn basis(len: usize, i: usize) -> Self {
        let mut values = vec![Complex::new(T::zero(), T::zero()); len];
        values[i] = Complex::new(T::one(), T::zero());
        Self { values }
    }

    /// Indicator χ_Δ of a set of atom indices.
    pub fn indicator(len: usize, set: &[usize]) -> Self {
        let mut values = vec![Complex::new(T::zero(), T::zero()); len];
        for &i in set {
            values[i] = Complex::new(T::one(), T::zero());
        }
        Self { values }
    }

    /// Real-valued function lifted into L².
    pub fn from_reals(values: &[T]) -> Self {
        Self {
            values: values
                .iter()
                .map(|&v| Complex::new(v, T::zero()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[C<T>] {
        &self.values
    }

    pub fn value(&self, i: usize) -> C<T> {
        self.values[i]
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "function length mismatch");
        Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// ⟨f, g⟩ = Σ_x f(x)·conj(g(x))·μ(x), the standard inner product of L²(μ).
pub fn inner_product<T: Scalar>(
    space: &DiscreteMeasureSpace<T>,
    f: &L2Function<T>,
    g: &L2Function<T>,
) -> Result<C<T>, ValidationError> {
    if f.len() != space.size() {
        return Err(ValidationError::FunctionLengthMismatch {
            len: f.len(),
            expected: space.size(),
        });
    }
    if g.len() != space.size() {
        return Err(ValidationError::FunctionLengthMismatch {
            len: g.len(),
            expected: space.size(),
        });
    }
    let mut acc = Complex::new(T::zero(), T::zero());
    for x in 0..space.size() {
        acc = acc + f.value(x) * g.value(x).conj() * space.mass(x);
    }
    Ok(acc)
}

/// ‖f‖ in L²(μ).
pub fn l2_norm<T: Scalar>(space: &DiscreteMeasureSpace<T>, f: &L2Function<T>) -> T {
    let mut acc = T::zero();
    for x in 0..space.size() {
        acc = acc + f.value(x).norm_sqr() * space.mass(x);
    }
    acc.sqrt()
}

/// Convenience constructor used throughout the tests: uniform unit masses.
pub fn counting_space<T: Scalar>(labels: Vec<String>) -> Result<DiscreteMeasureSpace<T>, ValidationError> {
    let masses = vec![real::<T>(1.0); labels.len()];
    DiscreteMeasureSpace::new(labels, masses)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    /// The three-atom uniform space used as a fixture across the crate.
    pub(crate) fn uniform3() -> DiscreteMeasureSpace<f64> {
        DiscreteMeasureSpace::new(labels(&["0", "1", "2"]), vec![1.0, 1.0, 1.0]).unwrap()
    }

    #[test]
    fn minimal_space() {
        let space = DiscreteMeasureSpace::new(labels(&["a"]), vec![1.0]).unwrap();
        assert_eq!(space.size(), 1);
        assert_eq!(space.label(0), "a");
    }

    #[test]
    fn rejects_non_positive_mass() {
        let err = DiscreteMeasureSpace::new(labels(&["a", "b"]), vec![1.0, -2.0]).unwrap_err();
        assert_eq!(
            err.to_string(),
            "non-positive mass at b: -2"
        );
        let err = DiscreteMeasureSpace::new(labels(&["a"]), vec![0.0]).unwrap_err();
        assert!(matches!(err, ValidationError::NonPositiveMass { .. }));
        let err = DiscreteMeasureSpace::new(labels(&["a"]), vec![f64::INFINITY]).unwrap_err();
        assert!(matches!(err, ValidationError::NonFiniteMass { .. }));
    }

    #[test]
    fn rejects_duplicates_and_empty() {
        let err = DiscreteMeasureSpace::new(labels(&["a", "a"]), vec![1.0, 1.0]).unwrap_err();
        assert!(matches!(err, ValidationError::DuplicateLabel { .. }));
        let err = DiscreteMeasureSpace::<f64>::new(vec![], vec![]).unwrap_err();
        assert!(matches!(err, ValidationError::EmptySpace));
    }

    #[test]
    fn rejects_oversized_spaces() {
        let labels = (0..=MAX_ATOMS).map(|i| i.to_string()).collect();
        let masses = vec![1.0; MAX_ATOMS + 1];
        let err = DiscreteMeasureSpace::new(labels, masses).unwrap_err();
        assert!(matches!(err, ValidationError::TooLarge { .. }));
    }

    #[test]
    fn symbol_validation() {
        let space = uniform3();
        // The canonical fixture: everything maps to atom 1, weight (1, 2, 0).
        let sym = WeightedSymbol::new(
            space.clone(),
            vec![1, 1, 1],
            vec![
                Complex::new(1.0, 0.0),
                Complex::new(2.0, 0.0),
                Complex::new(0.0, 0.0),
            ],
        )
        .unwrap();
        assert_eq!(sym.fiber(1), &[0, 1, 2]);
        assert_eq!(sym.fiber(0), &[] as &[usize]);
        assert_eq!(sym.weight_measure_at(1), 4.0);

        let err = WeightedSymbol::new(
            space.clone(),
            vec![5, 1, 1],
            vec![Complex::new(1.0, 0.0); 3],
        )
        .unwrap_err();
        assert!(matches!(err, ValidationError::PhiOutOfRange { target: 5, .. }));

        let err = WeightedSymbol::new(
            space,
            vec![1, 1, 1],
            vec![
                Complex::new(f64::NAN, 0.0),
                Complex::new(1.0, 0.0),
                Complex::new(1.0, 0.0),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, ValidationError::NonFiniteWeight { .. }));
    }

    #[test]
    fn identity_symbol_is_valid() {
        let sym = WeightedSymbol::identity(uniform3());
        assert!(sym.has_unit_weight());
        assert_eq!(sym.phi(), &[0, 1, 2]);
        for x in 0..3 {
            assert_eq!(sym.fiber(x), &[x]);
        }
    }

    #[test]
    fn inner_product_values() {
        let space = uniform3();
        let ones = L2Function::from_reals(&[1.0, 1.0, 1.0]);
        let ip = inner_product(&space, &ones, &ones).unwrap();
        assert_eq!(ip, Complex::new(3.0, 0.0));

        let f = L2Function::basis(3, 0);
        let g = L2Function::basis(3, 1);
        assert_eq!(inner_product(&space, &f, &g).unwrap(), Complex::new(0.0, 0.0));

        let heavy =
            DiscreteMeasureSpace::new(labels(&["a"]), vec![2.0]).unwrap();
        let one = L2Function::from_reals(&[1.0]);
        assert_eq!(
            inner_product(&heavy, &one, &one).unwrap(),
            Complex::new(2.0, 0.0)
        );
    }

    #[test]
    fn inner_product_rejects_length_mismatch() {
        let space = uniform3();
        let short = L2Function::from_reals(&[1.0]);
        let ones = L2Function::from_reals(&[1.0, 1.0, 1.0]);
        assert!(matches!(
            inner_product(&space, &short, &ones),
            Err(ValidationError::FunctionLengthMismatch { .. })
        ));
    }

    #[test]
    fn l2_function_rejects_non_finite() {
        let err = L2Function::new(vec![Complex::new(f64::NAN, 0.0)]).unwrap_err();
        assert!(matches!(err, ValidationError::NonFiniteValue { index: 0 }));
    }
}
