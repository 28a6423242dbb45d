//! Deterministic scenario generators: finite truncations of three infinite
//! reference spaces and seeded random symbols for bulk property testing.
//!
//! Truncations close the boundary with a self-loop (the maximal atom maps to
//! itself) so that φ stays total; only that one fiber is perturbed relative
//! to the infinite space, and assertions about the reference examples avoid
//! it. All generators are pure functions of their arguments: identical
//! arguments yield byte-identical symbols on every platform (see
//! [`crate::rng::SplitMix64`]; no transcendental functions are used).

use crate::measure::{DiscreteMeasureSpace, L2Function, ValidationError, WeightedSymbol};
use crate::rng::SplitMix64;
use crate::scalar::{display_f64, real, Scalar, C};
use num_complex::Complex;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ScenarioError {
    #[error("truncation must be at least 2 (got {0})")]
    TruncationTooSmall(usize),
    #[error("alpha must lie strictly between 0 and 1 (got {0}); generated weights have modulus 1")]
    InvalidAlpha(f64),
    #[error("mass ratio must lie strictly between 0 and 1 (got {0})")]
    InvalidMassRatio(f64),
    #[error("size must lie in 1..=64 (got {0})")]
    InvalidSize(usize),
    #[error("random scenarios require a seed")]
    MissingSeed,
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// Weight shape for random symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberProfile {
    /// Unconstrained complex weights (zeros possible but unlikely).
    Generic,
    /// |w| constant on every fiber, forcing |w|² = E_φ(|w|²).
    FiberConstantWeight,
    /// Modulus bounded away from zero.
    NonzeroWeight,
    /// Each atom's weight zeroed with probability 1/4.
    WithZeroWeights,
}

impl FiberProfile {
    pub const ALL: [FiberProfile; 4] = [
        FiberProfile::Generic,
        FiberProfile::FiberConstantWeight,
        FiberProfile::NonzeroWeight,
        FiberProfile::WithZeroWeights,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FiberProfile::Generic => "generic",
            FiberProfile::FiberConstantWeight => "fiber_constant_weight",
            FiberProfile::NonzeroWeight => "nonzero_weight",
            FiberProfile::WithZeroWeights => "with_zero_weights",
        }
    }
}

impl std::str::FromStr for FiberProfile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "generic" => Ok(FiberProfile::Generic),
            "fiber_constant_weight" => Ok(FiberProfile::FiberConstantWeight),
            "nonzero_weight" => Ok(FiberProfile::NonzeroWeight),
            "with_zero_weights" => Ok(FiberProfile::WithZeroWeights),
            other => Err(format!(
                "unknown fiber profile `{other}` (expected generic, \
                 fiber_constant_weight, nonzero_weight, or with_zero_weights)"
            )),
        }
    }
}

/// The generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScenarioKind {
    /// Two-branch comb with unit weights ([`gen_hiszpa`]).
    Hiszpa,
    /// Integer line, counting measure, weight 1/k ([`gen_hiszpa_plus`]).
    HiszpaPlus,
    /// Integer line, geometric masses, weight 1/k ([`gen_hiszpa_minus`]).
    HiszpaMinus,
    /// Seeded random symbol ([`gen_random`]).
    Random,
}

impl ScenarioKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioKind::Hiszpa => "hiszpa",
            ScenarioKind::HiszpaPlus => "hiszpa_plus",
            ScenarioKind::HiszpaMinus => "hiszpa_minus",
            ScenarioKind::Random => "random",
        }
    }
}

/// A fully-determined scenario: kind, size (or truncation), seed, and the
/// real parameters the kind consumes. Two equal specs generate byte-identical
/// symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec<T: Scalar> {
    pub kind: ScenarioKind,
    /// Truncation for the reference examples, atom count for `Random`.
    pub size: usize,
    /// Required for `Random`, ignored otherwise.
    pub seed: Option<u64>,
    /// Weight shape for `Random`.
    pub profile: FiberProfile,
    /// Documented lower bound on |w| for `Hiszpa`.
    pub alpha: T,
    /// Geometric mass ratio for `HiszpaMinus`.
    pub mass_ratio: T,
}

impl<T: Scalar> ScenarioSpec<T> {
    pub fn random(size: usize, seed: u64, profile: FiberProfile) -> Self {
        Self {
            kind: ScenarioKind::Random,
            size,
            seed: Some(seed),
            profile,
            alpha: real::<T>(0.5),
            mass_ratio: real::<T>(0.25),
        }
    }

    pub fn builtin(kind: ScenarioKind, size: usize) -> Self {
        Self {
            kind,
            size,
            seed: None,
            profile: FiberProfile::Generic,
            alpha: real::<T>(0.5),
            mass_ratio: real::<T>(0.25),
        }
    }

    /// Canonical identifier used in reports.
    pub fn id(&self) -> String {
        match self.kind {
            ScenarioKind::Hiszpa => {
                format!("hiszpa-n{}-alpha{}", self.size, self.alpha)
            }
            ScenarioKind::HiszpaPlus => format!("hiszpa_plus-n{}", self.size),
            ScenarioKind::HiszpaMinus => {
                format!("hiszpa_minus-n{}-q{}", self.size, self.mass_ratio)
            }
            ScenarioKind::Random => format!(
                "random-n{}-seed{}-{}",
                self.size,
                self.seed.unwrap_or(0),
                self.profile.as_str()
            ),
        }
    }

    /// Generates the symbol; a missing seed for `Random` is an error.
    pub fn generate(&self) -> Result<WeightedSymbol<T>, ScenarioError> {
        match self.kind {
            ScenarioKind::Hiszpa => gen_hiszpa(self.size, self.alpha),
            ScenarioKind::HiszpaPlus => gen_hiszpa_plus(self.size),
            ScenarioKind::HiszpaMinus => gen_hiszpa_minus(self.size, self.mass_ratio),
            ScenarioKind::Random => {
                let seed = self.seed.ok_or(ScenarioError::MissingSeed)?;
                gen_random(self.size, seed, self.profile)
            }
        }
    }
}

/// Two-branch comb space over {0..n} ∪ {(-k,1)} ∪ {(-k,2)}, counting measure,
/// forward shift on the spine and both branches feeding atom 0; weight ≡ 1.
///
/// The two branch tips give C_φ a non-dense range while |w|² = E_φ(|w|²)
/// holds exactly; `alpha` documents the strict lower bound on |w| and appears
/// in the domination constant β ≤ 1/α².
pub fn gen_hiszpa<T: Scalar>(n: usize, alpha: T) -> Result<WeightedSymbol<T>, ScenarioError> {
    if n < 2 {
        return Err(ScenarioError::TruncationTooSmall(n));
    }
    if alpha <= T::zero() || alpha >= T::one() {
        return Err(ScenarioError::InvalidAlpha(display_f64(alpha)));
    }
    let size = 3 * n + 1;
    let mut labels = Vec::with_capacity(size);
    for k in 0..=n {
        labels.push(k.to_string());
    }
    for branch in 1..=2 {
        for k in 1..=n {
            labels.push(format!("(-{k},{branch})"));
        }
    }
    let space = DiscreteMeasureSpace::new(labels, vec![T::one(); size])?;

    // Index layout: spine k ↦ k for 0..=n; branch 1 occupies n+1..=2n and
    // branch 2 occupies 2n+1..=3n, shallowest atom first.
    let branch_index = |k: usize, branch: usize| n + (branch - 1) * n + k;
    let mut phi = vec![0usize; size];
    for k in 0..n {
        phi[k] = k + 1;
    }
    phi[n] = n; // boundary self-loop
    for branch in 1..=2 {
        phi[branch_index(1, branch)] = 0;
        for k in 2..=n {
            phi[branch_index(k, branch)] = branch_index(k - 1, branch);
        }
    }
    let weight = vec![Complex::new(T::one(), T::zero()); size];
    Ok(WeightedSymbol::new(space, phi, weight)?)
}

/// Index of branch atom (−k, branch) in a [`gen_hiszpa`] symbol.
pub fn hiszpa_branch_index(n: usize, k: usize, branch: usize) -> usize {
    assert!((1..=n).contains(&k) && (1..=2).contains(&branch));
    n + (branch - 1) * n + k
}

/// The vector χ_{(−1,1)} − χ_{(−1,2)}, which lies in ker C_φ* for every
/// [`gen_hiszpa`] truncation: both tips feed atom 0 with equal moduli, so its
/// fiber average vanishes.
pub fn hiszpa_range_defect<T: Scalar>(n: usize) -> L2Function<T> {
    let size = 3 * n + 1;
    let mut values = vec![Complex::new(T::zero(), T::zero()); size];
    values[hiszpa_branch_index(n, 1, 1)] = Complex::new(T::one(), T::zero());
    values[hiszpa_branch_index(n, 1, 2)] = Complex::new(-T::one(), T::zero());
    L2Function::new(values).expect("finite by construction")
}

/// Integer-line truncation {−n..n} with counting measure: backward shift on
/// the nonpositive half, everything positive feeding atom 0, weight 1/k away
/// from 0. The fiber over 0 grows with the truncation, the finite proxy for
/// the non-dense domain of C_φ on the full space.
///
/// The reference transformation leaves φ(1) unspecified; here φ(k) = 0 for
/// every k ≥ 1.
pub fn gen_hiszpa_plus<T: Scalar>(n: usize) -> Result<WeightedSymbol<T>, ScenarioError> {
    if n < 2 {
        return Err(ScenarioError::TruncationTooSmall(n));
    }
    let masses = vec![T::one(); 2 * n + 1];
    build_line_symbol(n, masses)
}

/// Same transformation and weight as [`gen_hiszpa_plus`] over geometric
/// masses: μ({k}) = q^|k| for k ≤ 0 and μ({k}) = 2^−k for k ≥ 1. The constant
/// mass ratio μ({−k})/μ({−k+1}) = q < 1 is the finite proxy for the decay
/// that makes M_w·C_φ non-closed on the full space.
pub fn gen_hiszpa_minus<T: Scalar>(
    n: usize,
    mass_ratio: T,
) -> Result<WeightedSymbol<T>, ScenarioError> {
    if n < 2 {
        return Err(ScenarioError::TruncationTooSmall(n));
    }
    if mass_ratio <= T::zero() || mass_ratio >= T::one() {
        return Err(ScenarioError::InvalidMassRatio(display_f64(mass_ratio)));
    }
    let mut masses = Vec::with_capacity(2 * n + 1);
    let half = real::<T>(0.5);
    for i in 0..=2 * n {
        let k = i as i64 - n as i64;
        if k <= 0 {
            masses.push(mass_ratio.powi((-k) as i32));
        } else {
            masses.push(half.powi(k as i32));
        }
    }
    build_line_symbol(n, masses)
}

/// Shared layout of the integer-line truncations: atom i ↔ k = i − n.
fn build_line_symbol<T: Scalar>(
    n: usize,
    masses: Vec<T>,
) -> Result<WeightedSymbol<T>, ScenarioError> {
    let size = 2 * n + 1;
    let labels = (0..size)
        .map(|i| (i as i64 - n as i64).to_string())
        .collect();
    let space = DiscreteMeasureSpace::new(labels, masses)?;
    let mut phi = vec![0usize; size];
    let mut weight = vec![Complex::new(T::one(), T::zero()); size];
    for i in 0..size {
        let k = i as i64 - n as i64;
        phi[i] = if k <= 0 {
            i.saturating_sub(1) // φ(k) = k − 1, boundary −n loops to itself
        } else {
            n // φ(k) = 0 for k ≥ 1
        };
        if k != 0 {
            weight[i] = Complex::new(T::one() / real::<T>(k as f64), T::zero());
        }
    }
    Ok(WeightedSymbol::new(space, phi, weight)?)
}

/// Index of integer atom k in a [`gen_hiszpa_plus`] / [`gen_hiszpa_minus`]
/// symbol of truncation n.
pub fn line_index(n: usize, k: i64) -> usize {
    (k + n as i64) as usize
}

/// Seeded random symbol: masses in [0.5, 2), arbitrary total φ, weights
/// shaped by the profile. Pure function of its arguments.
pub fn gen_random<T: Scalar>(
    size: usize,
    seed: u64,
    profile: FiberProfile,
) -> Result<WeightedSymbol<T>, ScenarioError> {
    if size == 0 || size > 64 {
        return Err(ScenarioError::InvalidSize(size));
    }
    let mut rng = SplitMix64::new(seed);
    let masses: Vec<T> = (0..size)
        .map(|_| real::<T>(0.5 + 1.5 * rng.next_f64()))
        .collect();
    let space = DiscreteMeasureSpace::with_indexed_labels(masses)?;
    let phi: Vec<usize> = (0..size).map(|_| rng.next_index(size)).collect();

    let weight: Vec<C<T>> = match profile {
        FiberProfile::Generic => (0..size)
            .map(|_| {
                let re = 2.0 * rng.next_f64() - 1.0;
                let im = 2.0 * rng.next_f64() - 1.0;
                Complex::new(real::<T>(re), real::<T>(im))
            })
            .collect(),
        FiberProfile::WithZeroWeights => (0..size)
            .map(|_| {
                let re = 2.0 * rng.next_f64() - 1.0;
                let im = 2.0 * rng.next_f64() - 1.0;
                let zeroed = rng.next_f64() < 0.25;
                if zeroed {
                    Complex::new(T::zero(), T::zero())
                } else {
                    Complex::new(real::<T>(re), real::<T>(im))
                }
            })
            .collect(),
        FiberProfile::NonzeroWeight => (0..size)
            .map(|_| {
                let modulus = 0.25 + 1.5 * rng.next_f64();
                unit_direction::<T>(&mut rng).scale(real::<T>(modulus))
            })
            .collect(),
        FiberProfile::FiberConstantWeight => {
            // One modulus per target atom, so |w| is constant on each fiber.
            let moduli: Vec<f64> = (0..size).map(|_| 0.5 + rng.next_f64()).collect();
            (0..size)
                .map(|y| {
                    let modulus = moduli[phi[y]];
                    unit_direction::<T>(&mut rng).scale(real::<T>(modulus))
                })
                .collect()
        }
    };
    Ok(WeightedSymbol::new(space, phi, weight)?)
}

/// A deterministic unit-modulus complex direction. Built from square roots
/// only (correctly rounded under IEEE 754), never from sin/cos, so the draw
/// is bit-identical across platforms.
fn unit_direction<T: Scalar>(rng: &mut SplitMix64) -> C<T> {
    let a = 2.0 * rng.next_f64() - 1.0;
    let b = 2.0 * rng.next_f64() - 1.0;
    let norm_sqr = a * a + b * b;
    if norm_sqr < 1e-4 {
        return Complex::new(T::one(), T::zero());
    }
    let norm = norm_sqr.sqrt();
    Complex::new(real::<T>(a / norm), real::<T>(b / norm))
}
