//! Named numerical checks with residuals, tolerances, and pass/fail verdicts,
//! plus the per-symbol profile of product-reciprocal conditions.
//!
//! A check passes exactly when `residual <= tolerance`. Informational entries
//! (quantities recorded but never asserted, such as a hypothesis distance)
//! use `T::max_value()` as tolerance so they cannot fail a run.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// One named check inside a report.
#[derive(Debug, Clone, PartialEq)]
pub struct Check<T: Scalar> {
    pub name: String,
    pub residual: T,
    pub tolerance: T,
    pub passed: bool,
    pub notes: String,
}

/// Named checks for a single scenario; check names are unique per report.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport<T: Scalar> {
    scenario_id: String,
    checks: Vec<Check<T>>,
}

impl<T: Scalar> VerificationReport<T> {
    pub fn new(scenario_id: impl Into<String>) -> Self {
        Self {
            scenario_id: scenario_id.into(),
            checks: Vec::new(),
        }
    }

    pub fn scenario_id(&self) -> &str {
        &self.scenario_id
    }

    /// Records a check; `passed` is derived, never supplied.
    pub fn record(
        &mut self,
        name: impl Into<String>,
        residual: T,
        tolerance: T,
        notes: impl Into<String>,
    ) {
        let name = name.into();
        assert!(
            self.find(&name).is_none(),
            "duplicate check name `{name}` in report"
        );
        self.checks.push(Check {
            passed: residual <= tolerance,
            name,
            residual,
            tolerance,
            notes: notes.into(),
        });
    }

    /// Records a quantity that is reported but never asserted.
    pub fn record_informational(
        &mut self,
        name: impl Into<String>,
        residual: T,
        notes: impl Into<String>,
    ) {
        self.record(name, residual, T::max_value(), notes);
    }

    /// Moves all checks of `other` into `self`; names must stay unique.
    pub fn absorb(&mut self, other: VerificationReport<T>) {
        for check in other.checks {
            assert!(
                self.find(&check.name).is_none(),
                "duplicate check name `{}` in merged report",
                check.name
            );
            self.checks.push(check);
        }
    }

    pub fn checks(&self) -> &[Check<T>] {
        &self.checks
    }

    pub fn find(&self, name: &str) -> Option<&Check<T>> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Three-valued verdict for one condition of the product-reciprocal chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionStatus {
    Holds,
    Fails,
    /// The condition quantifies over an empty set for this symbol.
    NotApplicable,
}

impl ConditionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ConditionStatus::Holds => "holds",
            ConditionStatus::Fails => "fails",
            ConditionStatus::NotApplicable => "not_applicable",
        }
    }
}

/// A condition verdict with the numeric residual it was derived from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionCheck<T: Scalar> {
    pub status: ConditionStatus,
    pub residual: T,
}

impl<T: Scalar> ConditionCheck<T> {
    pub fn holds(&self) -> bool {
        self.status == ConditionStatus::Holds
    }
}

/// Per-symbol profile of the six conditions relating C_{φ,w}† to C_φ†·M_w†.
///
/// In finite dimension every operator involved is everywhere defined, so the
/// two inclusion conditions (a₂), (a₃) collapse to the equality (a₁); the
/// collapse is an artifact of finite truncation and is recorded in `notes`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionProfile<T: Scalar> {
    pub scenario_id: String,
    /// Equality C_{φ,w}† = C_φ†·M_w† as matrices.
    pub a1: ConditionCheck<T>,
    /// Inclusion C_{φ,w}† ⊆ C_φ†·M_w†; equals (a₁) in finite dimension.
    pub a2: ConditionCheck<T>,
    /// Inclusion C_{φ,w}† ⊇ C_φ†·M_w†; equals (a₁) in finite dimension.
    pub a3: ConditionCheck<T>,
    /// Agreement of the weighted and unweighted averaged reciprocals on a
    /// basis of the whole space.
    pub b1: ConditionCheck<T>,
    /// Same agreement on a basis of the subspace supported where w ≠ 0.
    pub b2: ConditionCheck<T>,
    /// Fiber-constancy of |w|²: |w|² = E_φ(|w|²) on {w ≠ 0}.
    pub c: ConditionCheck<T>,
    pub notes: String,
}

/// Tolerance overrides keyed by check name; unknown names fall back to the
/// caller-supplied default for that check.
#[derive(Debug, Clone, Default)]
pub struct Tolerances<T: Scalar> {
    overrides: BTreeMap<String, T>,
}

impl<T: Scalar> Tolerances<T> {
    pub fn new() -> Self {
        Self {
            overrides: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, name: impl Into<String>, value: T) {
        self.overrides.insert(name.into(), value);
    }

    pub fn get(&self, name: &str, default: T) -> T {
        self.overrides.get(name).copied().unwrap_or(default)
    }

    pub fn overrides(&self) -> impl Iterator<Item = (&str, T)> {
        self.overrides.iter().map(|(k, &v)| (k.as_str(), v))
    }
}
