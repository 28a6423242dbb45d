//! Independent brute-force oracle: dense complex SVD by one-sided Jacobi
//! rotations, the Moore–Penrose pseudoinverse built from it, and a
//! Penrose-condition checker.
//!
//! Nothing here knows about measure spaces or fiber formulas; the oracle sees
//! plain matrices. That separation is deliberate: the closed-form reciprocal
//! and this pseudoinverse must remain two independent routes to the same
//! operator so that agreement between them is evidence, not tautology.

use crate::matrix::OperatorMatrix;
use crate::report::VerificationReport;
use crate::scalar::{display_f64, real, Scalar, C};
use num_complex::Complex;
use thiserror::Error;

/// Relative singular-value threshold for rank decisions.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

/// Largest supported dimension (dense workspaces).
pub const MAX_DIM: usize = 4096;

/// Penrose residuals pass below this by default.
pub const DEFAULT_PENROSE_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("dimension {dim} exceeds the supported maximum {MAX_DIM}")]
    DimensionTooLarge { dim: usize },
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("dimensions {left} and {right} are incompatible")]
    DimensionMismatch { left: usize, right: usize },
    #[error("Jacobi sweep cap reached after {sweeps} sweeps (residual {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
}

/// A = U·Σ·V* with U, V unitary and Σ nonincreasing and nonnegative.
#[derive(Debug, Clone)]
pub struct SvdResult<T: Scalar> {
    left: OperatorMatrix<T>,
    singular_values: Vec<T>,
    right: OperatorMatrix<T>,
}

impl<T: Scalar> SvdResult<T> {
    pub fn left_vectors(&self) -> &OperatorMatrix<T> {
        &self.left
    }

    pub fn singular_values(&self) -> &[T] {
        &self.singular_values
    }

    pub fn right_vectors(&self) -> &OperatorMatrix<T> {
        &self.right
    }

    /// U·Σ·V*.
    pub fn reconstruct(&self) -> OperatorMatrix<T> {
        let n = self.singular_values.len();
        let mut scaled = self.left.clone();
        for j in 0..n {
            let s = self.singular_values[j];
            for i in 0..n {
                let v = scaled.get(i, j);
                scaled.set(i, j, Complex::new(v.re * s, v.im * s));
            }
        }
        scaled.mul(&self.right.adjoint())
    }

    /// ‖A − UΣV*‖_F / max(1, ‖A‖_F).
    pub fn reconstruction_residual(&self, a: &OperatorMatrix<T>) -> T {
        self.reconstruct().frobenius_distance(a) / T::one().max(a.frobenius_norm())
    }

    /// Number of singular values above `rank_tol·σ_max`.
    pub fn rank(&self, rank_tol: T) -> usize {
        let smax = self.singular_values.first().copied().unwrap_or(T::zero());
        let cut = rank_tol * smax;
        self.singular_values.iter().filter(|&&s| s > cut).count()
    }

    /// Orthogonal projection onto the span of the first `rank` left vectors,
    /// i.e. onto the range of A.
    pub fn range_projection(&self, rank_tol: T) -> OperatorMatrix<T> {
        projection_from_columns(&self.left, self.rank(rank_tol))
    }

    /// Orthogonal projection onto the orthocomplement of the kernel of A
    /// (the span of the first `rank` right vectors).
    pub fn cokernel_projection(&self, rank_tol: T) -> OperatorMatrix<T> {
        projection_from_columns(&self.right, self.rank(rank_tol))
    }
}

fn projection_from_columns<T: Scalar>(
    basis: &OperatorMatrix<T>,
    rank: usize,
) -> OperatorMatrix<T> {
    let n = basis.dim();
    OperatorMatrix::from_fn(n, |i, j| {
        let mut acc = Complex::new(T::zero(), T::zero());
        for k in 0..rank {
            acc = acc + basis.get(i, k) * basis.get(j, k).conj();
        }
        acc
    })
}

/// One-sided Jacobi SVD of a square complex matrix.
///
/// Columns of a working copy G are orthogonalized pairwise by right
/// multiplications with unitary 2×2 rotations, accumulated into V; at
/// convergence σ_j = ‖g_j‖ and u_j = g_j/σ_j. The sweep order is fixed, so
/// the result is deterministic for a given input.
pub fn svd<T: Scalar>(a: &OperatorMatrix<T>) -> Result<SvdResult<T>, OracleError> {
    let n = a.dim();
    if n > MAX_DIM {
        return Err(OracleError::DimensionTooLarge { dim: n });
    }
    if !a.is_finite() {
        return Err(OracleError::NonFinite);
    }

    // Column-major working copies of G = A and V = I.
    let zero = Complex::new(T::zero(), T::zero());
    let mut g: Vec<Vec<C<T>>> = (0..n)
        .map(|j| (0..n).map(|i| a.get(i, j)).collect())
        .collect();
    let mut v: Vec<Vec<C<T>>> = (0..n)
        .map(|j| {
            let mut col = vec![zero; n];
            col[j] = Complex::new(T::one(), T::zero());
            col
        })
        .collect();

    let conv_eps = T::epsilon();
    let max_sweeps = 10 * n * n;
    let mut converged = n < 2;
    let mut sweeps_used = 0;
    while !converged && sweeps_used < max_sweeps {
        sweeps_used += 1;
        let mut rotated = false;
        // Columns negligible against the largest one are deflated: a rotation
        // against rounding noise cannot improve them and numerically parallel
        // pairs would otherwise cycle forever. Deflated columns become exact
        // zeros of Σ during finalization.
        let max_col = g
            .iter()
            .map(|col| col_norm_sqr(col))
            .fold(T::zero(), T::max);
        let deflate_cut = max_col * conv_eps * conv_eps;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let alpha = col_norm_sqr(&g[p]);
                let beta = col_norm_sqr(&g[q]);
                if alpha <= deflate_cut || beta <= deflate_cut {
                    continue;
                }
                let gamma = col_inner(&g[p], &g[q]);
                let off = gamma.norm();
                if off <= conv_eps * (alpha * beta).sqrt() || off == T::zero() {
                    continue;
                }
                rotated = true;
                // Diagonalize the 2×2 Gram matrix [[α, γ], [γ̄, β]]: strip the
                // phase of γ, then apply the classical symmetric rotation.
                let zeta = (beta - alpha) / (real::<T>(2.0) * off);
                let t = {
                    let denom = zeta.abs() + (T::one() + zeta * zeta).sqrt();
                    if zeta < T::zero() {
                        -T::one() / denom
                    } else {
                        T::one() / denom
                    }
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                let rho_conj = Complex::new(gamma.re / off, -gamma.im / off);
                rotate_pair(&mut g, p, q, c, s, rho_conj);
                rotate_pair(&mut v, p, q, c, s, rho_conj);
            }
        }
        if !rotated {
            converged = true;
        }
    }
    if !converged {
        // Largest normalized off-diagonal coupling still present.
        let mut worst = T::zero();
        for p in 0..n - 1 {
            for q in p + 1..n {
                let alpha = col_norm_sqr(&g[p]);
                let beta = col_norm_sqr(&g[q]);
                let denom = (alpha * beta).sqrt();
                if denom > T::zero() {
                    worst = worst.max(col_inner(&g[p], &g[q]).norm() / denom);
                }
            }
        }
        return Err(OracleError::NoConvergence {
            sweeps: sweeps_used,
            residual: display_f64(worst),
        });
    }

    // Sort by descending column norm (stable, so ties keep sweep order).
    let mut norms: Vec<T> = g.iter().map(|col| col_norm_sqr(col).sqrt()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).expect("finite norms"));
    let g_sorted: Vec<Vec<C<T>>> = order.iter().map(|&j| g[j].clone()).collect();
    let v_sorted: Vec<Vec<C<T>>> = order.iter().map(|&j| v[j].clone()).collect();
    norms = order.iter().map(|&j| norms[j]).collect();
    g = g_sorted;
    v = v_sorted;

    // Normalize columns into U; complete numerically zero columns to a
    // unitary. The cut sits just above the iteration's noise floor so that
    // deflated columns (whose directions are rounding noise) are rebuilt by
    // orthogonal completion instead of being normalized.
    let smax = norms.first().copied().unwrap_or(T::zero());
    let zero_cut = smax * T::epsilon() * real::<T>(8.0 * n as f64);
    let mut u_cols: Vec<Option<Vec<C<T>>>> = vec![None; n];
    for j in 0..n {
        let s = norms[j];
        if s > zero_cut && s >= T::min_positive_value() {
            let col = g[j]
                .iter()
                .map(|z| Complex::new(z.re / s, z.im / s))
                .collect();
            u_cols[j] = Some(col);
        }
    }
    complete_to_unitary(&mut u_cols, n);

    let mut left = OperatorMatrix::zeros(n);
    let mut right = OperatorMatrix::zeros(n);
    for j in 0..n {
        let col = u_cols[j].as_ref().expect("all columns filled");
        for i in 0..n {
            left.set(i, j, col[i]);
            right.set(i, j, v[j][i]);
        }
    }
    // Zero-completed columns get a zero singular value outright.
    for s in norms.iter_mut() {
        if *s <= zero_cut || *s < T::min_positive_value() {
            *s = T::zero();
        }
    }

    Ok(SvdResult {
        left,
        singular_values: norms,
        right,
    })
}

fn col_norm_sqr<T: Scalar>(col: &[C<T>]) -> T {
    col.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr())
}

/// ⟨u, v⟩ = Σ conj(u_i)·v_i.
fn col_inner<T: Scalar>(u: &[C<T>], v: &[C<T>]) -> C<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for (a, b) in u.iter().zip(v) {
        acc = acc + a.conj() * *b;
    }
    acc
}

/// Applies the unitary column rotation
/// (g_p, g_q) ← (c·g_p − s·ρ̄·g_q, s·g_p + c·ρ̄·g_q).
fn rotate_pair<T: Scalar>(
    cols: &mut [Vec<C<T>>],
    p: usize,
    q: usize,
    c: T,
    s: T,
    rho_conj: C<T>,
) {
    let n = cols[p].len();
    for i in 0..n {
        let gp = cols[p][i];
        let gq = cols[q][i];
        let rq = rho_conj * gq;
        cols[p][i] = Complex::new(c * gp.re - s * rq.re, c * gp.im - s * rq.im);
        cols[q][i] = Complex::new(s * gp.re + c * rq.re, s * gp.im + c * rq.im);
    }
}

/// Fills the `None` slots with unit vectors orthogonal to every filled column
/// (two-pass Gram–Schmidt over standard basis candidates, deterministic).
fn complete_to_unitary<T: Scalar>(cols: &mut [Option<Vec<C<T>>>], n: usize) {
    let zero = Complex::new(T::zero(), T::zero());
    let mut used_candidates = vec![false; n];
    for j in 0..n {
        if cols[j].is_some() {
            continue;
        }
        // Pick the basis vector with the largest component outside the span
        // of the already-filled columns.
        let mut best: Option<(usize, T, Vec<C<T>>)> = None;
        for k in 0..n {
            if used_candidates[k] {
                continue;
            }
            let mut cand = vec![zero; n];
            cand[k] = Complex::new(T::one(), T::zero());
            for _pass in 0..2 {
                for filled in cols.iter().flatten() {
                    let coeff = col_inner(filled, &cand);
                    for i in 0..n {
                        cand[i] = cand[i] - coeff * filled[i];
                    }
                }
            }
            let norm = col_norm_sqr(&cand).sqrt();
            if best.as_ref().is_none_or(|(_, b, _)| norm > *b) {
                best = Some((k, norm, cand));
            }
        }
        let (k, norm, cand) = best.expect("candidate exists while slots remain");
        assert!(
            norm > T::zero(),
            "orthogonal completion failed: no independent candidate"
        );
        used_candidates[k] = true;
        cols[j] = Some(
            cand.iter()
                .map(|z| Complex::new(z.re / norm, z.im / norm))
                .collect(),
        );
    }
}

/// Moore–Penrose pseudoinverse A⁺ = V·Σ⁺·U* with σ⁺ = 1/σ for
/// σ > rank_tol·σ_max and 0 otherwise.
pub fn pseudoinverse<T: Scalar>(
    a: &OperatorMatrix<T>,
    rank_tol: T,
) -> Result<OperatorMatrix<T>, OracleError> {
    Ok(pseudoinverse_from(&svd(a)?, rank_tol))
}

/// Pseudoinverse assembled from an existing decomposition.
pub fn pseudoinverse_from<T: Scalar>(
    decomposition: &SvdResult<T>,
    rank_tol: T,
) -> OperatorMatrix<T> {
    let n = decomposition.singular_values.len();
    let smax = decomposition
        .singular_values
        .first()
        .copied()
        .unwrap_or(T::zero());
    let cut = rank_tol * smax;
    let mut out = OperatorMatrix::zeros(n);
    for k in 0..n {
        let s = decomposition.singular_values[k];
        if s <= cut || s == T::zero() {
            continue;
        }
        let inv = T::one() / s;
        for i in 0..n {
            let vik = decomposition.right.get(i, k);
            if vik.re == T::zero() && vik.im == T::zero() {
                continue;
            }
            let scaled = Complex::new(vik.re * inv, vik.im * inv);
            for j in 0..n {
                let val = out.get(i, j) + scaled * decomposition.left.get(j, k).conj();
                out.set(i, j, val);
            }
        }
    }
    out
}

/// Pseudoinverse at the default rank threshold.
pub fn pseudoinverse_default<T: Scalar>(
    a: &OperatorMatrix<T>,
) -> Result<OperatorMatrix<T>, OracleError> {
    pseudoinverse(a, real::<T>(DEFAULT_RANK_TOL))
}

/// The four Penrose residuals for a candidate inverse pair (A, B):
/// ‖ABA−A‖/‖A‖, ‖BAB−B‖/‖B‖, ‖(AB)*−AB‖/‖AB‖, ‖(BA)*−BA‖/‖BA‖,
/// each falling back to the absolute norm when the reference vanishes.
pub fn penrose_residuals<T: Scalar>(
    a: &OperatorMatrix<T>,
    b: &OperatorMatrix<T>,
) -> Result<[T; 4], OracleError> {
    if a.dim() != b.dim() {
        return Err(OracleError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let ab = a.mul(b);
    let ba = b.mul(a);
    let scaled = |num: T, reference: T| {
        if reference > T::zero() {
            num / reference
        } else {
            num
        }
    };
    Ok([
        scaled(ab.mul(a).frobenius_distance(a), a.frobenius_norm()),
        scaled(ba.mul(b).frobenius_distance(b), b.frobenius_norm()),
        scaled(ab.adjoint().frobenius_distance(&ab), ab.frobenius_norm()),
        scaled(ba.adjoint().frobenius_distance(&ba), ba.frobenius_norm()),
    ])
}

/// Verifies the four Penrose conditions of (A, B) at the given tolerance.
pub fn penrose_report<T: Scalar>(
    scenario_id: &str,
    a: &OperatorMatrix<T>,
    b: &OperatorMatrix<T>,
    tolerance: T,
) -> Result<VerificationReport<T>, OracleError> {
    let residuals = penrose_residuals(a, b)?;
    let mut report = VerificationReport::new(scenario_id);
    let names = [
        "penrose_aba",
        "penrose_bab",
        "penrose_ab_hermitian",
        "penrose_ba_hermitian",
    ];
    let notes = [
        "A·B·A = A",
        "B·A·B = B",
        "(A·B)* = A·B",
        "(B·A)* = B·A",
    ];
    for ((name, residual), note) in names.iter().zip(residuals).zip(notes) {
        report.record(*name, residual, tolerance, note);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::relative_distance;
    use crate::rng::SplitMix64;

    fn random_matrix(n: usize, seed: u64) -> OperatorMatrix<f64> {
        let mut rng = SplitMix64::new(seed);
        OperatorMatrix::from_fn(n, |_, _| {
            Complex::new(2.0 * rng.next_f64() - 1.0, 2.0 * rng.next_f64() - 1.0)
        })
    }

    fn sigma1_matrix() -> OperatorMatrix<f64> {
        let mut m = OperatorMatrix::zeros(3);
        m.set(0, 1, Complex::new(1.0, 0.0));
        m.set(1, 1, Complex::new(2.0, 0.0));
        m
    }

    fn assert_unitary(u: &OperatorMatrix<f64>, tol: f64) {
        let n = u.dim();
        let gram = u.adjoint().mul(u);
        assert!(
            relative_distance(&gram, &OperatorMatrix::identity(n)) < tol,
            "matrix is not unitary"
        );
    }

    #[test]
    fn identity_and_zero() {
        let id = OperatorMatrix::<f64>::identity(4);
        let s = svd(&id).unwrap();
        for &v in s.singular_values() {
            assert!((v - 1.0).abs() < 1e-14);
        }
        assert!(s.reconstruction_residual(&id) < 1e-14);

        let z = OperatorMatrix::<f64>::zeros(4);
        let s = svd(&z).unwrap();
        assert!(s.singular_values().iter().all(|&v| v == 0.0));
        assert_unitary(s.left_vectors(), 1e-14);
        assert_unitary(s.right_vectors(), 1e-14);
        assert_eq!(pseudoinverse_default(&z).unwrap(), z);
    }

    #[test]
    fn fixture_singular_values() {
        // Rank-one matrix with Frobenius norm √5.
        let s = svd(&sigma1_matrix()).unwrap();
        let expected = 5.0_f64.sqrt();
        assert!((s.singular_values()[0] - expected).abs() < 1e-14);
        assert!(s.singular_values()[1].abs() < 1e-14);
        assert!(s.singular_values()[2].abs() < 1e-14);
    }

    #[test]
    fn fixture_pseudoinverse() {
        let p = pseudoinverse_default(&sigma1_matrix()).unwrap();
        let expected = [
            [0.0, 0.0, 0.0],
            [0.2, 0.4, 0.0],
            [0.0, 0.0, 0.0],
        ];
        for i in 0..3 {
            for j in 0..3 {
                assert!(
                    (p.get(i, j) - Complex::new(expected[i][j], 0.0)).norm() < 1e-14,
                    "entry ({i},{j})"
                );
            }
        }
        let id = OperatorMatrix::<f64>::identity(5);
        assert!(relative_distance(&pseudoinverse_default(&id).unwrap(), &id) < 1e-14);
    }

    #[test]
    fn random_matrices_decompose() {
        for seed in 0..20u64 {
            let n = 1 + (seed as usize % 9);
            let a = random_matrix(n, 1000 + seed);
            let s = svd(&a).unwrap();
            assert!(s.reconstruction_residual(&a) < 1e-12, "seed {seed}");
            assert_unitary(s.left_vectors(), 1e-12);
            assert_unitary(s.right_vectors(), 1e-12);
            let sorted = s
                .singular_values()
                .windows(2)
                .all(|w| w[0] >= w[1]);
            assert!(sorted, "singular values sorted nonincreasing");
            assert!(s.singular_values().iter().all(|&v| v >= 0.0));
        }
    }

    #[test]
    fn pseudoinverse_satisfies_penrose() {
        for seed in 0..12u64 {
            let n = 2 + (seed as usize % 7);
            let a = random_matrix(n, 7000 + seed);
            let b = pseudoinverse_default(&a).unwrap();
            let residuals = penrose_residuals(&a, &b).unwrap();
            for r in residuals {
                assert!(r < 1e-10, "seed {seed}: residual {r:e}");
            }
        }
    }

    #[test]
    fn pseudoinverse_involution_and_adjoint() {
        for seed in 0..10u64 {
            let n = 2 + (seed as usize % 6);
            let a = random_matrix(n, 9000 + seed);
            let s = svd(&a).unwrap();
            let smin = s.singular_values()[s.rank(1e-10) - 1];
            let smax = s.singular_values()[0];
            if smax / smin > 1e6 {
                continue; // involution is only claimed for well-conditioned inputs
            }
            let b = pseudoinverse_default(&a).unwrap();
            let back = pseudoinverse_default(&b).unwrap();
            assert!(relative_distance(&back, &a) < 1e-8, "seed {seed}");

            let lhs = pseudoinverse_default(&a.adjoint()).unwrap();
            let rhs = pseudoinverse_default(&a).unwrap().adjoint();
            assert!(relative_distance(&lhs, &rhs) < 1e-10, "seed {seed}");
        }
    }

    #[test]
    fn penrose_report_cases() {
        let a = sigma1_matrix();
        let b = pseudoinverse_default(&a).unwrap();
        let report = penrose_report("fixture", &a, &b, 1e-9).unwrap();
        assert!(report.all_passed());

        let id = OperatorMatrix::<f64>::identity(3);
        let report = penrose_report("identity", &id, &id, 1e-9).unwrap();
        for check in report.checks() {
            assert_eq!(check.residual, 0.0);
        }

        // The conjugate transpose is not the pseudoinverse here: the first
        // two conditions pick up a factor ‖A‖² = 5.
        let report = penrose_report("adjoint", &a, &a.adjoint(), 1e-9).unwrap();
        assert!(!report.find("penrose_aba").unwrap().passed);
        assert!(!report.find("penrose_bab").unwrap().passed);
        assert!(report.find("penrose_ab_hermitian").unwrap().passed);
        assert!(report.find("penrose_ba_hermitian").unwrap().passed);

        let err = penrose_residuals(&a, &OperatorMatrix::identity(2)).unwrap_err();
        assert!(matches!(err, OracleError::DimensionMismatch { .. }));
    }

    #[test]
    fn uniqueness_against_candidate() {
        // Any matrix passing all four conditions must equal the pseudoinverse.
        for seed in 0..8u64 {
            let n = 2 + (seed as usize % 5);
            let a = random_matrix(n, 3000 + seed);
            let b = pseudoinverse_default(&a).unwrap();
            // Perturb and confirm at least one condition breaks.
            let mut perturbed = b.clone();
            perturbed.set(0, 0, perturbed.get(0, 0) + Complex::new(1e-3, 0.0));
            let residuals = penrose_residuals(&a, &perturbed).unwrap();
            assert!(
                residuals.iter().any(|&r| r > 1e-8),
                "perturbed candidate must fail a Penrose condition"
            );
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let mut m = OperatorMatrix::<f64>::zeros(2);
        m.set(0, 0, Complex::new(f64::NAN, 0.0));
        assert!(matches!(svd(&m), Err(OracleError::NonFinite)));

        let huge = OperatorMatrix::<f64>::zeros(MAX_DIM + 1);
        assert!(matches!(
            svd(&huge),
            Err(OracleError::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn parallel_columns_deflate() {
        // Numerically parallel columns used to cycle forever; deflation must
        // resolve them to a rank-one decomposition.
        let mut m = OperatorMatrix::<f64>::zeros(2);
        m.set(0, 0, Complex::new(3.0, 1.0));
        m.set(1, 0, Complex::new(-1.0, 2.0));
        m.set(0, 1, Complex::new(1.5, 0.5));
        m.set(1, 1, Complex::new(-0.5, 1.0));
        let s = svd(&m).unwrap();
        assert!(s.singular_values()[1] < 1e-12);
        assert!(s.reconstruction_residual(&m) < 1e-14);
        let gram = s.left_vectors().adjoint().mul(s.left_vectors());
        assert!(relative_distance(&gram, &OperatorMatrix::identity(2)) < 1e-12);
    }

    #[test]
    fn projections_from_svd() {
        let a = sigma1_matrix();
        let s = svd(&a).unwrap();
        let p_range = s.range_projection(1e-10);
        // Range of the fixture is spanned by (1, 2, 0)/√5.
        let u = [1.0 / 5.0_f64.sqrt(), 2.0 / 5.0_f64.sqrt(), 0.0];
        for i in 0..3 {
            for j in 0..3 {
                assert!((p_range.get(i, j).re - u[i] * u[j]).abs() < 1e-14);
            }
        }
        let p_cokernel = s.cokernel_projection(1e-10);
        // Kernel complement is the span of e₁.
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == 1 && j == 1 { 1.0 } else { 0.0 };
                assert!((p_cokernel.get(i, j).re - expected).abs() < 1e-14);
            }
        }
    }
}
