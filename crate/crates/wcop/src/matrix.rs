//! Dense complex matrices representing operators in the orthonormal ℓ²-frame
//! of L²(μ).
//!
//! The frame is the conjugation of L²(μ) by diag(√μ): a function f corresponds
//! to the coordinate vector f̂(x) = f(x)·√μ(x). In this frame the L²(μ)
//! adjoint of an operator is the conjugate transpose of its matrix, so a
//! single Euclidean SVD oracle validates every operator identity.

use crate::measure::{DiscreteMeasureSpace, L2Function};
use crate::scalar::{Scalar, C};
use num_complex::Complex;

/// Coordinate frame tag carried by every matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    /// Orthonormal ℓ²-frame (conjugation by diag(√μ)).
    Ell2,
}

/// Square dense complex matrix with dimension and frame metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix<T: Scalar> {
    dim: usize,
    /// Row-major entries, `entries[row * dim + col]`.
    entries: Vec<C<T>>,
    frame: Frame,
}

impl<T: Scalar> OperatorMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex::new(T::zero(), T::zero()); dim * dim],
            frame: Frame::Ell2,
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex::new(T::one(), T::zero()));
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut m = Self::zeros(dim);
        for row in 0..dim {
            for col in 0..dim {
                m.set(row, col, f(row, col));
            }
        }
        m
    }

    /// Diagonal matrix; in the ℓ²-frame this is the multiplication operator
    /// M_g, since diag(√μ)·diag(g)·diag(1/√μ) = diag(g).
    pub fn diagonal(diag: &[C<T>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C<T> {
        self.entries[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: C<T>) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Conjugate transpose; equals the L²(μ) adjoint in the ℓ²-frame.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |i, j| self.get(j, i).conj())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        Self::from_fn(n, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let n = self.dim;
        Self::from_fn(n, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    /// Matrix-vector product on frame coordinates.
    pub fn apply(&self, x: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(x.len(), self.dim, "vector length mismatch");
        let n = self.dim;
        let mut out = vec![Complex::new(T::zero(), T::zero()); n];
        for i in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..n {
                acc = acc + self.get(i, j) * x[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn frobenius_norm(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, z| acc.max(z.norm()))
    }

    pub fn frobenius_distance(&self, rhs: &Self) -> T {
        self.sub(rhs).frobenius_norm()
    }

    /// Largest entrywise distance.
    pub fn max_entry_distance(&self, rhs: &Self) -> T {
        self.sub(rhs).max_abs()
    }
}

/// ‖a − b‖_F / max(‖a‖_F, ‖b‖_F), or the absolute distance when both vanish.
pub fn relative_distance<T: Scalar>(a: &OperatorMatrix<T>, b: &OperatorMatrix<T>) -> T {
    let diff = a.frobenius_distance(b);
    let scale = a.frobenius_norm().max(b.frobenius_norm());
    if scale > T::zero() {
        diff / scale
    } else {
        diff
    }
}

/// ‖m‖_F scaled residual: ‖num‖_F / ‖denom‖_F with a unit floor.
pub fn scaled_norm<T: Scalar>(num: &OperatorMatrix<T>, denom: &OperatorMatrix<T>) -> T {
    let scale = denom.frobenius_norm();
    let n = num.frobenius_norm();
    if scale > T::zero() {
        n / scale
    } else {
        n
    }
}

/// Frame coordinates of a function: f̂(x) = f(x)·√μ(x).
pub fn to_frame<T: Scalar>(space: &DiscreteMeasureSpace<T>, f: &L2Function<T>) -> Vec<C<T>> {
    assert_eq!(f.len(), space.size(), "function length mismatch");
    (0..space.size())
        .map(|x| f.value(x) * space.mass(x).sqrt())
        .collect()
}

/// Function values from frame coordinates: f(x) = f̂(x)/√μ(x).
pub fn from_frame<T: Scalar>(space: &DiscreteMeasureSpace<T>, coords: &[C<T>]) -> L2Function<T> {
    assert_eq!(coords.len(), space.size(), "coordinate length mismatch");
    L2Function::from_raw(
        (0..space.size())
            .map(|x| {
                let s = space.mass(x).sqrt();
                Complex::new(coords[x].re / s, coords[x].im / s)
            })
            .collect(),
    )
}

/// Frame basis vector ê_y as a function: e_y / √μ(y).
pub fn frame_basis_function<T: Scalar>(
    space: &DiscreteMeasureSpace<T>,
    y: usize,
) -> L2Function<T> {
    let mut values = vec![Complex::new(T::zero(), T::zero()); space.size()];
    values[y] = Complex::new(T::one() / space.mass(y).sqrt(), T::zero());
    L2Function::from_raw(values)
}

/// Matrix of a function-space operator, assembled column by column: column y
/// holds the frame coordinates of `op(ê_y)`.
pub fn matrix_from_map<T: Scalar>(
    space: &DiscreteMeasureSpace<T>,
    mut op: impl FnMut(&L2Function<T>) -> L2Function<T>,
) -> OperatorMatrix<T> {
    let n = space.size();
    let mut m = OperatorMatrix::zeros(n);
    for y in 0..n {
        let image = op(&frame_basis_function(space, y));
        let coords = to_frame(space, &image);
        for (x, &c) in coords.iter().enumerate() {
            m.set(x, y, c);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::DiscreteMeasureSpace;

    #[test]
    fn product_and_adjoint() {
        let a = OperatorMatrix::from_fn(2, |i, j| Complex::new((i + 2 * j) as f64, 1.0));
        let id = OperatorMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
        let aa = a.adjoint().adjoint();
        assert_eq!(aa, a);
    }

    #[test]
    fn frame_round_trip() {
        let space =
            DiscreteMeasureSpace::new(vec!["a".into(), "b".into()], vec![4.0, 0.25]).unwrap();
        let f = L2Function::from_reals(&[3.0, -2.0]);
        let coords = to_frame(&space, &f);
        assert_eq!(coords[0], Complex::new(6.0, 0.0));
        assert_eq!(coords[1], Complex::new(-1.0, 0.0));
        let back = from_frame(&space, &coords);
        assert_eq!(back, f);
    }

    #[test]
    fn relative_distance_handles_zero() {
        let z = OperatorMatrix::<f64>::zeros(3);
        assert_eq!(relative_distance(&z, &z), 0.0);
        let id = OperatorMatrix::identity(3);
        assert!(relative_distance(&id, &z) > 0.5);
    }
}
