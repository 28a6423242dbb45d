//! Scalar abstraction: every quantity in this crate is built from a real
//! floating-point type `T` (`f32` or `f64`) and complex values `Complex<T>`.

use num_complex::Complex;
use num_traits::{Float, FromPrimitive};
use std::fmt::{Debug, Display};

/// Real scalar underlying all computations: `f32` or `f64`.
pub trait Scalar:
    Float + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an `f64` constant (tolerances, default parameters) into `T`.
///
/// Panics only if `T` cannot represent any rounding of the value, which does
/// not happen for `f32`/`f64`.
pub fn real<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}

/// Complex value over the crate scalar.
pub type C<T> = Complex<T>;

/// `x` as an `f64` for error messages and reporting (NaN if out of range).
pub fn display_f64<T: Scalar>(x: T) -> f64 {
    num_traits::ToPrimitive::to_f64(&x).unwrap_or(f64::NAN)
}
