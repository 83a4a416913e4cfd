//! Scalar abstraction for the numeric core.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar usable throughout the crate: `f32` or `f64`.
///
/// Besides the `num-traits` arithmetic surface, the trait carries the
/// per-precision tolerances used by validity checks, so generic code does not
/// hard-wire double-precision thresholds into single-precision runs.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Sum<Self> + Debug + Display + Send + Sync + 'static
{
    /// Max per-entry deviation of `BᵀB` from the identity accepted when
    /// validating an orthonormal basis.
    fn ortho_tol() -> Self;

    /// Relative residual-sum-of-squares threshold below which a response is
    /// treated as lying in the span of the regressors.
    fn degenerate_tol() -> Self;

    /// Shorthand for converting an `f64` literal.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in scalar type")
    }
}

impl Real for f64 {
    #[inline]
    fn ortho_tol() -> f64 {
        1e-10
    }
    #[inline]
    fn degenerate_tol() -> f64 {
        1e-12
    }
}

impl Real for f32 {
    #[inline]
    fn ortho_tol() -> f32 {
        1e-4
    }
    #[inline]
    fn degenerate_tol() -> f32 {
        1e-6
    }
}
