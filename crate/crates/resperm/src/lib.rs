//! Permutation-based coefficient tests for fixed-design linear models.
//!
//! Given observations `(X, Z, Y)` from the model `Y = X β + b Z + ε`, this
//! crate tests `H0: b = 0` without distributional assumptions on the noise
//! beyond exchangeability. The main test (`rpt`) projects residuals onto the
//! subspace orthogonal to both the original and a permuted copy of the design,
//! so that under the null the comparison amounts to permuting the noise vector
//! itself; it is finite-sample valid whenever `p < n/2`. Classical ANOVA and a
//! naive residual permutation test are provided as baselines, together with a
//! seeded Monte Carlo harness for size/power studies.
//!
//! All numeric code is generic over the scalar type (`f32` or `f64`) through
//! the [`Real`] trait; concrete aliases for the common types live at the crate
//! root. Every randomized routine takes an explicit [`SeededRng`], and results
//! are bit-reproducible for a fixed seed.

pub mod datagen;
pub mod error;
pub mod hypothesis;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod perm;
pub mod real;
pub mod rng;
pub mod sim;
pub mod special;

pub use error::{Error, Result};
pub use real::Real;
pub use rng::SeededRng;

pub use hypothesis::{anova_test, naive_rpt, rpt, AnovaResult, RptPlan, RptResult};
pub use linalg::{Matrix, OrthonormalBasis};
pub use perm::{Permutation, PermutationSet};
pub use special::f_cdf;

/// Double-precision matrix.
pub type Matrix64 = Matrix<f64>;
/// Single-precision matrix.
pub type Matrix32 = Matrix<f32>;
/// Double-precision orthonormal basis.
pub type Basis64 = OrthonormalBasis<f64>;
/// Single-precision orthonormal basis.
pub type Basis32 = OrthonormalBasis<f32>;
/// Double-precision residual permutation test result.
pub type RptResult64 = RptResult<f64>;
/// Double-precision ANOVA result.
pub type AnovaResult64 = AnovaResult<f64>;
