//! Shared numerics: 3-vector algebra, symmetric 3x3 eigendecomposition,
//! special functions, and a seedable deterministic RNG.
//!
//! Everything here is plain `f64` with no hidden global state. All types are
//! small immutable values that are cheap to copy; [`Rng`] is the only type
//! with mutable state and is meant to be owned by a single run.

mod eig;
mod rng;
mod special;
mod vec;

pub use eig::{sym_eig3, SymEig3};
pub use rng::Rng;
pub use special::{beta_pdf, ln_beta, log_gamma, reg_inc_beta, student_t_cdf};
pub use vec::{UnitVec3, Vec3};

/// Errors from the numeric kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum MathError {
    /// An input contained NaN or infinity.
    #[error("input contains non-finite values")]
    NonFinite,
    /// A matrix handed to the symmetric eigensolver was not symmetric.
    #[error("matrix is not symmetric within tolerance")]
    NotSymmetric,
    /// A vector with (near-)zero norm cannot be normalized.
    #[error("vector norm too small to normalize")]
    ZeroNorm,
    /// An argument fell outside the mathematical domain of the function.
    #[error("domain error: {0}")]
    Domain(&'static str),
}
