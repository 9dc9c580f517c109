use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// The order `m` of a coefficient family or functional must be positive.
    #[error("order m must be at least 1 (got {0})")]
    ZeroOrder(usize),

    #[error("order mismatch: expected table for m = {expected}, got m = {found}")]
    OrderMismatch { expected: usize, found: usize },

    /// Floating evaluation of the order-m functionals loses all precision
    /// beyond this cap.
    #[error("order m = {m} exceeds the floating-point cap {cap}")]
    OrderTooLarge { m: usize, cap: usize },

    #[error("synthetic division left a nonzero remainder {0}")]
    NonzeroRemainder(String),

    #[error("zero-mean check failed: mean {mean:e} exceeds {threshold:e}; project to mean zero first")]
    NonzeroMean { mean: f64, threshold: f64 },

    #[error("grid must have at least {min} samples (got {got})")]
    GridTooSmall { got: usize, min: usize },

    #[error("requested degree {degree} aliases on a grid of {samples} samples")]
    Aliasing { degree: usize, samples: usize },

    #[error("non-finite coefficient in `{0}`")]
    NonFinite(String),

    #[error("curve is not regular: min |X'| = {min_speed:e}, max |X'| = {max_speed:e}")]
    NotRegular { min_speed: f64, max_speed: f64 },

    #[error("simplicity check failed: polygon with {samples} vertices self-intersects")]
    NotSimple { samples: usize },

    #[error("convexity check failed: min radius of curvature {min_rho:e} at theta = {theta:.6} (max {max_rho:e})")]
    NotConvex { min_rho: f64, max_rho: f64, theta: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
