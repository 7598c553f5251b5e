//! Crate-wide error type.

use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("noncommutativity parameters out of range: theta = {theta}, eta = {eta} (need finite values with theta*eta < 1)")]
    NcParamsOutOfRange { theta: f64, eta: f64 },

    #[error("negative noncommutativity parameter: theta = {theta}, eta = {eta} (same-signed pairs go through NCParams::new_signed)")]
    NegativeNcParam { theta: f64, eta: f64 },

    #[error("mixed-sign noncommutativity parameters: theta = {theta}, eta = {eta} (theta*eta must be non-negative)")]
    MixedSignNcParams { theta: f64, eta: f64 },

    #[error("degenerate Darboux scale: lambda = {0}")]
    DegenerateDarbouxScale(f64),

    #[error("squeezing parameter out of range: r = {0} (need 0 <= r <= 14)")]
    SqueezeOutOfRange(f64),

    #[error("covariance matrix is not symmetric: max |s - s^T| = {0:e}")]
    NotSymmetric(f64),

    #[error("covariance matrix is not positive-definite")]
    NotPositiveDefinite,

    #[error("covariance matrix is ill-conditioned: cond = {0:e} exceeds 1e12")]
    IllConditioned(f64),

    #[error("invariants admit no real non-negative standard-form solution (non-physical covariance)")]
    NoStandardForm,

    #[error("negative displacement intensity: {0}")]
    NegativeIntensity(f64),

    #[error("Bell optimum undefined for n = {n}, t1 = {t1} (need n > 0, n - t1 > 0, n != 2*t1)")]
    UnphysicalBellParams { n: f64, t1: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
