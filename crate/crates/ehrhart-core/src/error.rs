//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied value is outside the documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The input is valid but outside the declared limits of the chosen
    /// algorithm (e.g. too many vertices for brute-force facet enumeration).
    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    /// A configurable resource guard tripped before the computation started.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A polynomial or delta-vector fails the structural checks every
    /// Ehrhart polynomial of an integral polytope must satisfy.
    #[error("invalid ehrhart data: {0}")]
    InvalidEhrhartData(String),

    /// Two independent computation routes produced different results.
    /// This is never resolved silently; it signals a bug.
    #[error("route disagreement in {context}: {left} vs {right}")]
    RouteDisagreement {
        context: String,
        left: String,
        right: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
