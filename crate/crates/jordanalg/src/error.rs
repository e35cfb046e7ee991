use thiserror::Error;

/// Errors produced by algebra construction and the numerical machinery.
#[derive(Debug, Error)]
pub enum JordanError {
    /// Caller passed operands that violate a precondition (level or algebra
    /// mismatch, bad sizes, malformed probability vectors, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Operation is only defined for a subset of the algebra classes.
    #[error("unsupported algebra class: {0}")]
    UnsupportedClass(String),

    /// A self-check inside the library failed; this signals a construction
    /// bug (e.g. a product matrix that does not re-expand on the basis), not
    /// a caller error.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    /// Spectral decomposition found complex or merged roots, which formal
    /// reality forbids for a correctly constructed algebra.
    #[error("spectral decomposition failed: {0}")]
    SpectralFailure(String),

    /// The numerical rank of the power basis is ambiguous at the configured
    /// threshold; the input is too ill-conditioned to decompose reliably.
    #[error("ill-conditioned input: {0}")]
    IllConditioned(String),
}

pub type Result<T> = std::result::Result<T, JordanError>;
