//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by construction, data loading, and the main computation.
#[derive(Debug, Error)]
pub enum Error {
    /// A Cartan type string could not be parsed or is out of range.
    #[error("unknown or unsupported Cartan type: {0}")]
    UnknownType(String),

    /// The type parses but this build does not ship the curated data or
    /// Hecke models needed to compute with it.
    #[error("type {0} is not supported by this build")]
    Unsupported(String),

    /// Division by the zero polynomial or zero rational function.
    #[error("division by zero in exact arithmetic")]
    DivisionByZero,

    /// A matrix that must be invertible is singular.
    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    /// A quantity that must be a polynomial has a nontrivial denominator.
    #[error("non-polynomial value where a polynomial was required: {0}")]
    NotPolynomial(String),

    /// A polynomial that must have integer coefficients does not.
    #[error("non-integral coefficient in {0}")]
    NonIntegral(String),

    /// An internal consistency check failed (library bug or bad data).
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// A curated data file is missing, malformed, or fails its checksum.
    #[error("data error: {0}")]
    Data(String),

    /// The unipotent-class assignment found no admissible candidate.
    #[error("no unipotent class admissible for class {0}")]
    ThetaNoCandidate(String),

    /// The unipotent-class assignment found more than one candidate.
    #[error("ambiguous unipotent class for class {0}: candidates {1}")]
    ThetaAmbiguous(String, String),

    /// I/O while reading an external data directory.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
