//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong in a dimension computation.
#[derive(Debug, Error)]
pub enum Error {
    /// Unknown or unsupported (series, rank) combination.
    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    /// The Weyl group of the requested datum exceeds the configured cap.
    #[error("rank too large: |W| = {size} exceeds cap {cap}")]
    RankTooLarge { size: u64, cap: u64 },

    /// Two values from different root data were combined.
    #[error("datum mismatch: {0} vs {1}")]
    DatumMismatch(String, String),

    /// An operation that requires an integral weight received a non-integral one.
    #[error("non-integral weight: pairing {pairing} with simple coroot {index} is not an integer")]
    NonIntegralWeight { index: usize, pairing: String },

    /// The brute-force Hecke oracle is restricted to very small groups.
    #[error("oracle too large: |W| = {size} exceeds the hard bound {bound}")]
    OracleTooLarge { size: u64, bound: u64 },

    /// Index outside the valid range of a block-matrix family.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A persistent cache file failed its integrity check.
    #[error("corrupt cache: {0}")]
    CorruptCache(String),

    /// A persistent cache file belongs to a different datum or format version.
    #[error("cache version mismatch: {0}")]
    VersionMismatch(String),

    /// The embedded d = 1 half-space self-test produced a value other than 1.
    #[error("calibration failure: d = 1 anchor computed dimension {got}, expected 1")]
    CalibrationError { got: u64 },

    /// An internal bound that must hold by theory was violated; results
    /// would be meaningless, so we abort loudly.
    #[error("internal bound violation: {0}")]
    InternalBoundViolation(String),

    /// Malformed input (weight string, parabolic list, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Underlying I/O failure while reading or writing a cache file.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
