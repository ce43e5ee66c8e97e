use thiserror::Error;

/// Errors produced by sequence construction, correlation, and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Sequence length must be odd; even lengths are rejected outright.
    #[error("invalid length {0}: length must be odd and at least 3")]
    InvalidLength(usize),

    /// Root index out of the valid range `1..=length-1`.
    #[error("invalid root {root} for length {length}: root must satisfy 1 <= root <= length-1")]
    InvalidRoot { root: usize, length: usize },

    /// An operation requires at least one sample.
    #[error("sequence must contain at least one sample")]
    EmptySequence,

    /// Complex samples must be finite in both components.
    #[error("non-finite sample at index {0}")]
    NonFiniteSample(usize),

    /// Binary chips must be exactly +1 or -1.
    #[error("invalid chip at index {0}: chips must be +1 or -1")]
    InvalidChip(usize),

    /// No prime exists at or below the requested bound.
    #[error("no prime exists at or below {0}")]
    NoPrimeExists(usize),

    /// Two sequences that must share a length do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// Peak-to-average power ratio is undefined for an all-zero sequence.
    #[error("zero-energy sequence: peak-to-average power ratio is undefined")]
    ZeroEnergy,

    /// LFSR feedback taps do not generate a maximal-length sequence.
    #[error("taps are not primitive: measured period {measured}, expected {expected}")]
    NotPrimitive { measured: usize, expected: usize },

    /// LFSR seed state must not be all-zero.
    #[error("invalid seed: LFSR initial state must not be all-zero")]
    InvalidSeed,

    /// LFSR tap positions are malformed (empty, out of range, or missing the degree term).
    #[error("invalid taps: {0}")]
    InvalidTaps(String),

    /// Gold code construction requires two registers of the same degree.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Walsh code order must be a power of two.
    #[error("invalid order {0}: Walsh code order must be a power of two")]
    InvalidOrder(usize),

    /// Preset parameters violate the preset's root or shift constraints.
    #[error("invalid preset: {0}")]
    InvalidPreset(String),

    /// Cyclic-shift step for a shift family must satisfy 1 <= step <= length.
    #[error("invalid shift step {step} for length {length}")]
    InvalidStep { step: usize, length: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
