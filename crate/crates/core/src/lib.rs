//! Zadoff-Chu and related spreading sequences.
//!
//! Generation of pure, cyclically extended, and truncated Zadoff-Chu
//! sequences; cyclic auto/cross-correlation with direct-sum and
//! FFT-accelerated engines; machine-checkable verification of the CAZAC
//! property set; comparison code families (m-sequences, Gold codes,
//! Walsh-Hadamard codes, seeded random baselines); and named LTE/5G
//! parameterizations.
//!
//! All operations are pure functions of their inputs with no shared
//! mutable state, so values can be moved freely between threads and every
//! entry point is safe to call concurrently.

pub mod codes;
pub mod correlation;
pub mod error;
pub mod presets;
pub mod primes;
pub mod sequence;
pub mod verify;
pub mod zc;

pub use codes::{
    family_correlation_stats, gold_code, gold_family, m_sequence, random_auto_stats,
    random_pair_cross_stats, walsh_codes, BinarySequence, CorrelationStats, LfsrSpec, StatsMode,
};
pub use correlation::{
    apply_frequency_offset, cyclic_autocorrelation, cyclic_cross_correlation, dft,
    fft_cyclic_autocorrelation, fft_cyclic_cross_correlation, idft, papr, CorrelationProfile,
};
pub use error::{Error, Result};
pub use presets::{
    prach_shift_family, preset_sequence, PrachVariant, PresetId, PresetName,
};
pub use primes::{is_coprime, is_prime, largest_prime_leq, smallest_prime_geq};
pub use sequence::ComplexSequence;
pub use verify::{
    verify_constant_amplitude, verify_cross_correlation_level, verify_dft_closure, verify_family,
    verify_sequence, verify_zero_autocorrelation, FamilyReport, PairCheck, PropertyId,
    PropertyReport, RootCheck, DEFAULT_TOLERANCE,
};
pub use zc::{
    zc_extended, zc_extended_phase_numerators, zc_generate, zc_phase_numerators, ExtensionMethod,
    ExtensionSpec, ZcParams,
};
