//! Zadoff-Chu sequence generation: pure sequences, conjugate roots, and
//! cyclically extended or truncated variants of arbitrary length.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::{largest_prime_leq, smallest_prime_geq};
use crate::sequence::ComplexSequence;

/// Root index and length identifying one pure Zadoff-Chu sequence.
///
/// The length must be odd and at least 3; the root must lie in
/// `1..=length-1`. Lengths need not be prime (the LTE PSS uses 63), but
/// the zero-autocorrelation and fixed-cross-correlation properties are
/// only guaranteed for prime lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZcParams {
    root: usize,
    length: usize,
}

impl ZcParams {
    pub fn new(root: usize, length: usize) -> Result<Self> {
        if length < 3 || length.is_multiple_of(2) {
            return Err(Error::InvalidLength(length));
        }
        if root == 0 || root >= length {
            return Err(Error::InvalidRoot { root, length });
        }
        Ok(Self { root, length })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Parameters of the elementwise complex conjugate sequence.
    ///
    /// The sequence for root `length - root` equals the conjugate of the
    /// sequence for `root`, since n(n+1) is always even. Applying this
    /// twice returns the original parameters.
    pub fn conjugate_root(&self) -> ZcParams {
        ZcParams {
            root: self.length - self.root,
            length: self.length,
        }
    }
}

/// Phase numerators of a pure sequence: sample n has phase `pi * k[n] / length`
/// with `k[n]` reduced into `(-length, length]`.
///
/// The quadratic exponent is reduced modulo `2 * length` in exact integer
/// arithmetic, so the numerators are exact for any in-scope length.
pub fn zc_phase_numerators(params: &ZcParams) -> Vec<i64> {
    let n_zc = params.length as u128;
    let q = params.root as u128;
    (0..params.length)
        .map(|n| reduced_numerator(q, n as u128, n_zc))
        .collect()
}

fn reduced_numerator(q: u128, n: u128, n_zc: u128) -> i64 {
    let r = (q * n * (n + 1)) % (2 * n_zc);
    // raw phase is -pi*r/N with r in [0, 2N); fold into (-pi, pi]
    if r < n_zc {
        -(r as i64)
    } else {
        (2 * n_zc - r) as i64
    }
}

fn unit_phase(numerator: i64, length: usize) -> Complex64 {
    Complex64::from_polar(1.0, PI * numerator as f64 / length as f64)
}

/// Generates the pure Zadoff-Chu sequence for `params`:
/// `s[n] = exp(-j*pi*root*n*(n+1)/length)`.
///
/// Every sample has unit magnitude; only the phase varies.
pub fn zc_generate(params: &ZcParams) -> ComplexSequence {
    let samples = zc_phase_numerators(params)
        .into_iter()
        .map(|k| unit_phase(k, params.length))
        .collect();
    ComplexSequence::from_finite(samples)
}

/// How a non-prime target length is reached from a prime base length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExtensionMethod {
    /// Wrap the head of a shorter prime-length sequence onto its tail.
    CyclicExtend,
    /// Cut trailing samples off a longer prime-length sequence.
    Truncate,
}

/// Target length plus the method and derived prime base length.
///
/// For `CyclicExtend` the base is the largest prime at or below the target;
/// for `Truncate` it is the smallest prime at or above the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtensionSpec {
    target_length: usize,
    method: ExtensionMethod,
    base_length: usize,
}

impl ExtensionSpec {
    pub fn cyclic_extend(target_length: usize) -> Result<Self> {
        if target_length < 3 {
            return Err(Error::InvalidLength(target_length));
        }
        let base_length = largest_prime_leq(target_length)?;
        Ok(Self {
            target_length,
            method: ExtensionMethod::CyclicExtend,
            base_length,
        })
    }

    pub fn truncate(target_length: usize) -> Result<Self> {
        if target_length < 3 {
            return Err(Error::InvalidLength(target_length));
        }
        let base_length = smallest_prime_geq(target_length);
        Ok(Self {
            target_length,
            method: ExtensionMethod::Truncate,
            base_length,
        })
    }

    pub fn target_length(&self) -> usize {
        self.target_length
    }

    pub fn method(&self) -> ExtensionMethod {
        self.method
    }

    pub fn base_length(&self) -> usize {
        self.base_length
    }
}

/// Phase numerators of an extended/truncated sequence, over the base length:
/// sample n has phase `pi * k[n] / base_length`.
pub fn zc_extended_phase_numerators(root: usize, spec: &ExtensionSpec) -> Result<Vec<i64>> {
    let base = ZcParams::new(root, spec.base_length)?;
    let base_numerators = zc_phase_numerators(&base);
    Ok((0..spec.target_length)
        .map(|n| base_numerators[n % spec.base_length])
        .collect())
}

/// Builds an arbitrary-length sequence from a prime-length base:
/// `z[n] = s[n mod base_length]` for cyclic extension, or the first
/// `target_length` samples of the base sequence for truncation.
///
/// The root is validated against the base length, not the target length.
/// Unit amplitude is preserved, but the zero-autocorrelation and
/// fixed-cross-correlation guarantees of prime lengths are not.
pub fn zc_extended(root: usize, spec: &ExtensionSpec) -> Result<ComplexSequence> {
    let numerators = zc_extended_phase_numerators(root, spec)?;
    let samples = numerators
        .into_iter()
        .map(|k| unit_phase(k, spec.base_length))
        .collect();
    Ok(ComplexSequence::from_finite(samples))
}
