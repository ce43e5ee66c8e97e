//! Finite complex sample sequences and cyclic (circular) shifts.

use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A finite, non-empty sequence of complex samples.
///
/// The universal carrier for generated sequences, shifted variants, DFT
/// spectra, and correlation inputs. Every sample is finite in both
/// components; this is enforced at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSequence {
    samples: Vec<Complex64>,
}

impl ComplexSequence {
    pub fn new(samples: Vec<Complex64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySequence);
        }
        for (i, s) in samples.iter().enumerate() {
            if !s.re.is_finite() || !s.im.is_finite() {
                return Err(Error::NonFiniteSample(i));
            }
        }
        Ok(Self { samples })
    }

    /// Builds a sequence from samples known to be finite (unit-modulus
    /// constructions). Bypasses the per-sample scan.
    pub(crate) fn from_finite(samples: Vec<Complex64>) -> Self {
        debug_assert!(!samples.is_empty());
        Self { samples }
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    /// Always false: emptiness is rejected at construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.samples.iter()
    }

    /// The `m`-th cyclic shift: `output[n] = self[(n + m) mod N]`.
    ///
    /// Any integer `m` is accepted and reduced mod N, so there are exactly
    /// N distinct shifts.
    pub fn cyclic_shift(&self, m: i64) -> ComplexSequence {
        let n = self.len() as i64;
        let m = m.rem_euclid(n) as usize;
        let shifted = (0..self.len())
            .map(|i| self.samples[(i + m) % self.len()])
            .collect();
        Self::from_finite(shifted)
    }

    pub fn conjugate(&self) -> ComplexSequence {
        Self::from_finite(self.samples.iter().map(|s| s.conj()).collect())
    }

    /// Sum of squared sample magnitudes.
    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|s| s.norm_sqr()).sum()
    }

    /// Largest elementwise distance to another sequence of the same length.
    pub fn max_abs_diff(&self, other: &ComplexSequence) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .iter()
            .zip(other.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

impl Index<usize> for ComplexSequence {
    type Output = Complex64;

    fn index(&self, index: usize) -> &Complex64 {
        &self.samples[index]
    }
}

impl<'a> IntoIterator for &'a ComplexSequence {
    type Item = &'a Complex64;
    type IntoIter = std::slice::Iter<'a, Complex64>;

    fn into_iter(self) -> Self::IntoIter {
        self.samples.iter()
    }
}
