//! Cyclic correlation (direct-sum and FFT-accelerated), unitary DFT/IDFT,
//! peak-to-average power ratio, and a carrier-frequency-offset model.

use std::cell::RefCell;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::sequence::ComplexSequence;

/// Correlation value per cyclic shift `tau = 0..N-1`.
///
/// When `normalized` is set, each value is the raw correlation sum divided
/// by N. Values are stored as complex numbers; magnitude extraction is the
/// consumer's job.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    values: Vec<Complex64>,
    normalized: bool,
}

impl CorrelationProfile {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn normalized(&self) -> bool {
        self.normalized
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }

    /// Largest magnitude over all shifts, with its shift index.
    pub fn peak(&self) -> (usize, f64) {
        self.values
            .iter()
            .enumerate()
            .map(|(tau, v)| (tau, v.norm()))
            .fold((0, f64::MIN), |best, cur| if cur.1 > best.1 { cur } else { best })
    }

    /// Largest magnitude over shifts `1..N-1`, with its shift index.
    /// Returns shift 0 with value 0 for length-1 profiles.
    pub fn peak_excluding_zero_shift(&self) -> (usize, f64) {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(tau, v)| (tau, v.norm()))
            .fold((0, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best })
    }
}

/// Direct-sum cyclic cross-correlation:
/// `R[tau] = sum_n conj(x[n]) * y[(n + tau) mod N]`.
///
/// Conjugation applies to the first argument. This O(N^2) evaluation is the
/// reference the FFT path is checked against.
pub fn cyclic_cross_correlation(
    x: &ComplexSequence,
    y: &ComplexSequence,
    normalized: bool,
) -> Result<CorrelationProfile> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    let scale = if normalized { 1.0 / n as f64 } else { 1.0 };
    let mut values = Vec::with_capacity(n);
    for tau in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut j = tau;
        for i in 0..n {
            acc += x[i].conj() * y[j];
            j += 1;
            if j == n {
                j = 0;
            }
        }
        values.push(acc * scale);
    }
    Ok(CorrelationProfile { values, normalized })
}

/// Direct-sum cyclic autocorrelation; `R[0]` is the sequence energy (real).
pub fn cyclic_autocorrelation(x: &ComplexSequence, normalized: bool) -> CorrelationProfile {
    cyclic_cross_correlation(x, x, normalized).expect("equal lengths by construction")
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn fft_forward(buf: &mut [Complex64]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_forward(buf.len()).process(buf));
}

fn fft_inverse(buf: &mut [Complex64]) {
    PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(buf.len()).process(buf));
}

/// FFT-accelerated cyclic cross-correlation via
/// `R = IDFT(conj(DFT(x)) .* DFT(y))`.
///
/// Valid for arbitrary lengths, including primes (the planner falls back to
/// Bluestein's algorithm where no small-radix factorization exists).
/// Agrees with [`cyclic_cross_correlation`] elementwise to well below 1e-9.
pub fn fft_cyclic_cross_correlation(
    x: &ComplexSequence,
    y: &ComplexSequence,
    normalized: bool,
) -> Result<CorrelationProfile> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let n = x.len();
    let mut spec_x: Vec<Complex64> = x.samples().to_vec();
    let mut spec_y: Vec<Complex64> = y.samples().to_vec();
    fft_forward(&mut spec_x);
    fft_forward(&mut spec_y);
    for (a, b) in spec_x.iter_mut().zip(spec_y.iter()) {
        *a = a.conj() * b;
    }
    fft_inverse(&mut spec_x);
    // the inverse transform is unnormalized: divide by N once for the IDFT,
    // and once more when a normalized profile is requested
    let scale = if normalized {
        1.0 / (n as f64 * n as f64)
    } else {
        1.0 / n as f64
    };
    let values = spec_x.into_iter().map(|v| v * scale).collect();
    Ok(CorrelationProfile { values, normalized })
}

/// FFT-accelerated cyclic autocorrelation.
pub fn fft_cyclic_autocorrelation(x: &ComplexSequence, normalized: bool) -> CorrelationProfile {
    fft_cyclic_cross_correlation(x, x, normalized).expect("equal lengths by construction")
}

/// Unitary discrete Fourier transform: both directions scale by 1/sqrt(N),
/// so `idft(dft(x)) == x` and energy is preserved.
pub fn dft(x: &ComplexSequence) -> ComplexSequence {
    let mut buf: Vec<Complex64> = x.samples().to_vec();
    fft_forward(&mut buf);
    let scale = 1.0 / (x.len() as f64).sqrt();
    ComplexSequence::from_finite(buf.into_iter().map(|v| v * scale).collect())
}

/// Unitary inverse discrete Fourier transform.
pub fn idft(x: &ComplexSequence) -> ComplexSequence {
    let mut buf: Vec<Complex64> = x.samples().to_vec();
    fft_inverse(&mut buf);
    let scale = 1.0 / (x.len() as f64).sqrt();
    ComplexSequence::from_finite(buf.into_iter().map(|v| v * scale).collect())
}

/// Peak-to-average power ratio: `max |x[n]|^2 / mean |x[n]|^2`. Always >= 1;
/// exactly 1 for any constant-amplitude sequence.
pub fn papr(x: &ComplexSequence) -> Result<f64> {
    let powers: Vec<f64> = x.iter().map(|v| v.norm_sqr()).collect();
    let mean = powers.iter().sum::<f64>() / powers.len() as f64;
    if mean == 0.0 {
        return Err(Error::ZeroEnergy);
    }
    let max = powers.iter().copied().fold(0.0, f64::max);
    Ok(max / mean)
}

/// Applies a carrier frequency offset of `epsilon` cycles per sample:
/// `output[n] = x[n] * exp(j*2*pi*epsilon*n)`.
///
/// The accumulated phase is reduced mod one cycle before evaluation, so
/// integer `epsilon` is an exact identity and precision does not degrade
/// with sample index.
pub fn apply_frequency_offset(x: &ComplexSequence, epsilon: f64) -> ComplexSequence {
    let samples = x
        .iter()
        .enumerate()
        .map(|(n, &v)| {
            let turns = (epsilon * n as f64).rem_euclid(1.0);
            v * Complex64::from_polar(1.0, TAU * turns)
        })
        .collect();
    ComplexSequence::from_finite(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zc::{zc_generate, ExtensionSpec, ZcParams};

    fn ones(n: usize) -> ComplexSequence {
        ComplexSequence::new(vec![Complex64::new(1.0, 0.0); n]).unwrap()
    }

    #[test]
    fn cross_correlation_reduces_to_autocorrelation() {
        let x = zc_generate(&ZcParams::new(2, 7).unwrap());
        let auto = cyclic_autocorrelation(&x, true);
        let cross = cyclic_cross_correlation(&x, &x, true).unwrap();
        assert_eq!(auto, cross);
        // zero-shift value is the (normalized) energy, purely real
        assert!((auto.values()[0].re - 1.0).abs() < 1e-12);
        assert!(auto.values()[0].im.abs() < 1e-12);
    }

    #[test]
    fn prime_length_autocorrelation_is_a_delta() {
        let x = zc_generate(&ZcParams::new(3, 7).unwrap());
        let r = cyclic_autocorrelation(&x, true);
        assert!((r.values()[0].norm() - 1.0).abs() < 1e-12);
        for tau in 1..7 {
            assert!(r.values()[tau].norm() < 1e-9, "shift {tau}");
        }
    }

    #[test]
    fn all_ones_autocorrelation_is_flat() {
        let r = cyclic_autocorrelation(&ones(6), true);
        for v in r.values() {
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn length12_extended_autocorrelation_common_value() {
        let spec = ExtensionSpec::cyclic_extend(12).unwrap();
        let z1 = crate::zc::zc_extended(1, &spec).unwrap();
        let r = cyclic_autocorrelation(&z1, true);
        let mags = r.magnitudes();
        for tau in [1usize, 2, 10, 11] {
            assert!(
                (mags[tau] - 1.0 / 12.0).abs() < 1e-9,
                "shift {tau}: {}",
                mags[tau]
            );
        }
    }

    #[test]
    fn cross_correlation_conjugates_first_argument() {
        // asymmetric pair: R_xy[tau] = conj(R_yx[-tau])
        let x = zc_generate(&ZcParams::new(1, 7).unwrap());
        let y = zc_generate(&ZcParams::new(3, 7).unwrap());
        let fwd = cyclic_cross_correlation(&x, &y, false).unwrap();
        let rev = cyclic_cross_correlation(&y, &x, false).unwrap();
        for tau in 0..7 {
            let mirrored = rev.values()[(7 - tau) % 7].conj();
            assert!((fwd.values()[tau] - mirrored).norm() < 1e-9);
        }
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let x = ones(5);
        let y = ones(6);
        assert_eq!(
            cyclic_cross_correlation(&x, &y, true),
            Err(Error::LengthMismatch { left: 5, right: 6 })
        );
        assert_eq!(
            fft_cyclic_cross_correlation(&x, &y, true),
            Err(Error::LengthMismatch { left: 5, right: 6 })
        );
    }

    #[test]
    fn fft_path_matches_direct_on_known_pair() {
        let x = zc_generate(&ZcParams::new(1, 5).unwrap());
        let y = zc_generate(&ZcParams::new(4, 5).unwrap());
        for normalized in [false, true] {
            let direct = cyclic_cross_correlation(&x, &y, normalized).unwrap();
            let fast = fft_cyclic_cross_correlation(&x, &y, normalized).unwrap();
            for (a, b) in direct.values().iter().zip(fast.values()) {
                assert!((a - b).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn dft_idft_round_trip() {
        let x = zc_generate(&ZcParams::new(5, 11).unwrap());
        let back = idft(&dft(&x));
        assert!(x.max_abs_diff(&back).unwrap() < 1e-12);
    }

    #[test]
    fn dft_of_all_ones_is_a_scaled_spike() {
        let n = 9;
        let spectrum = dft(&ones(n));
        assert!((spectrum[0] - Complex64::new((n as f64).sqrt(), 0.0)).norm() < 1e-12);
        for k in 1..n {
            assert!(spectrum[k].norm() < 1e-12);
        }
    }

    #[test]
    fn dft_preserves_energy() {
        let x = zc_generate(&ZcParams::new(7, 63).unwrap());
        let spectrum = dft(&x);
        assert!((spectrum.energy() - x.energy()).abs() < 1e-9);
    }

    #[test]
    fn dft_of_zc_has_unit_magnitude() {
        let spectrum = dft(&zc_generate(&ZcParams::new(1, 5).unwrap()));
        for v in &spectrum {
            assert!((v.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn papr_values() {
        let zc = zc_generate(&ZcParams::new(3, 11).unwrap());
        assert!((papr(&zc).unwrap() - 1.0).abs() < 1e-12);

        let spike =
            ComplexSequence::new(vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
        assert!((papr(&spike).unwrap() - 2.0).abs() < 1e-12);

        let ext = crate::zc::zc_extended(1, &ExtensionSpec::cyclic_extend(12).unwrap()).unwrap();
        assert!((papr(&ext).unwrap() - 1.0).abs() < 1e-12);

        let zeros =
            ComplexSequence::new(vec![Complex64::new(0.0, 0.0); 4]).unwrap();
        assert_eq!(papr(&zeros), Err(Error::ZeroEnergy));
    }

    #[test]
    fn frequency_offset_identities() {
        let x = zc_generate(&ZcParams::new(29, 63).unwrap());
        assert!(x.max_abs_diff(&apply_frequency_offset(&x, 0.0)).unwrap() < 1e-12);
        assert!(x.max_abs_diff(&apply_frequency_offset(&x, 1.0)).unwrap() < 1e-12);
        // unit amplitude preserved for fractional offsets
        let y = apply_frequency_offset(&x, 0.3);
        for v in &y {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn frequency_offset_degrades_correlation_peak() {
        // half-subcarrier offset on the length-63 sequence with root 29;
        // the frozen peak value is a regression point from direct evaluation
        let x = zc_generate(&ZcParams::new(29, 63).unwrap());
        let y = apply_frequency_offset(&x, 0.5 / 63.0);
        let r = cyclic_cross_correlation(&x, &y, true).unwrap();
        let (_, peak) = r.peak();
        assert!(peak < 1.0);
        assert!(
            (peak - 0.6366857381969636).abs() < 1e-12,
            "regression value drifted: {peak}"
        );
    }

    #[test]
    fn hermitian_symmetry_of_autocorrelation() {
        let x = zc_generate(&ZcParams::new(4, 13).unwrap());
        let r = cyclic_autocorrelation(&x, false);
        for tau in 1..13 {
            let mirrored = r.values()[13 - tau].conj();
            assert!((r.values()[tau] - mirrored).norm() < 1e-9);
        }
    }
}
