//! Comparison code families: LFSR m-sequences, Gold codes, Walsh-Hadamard
//! codes, a seeded random +/-1 baseline, and pooled correlation statistics.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::correlation::{cyclic_autocorrelation, cyclic_cross_correlation};
use crate::error::{Error, Result};
use crate::sequence::ComplexSequence;

/// A +/-1-valued chip sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarySequence {
    chips: Vec<i8>,
}

impl BinarySequence {
    pub fn new(chips: Vec<i8>) -> Result<Self> {
        if chips.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(i) = chips.iter().position(|&c| c != 1 && c != -1) {
            return Err(Error::InvalidChip(i));
        }
        Ok(Self { chips })
    }

    pub fn chips(&self) -> &[i8] {
        &self.chips
    }

    pub fn len(&self) -> usize {
        self.chips.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_complex(&self) -> ComplexSequence {
        ComplexSequence::new(
            self.chips
                .iter()
                .map(|&c| Complex64::new(c as f64, 0.0))
                .collect(),
        )
        .expect("chips are finite and non-empty")
    }

    /// Chipwise product with another sequence of the same length.
    pub fn product(&self, other: &BinarySequence) -> Result<BinarySequence> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(BinarySequence {
            chips: self
                .chips
                .iter()
                .zip(&other.chips)
                .map(|(&a, &b)| a * b)
                .collect(),
        })
    }

    pub fn cyclic_shift(&self, m: i64) -> BinarySequence {
        let n = self.len() as i64;
        let m = m.rem_euclid(n) as usize;
        BinarySequence {
            chips: (0..self.len())
                .map(|i| self.chips[(i + m) % self.len()])
                .collect(),
        }
    }

    /// Deterministic iid +/-1 sequence from the supplied generator.
    pub fn random<R: Rng + ?Sized>(length: usize, rng: &mut R) -> Result<BinarySequence> {
        if length == 0 {
            return Err(Error::EmptySequence);
        }
        Ok(BinarySequence {
            chips: (0..length)
                .map(|_| if rng.random::<bool>() { 1 } else { -1 })
                .collect(),
        })
    }
}

/// Feedback configuration for a Fibonacci LFSR.
///
/// `taps` lists the exponents of the feedback polynomial with non-zero
/// coefficients, excluding the implicit constant term: `[3, 1]` encodes
/// x^3 + x + 1. The degree is the largest exponent and fixes the register
/// width. Maximality of the generated sequence is not proven structurally;
/// it is measured at generation time, so a non-primitive polynomial fails
/// loudly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfsrSpec {
    degree: usize,
    taps: Vec<usize>,
    initial_state: Vec<bool>,
}

impl LfsrSpec {
    pub fn new(taps: Vec<usize>, initial_state: Vec<bool>) -> Result<Self> {
        if taps.is_empty() {
            return Err(Error::InvalidTaps("tap list is empty".into()));
        }
        let degree = *taps.iter().max().expect("non-empty");
        if degree == 0 {
            return Err(Error::InvalidTaps("degree must be at least 1".into()));
        }
        if taps.contains(&0) {
            return Err(Error::InvalidTaps(
                "exponent 0 is implicit; taps must be >= 1".into(),
            ));
        }
        let mut sorted = taps.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != taps.len() {
            return Err(Error::InvalidTaps("duplicate tap exponents".into()));
        }
        if initial_state.len() != degree {
            return Err(Error::InvalidTaps(format!(
                "initial state has {} bits, degree is {degree}",
                initial_state.len()
            )));
        }
        if initial_state.iter().all(|&b| !b) {
            return Err(Error::InvalidSeed);
        }
        Ok(Self {
            degree,
            taps: sorted,
            initial_state,
        })
    }

    /// Spec with the given polynomial exponents and an all-ones seed.
    pub fn with_all_ones_seed(taps: Vec<usize>) -> Result<Self> {
        let degree = taps.iter().copied().max().unwrap_or(0);
        Self::new(taps, vec![true; degree])
    }

    /// x^3 + x + 1, all-ones seed.
    pub fn degree3() -> LfsrSpec {
        Self::with_all_ones_seed(vec![3, 1]).expect("valid taps")
    }

    /// Preferred pair x^5 + x^2 + 1 and x^5 + x^4 + x^3 + x^2 + 1, all-ones seeds.
    pub fn degree5_preferred_pair() -> (LfsrSpec, LfsrSpec) {
        (
            Self::with_all_ones_seed(vec![5, 2]).expect("valid taps"),
            Self::with_all_ones_seed(vec![5, 4, 3, 2]).expect("valid taps"),
        )
    }

    /// x^7 + x^3 + 1, all-ones seed.
    pub fn degree7() -> LfsrSpec {
        Self::with_all_ones_seed(vec![7, 3]).expect("valid taps")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn taps(&self) -> &[usize] {
        &self.taps
    }

    pub fn initial_state(&self) -> &[bool] {
        &self.initial_state
    }

    /// Sequence period for a maximal configuration.
    pub fn maximal_period(&self) -> usize {
        (1usize << self.degree) - 1
    }
}

/// Runs the LFSR for one full period and maps bits 0 -> +1, 1 -> -1.
///
/// The register state is tracked against the seed: if it does not first
/// return to the seed after exactly `2^degree - 1` steps, the taps are not
/// primitive and the call fails.
pub fn m_sequence(spec: &LfsrSpec) -> Result<BinarySequence> {
    let m = spec.degree;
    let expected = spec.maximal_period();
    let mut register = spec.initial_state.clone();
    let mut bits = Vec::with_capacity(expected);
    for step in 1..=expected {
        bits.push(register[0]);
        // recurrence s[n+m] = s[n] + sum over taps t < m of s[n+t] (mod 2)
        let mut feedback = register[0];
        for &t in &spec.taps {
            if t < m {
                feedback ^= register[t];
            }
        }
        register.rotate_left(1);
        register[m - 1] = feedback;
        if register == spec.initial_state && step != expected {
            return Err(Error::NotPrimitive {
                measured: step,
                expected,
            });
        }
    }
    if register != spec.initial_state {
        return Err(Error::NotPrimitive {
            measured: expected + 1, // not yet recurred within the full period
            expected,
        });
    }
    BinarySequence::new(bits.into_iter().map(|b| if b { -1 } else { 1 }).collect())
}

/// Gold code: chipwise product of sequence A with sequence B cyclically
/// shifted by `shift`. Both registers must have the same degree and be
/// maximal.
pub fn gold_code(spec_a: &LfsrSpec, spec_b: &LfsrSpec, shift: i64) -> Result<BinarySequence> {
    if spec_a.degree != spec_b.degree {
        return Err(Error::DegreeMismatch {
            left: spec_a.degree,
            right: spec_b.degree,
        });
    }
    let a = m_sequence(spec_a)?;
    let b = m_sequence(spec_b)?;
    a.product(&b.cyclic_shift(shift))
}

/// The full Gold family for a preferred pair: both source sequences plus
/// the products at every relative shift (`2^m + 1` codes in total).
pub fn gold_family(spec_a: &LfsrSpec, spec_b: &LfsrSpec) -> Result<Vec<BinarySequence>> {
    if spec_a.degree != spec_b.degree {
        return Err(Error::DegreeMismatch {
            left: spec_a.degree,
            right: spec_b.degree,
        });
    }
    let a = m_sequence(spec_a)?;
    let b = m_sequence(spec_b)?;
    let mut family = Vec::with_capacity(a.len() + 2);
    family.push(a.clone());
    family.push(b.clone());
    for shift in 0..a.len() {
        family.push(a.product(&b.cyclic_shift(shift as i64))?);
    }
    Ok(family)
}

/// Rows of the Sylvester Hadamard matrix of the given order: `order`
/// mutually orthogonal codes. The order must be a power of two.
pub fn walsh_codes(order: usize) -> Result<Vec<BinarySequence>> {
    if order == 0 || !order.is_power_of_two() {
        return Err(Error::InvalidOrder(order));
    }
    let mut rows: Vec<Vec<i8>> = vec![vec![1]];
    let mut size = 1;
    while size < order {
        let mut next = Vec::with_capacity(size * 2);
        for row in &rows {
            let mut top: Vec<i8> = row.clone();
            top.extend(row.iter().copied());
            next.push(top);
        }
        for row in &rows {
            let mut bottom: Vec<i8> = row.clone();
            bottom.extend(row.iter().map(|&c| -c));
            next.push(bottom);
        }
        rows = next;
        size *= 2;
    }
    rows.into_iter().map(BinarySequence::new).collect()
}

/// Which correlation values a statistics pass pools together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StatsMode {
    /// All non-zero-shift autocorrelation magnitudes of every sequence.
    AutoNonzeroShift,
    /// All shifts of every unordered distinct pair.
    CrossAllShifts,
}

/// Pooled statistics of normalized correlation magnitudes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationStats {
    pub mean_abs: f64,
    pub mean_square: f64,
    pub max_abs: f64,
    pub sample_count: usize,
}

#[derive(Default)]
struct StatsAccumulator {
    sum_abs: f64,
    sum_square: f64,
    max_abs: f64,
    count: usize,
}

impl StatsAccumulator {
    fn push(&mut self, magnitude: f64) {
        self.sum_abs += magnitude;
        self.sum_square += magnitude * magnitude;
        self.max_abs = self.max_abs.max(magnitude);
        self.count += 1;
    }

    fn finish(self) -> Result<CorrelationStats> {
        if self.count == 0 {
            return Err(Error::EmptySequence);
        }
        Ok(CorrelationStats {
            mean_abs: self.sum_abs / self.count as f64,
            mean_square: self.sum_square / self.count as f64,
            max_abs: self.max_abs,
            sample_count: self.count,
        })
    }
}

/// Pools normalized correlation magnitudes over a family of equal-length
/// sequences, per the selected mode.
pub fn family_correlation_stats(
    family: &[ComplexSequence],
    mode: StatsMode,
) -> Result<CorrelationStats> {
    let Some(first) = family.first() else {
        return Err(Error::EmptySequence);
    };
    let n = first.len();
    for seq in family {
        if seq.len() != n {
            return Err(Error::LengthMismatch {
                left: n,
                right: seq.len(),
            });
        }
    }
    let mut acc = StatsAccumulator::default();
    match mode {
        StatsMode::AutoNonzeroShift => {
            for seq in family {
                let profile = cyclic_autocorrelation(seq, true);
                for v in &profile.values()[1..] {
                    acc.push(v.norm());
                }
            }
        }
        StatsMode::CrossAllShifts => {
            for i in 0..family.len() {
                for j in i + 1..family.len() {
                    let profile = cyclic_cross_correlation(&family[i], &family[j], true)?;
                    for v in profile.values() {
                        acc.push(v.norm());
                    }
                }
            }
        }
    }
    acc.finish()
}

/// Monte-Carlo baseline: draws `trials` independent random +/-1 pairs of
/// the given length and pools normalized cross-correlation magnitudes over
/// all shifts. Seeded, so parallel and repeated runs agree.
pub fn random_pair_cross_stats(
    length: usize,
    trials: usize,
    seed: u64,
) -> Result<CorrelationStats> {
    if length == 0 || trials == 0 {
        return Err(Error::EmptySequence);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = StatsAccumulator::default();
    for _ in 0..trials {
        let x = BinarySequence::random(length, &mut rng)?.to_complex();
        let y = BinarySequence::random(length, &mut rng)?.to_complex();
        let profile = cyclic_cross_correlation(&x, &y, true)?;
        for v in profile.values() {
            acc.push(v.norm());
        }
    }
    acc.finish()
}

/// Monte-Carlo autocorrelation baseline over `trials` independent random
/// +/-1 sequences, pooling non-zero-shift magnitudes.
pub fn random_auto_stats(length: usize, trials: usize, seed: u64) -> Result<CorrelationStats> {
    if length == 0 || trials == 0 {
        return Err(Error::EmptySequence);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = StatsAccumulator::default();
    for _ in 0..trials {
        let x = BinarySequence::random(length, &mut rng)?.to_complex();
        let profile = cyclic_autocorrelation(&x, true);
        for v in &profile.values()[1..] {
            acc.push(v.norm());
        }
    }
    acc.finish()
}
