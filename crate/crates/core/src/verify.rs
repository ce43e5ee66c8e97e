//! Machine-checkable verification reports for the CAZAC property set:
//! constant amplitude, zero autocorrelation, fixed cross-correlation level,
//! and DFT closure, over single sequences, pairs, and whole root families.

use serde::{Deserialize, Serialize};

use crate::correlation::{cyclic_autocorrelation, cyclic_cross_correlation, dft};
use crate::error::Result;
use crate::primes::{is_coprime, is_prime};
use crate::sequence::ComplexSequence;
use crate::zc::{zc_generate, ZcParams};

/// Default tolerance for exact-property checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PropertyId {
    ConstantAmplitude,
    ZeroAutocorrelation,
    FixedCrossCorrelation,
    DftClosure,
}

/// Outcome of one property check. The deviation metric is the infinity
/// norm (worst case over samples or shifts), so `passed` holds exactly
/// when `worst_deviation <= tolerance_used`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property_id: PropertyId,
    pub passed: bool,
    pub worst_deviation: f64,
    /// Shift index (correlation checks) or sample index (amplitude/closure).
    pub worst_location: usize,
    pub tolerance_used: f64,
}

impl PropertyReport {
    fn from_deviation(
        property_id: PropertyId,
        worst_deviation: f64,
        worst_location: usize,
        tolerance_used: f64,
    ) -> Self {
        Self {
            property_id,
            passed: worst_deviation <= tolerance_used,
            worst_deviation,
            worst_location,
            tolerance_used,
        }
    }
}

/// Checks that every sample magnitude is 1:
/// `worst_deviation = max_n | |x[n]| - 1 |`.
pub fn verify_constant_amplitude(x: &ComplexSequence, tol: f64) -> PropertyReport {
    let (loc, dev) = x
        .iter()
        .enumerate()
        .map(|(n, v)| (n, (v.norm() - 1.0).abs()))
        .fold((0, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best });
    PropertyReport::from_deviation(PropertyId::ConstantAmplitude, dev, loc, tol)
}

/// Checks that the normalized autocorrelation vanishes away from zero shift:
/// `worst_deviation = max_{tau != 0} |R[tau]| / N`.
pub fn verify_zero_autocorrelation(x: &ComplexSequence, tol: f64) -> PropertyReport {
    let profile = cyclic_autocorrelation(x, true);
    let (loc, dev) = profile.peak_excluding_zero_shift();
    PropertyReport::from_deviation(PropertyId::ZeroAutocorrelation, dev, loc, tol)
}

/// Checks that the normalized cross-correlation magnitude sits at
/// `1/sqrt(N)` at every shift:
/// `worst_deviation = max_tau | |R[tau]|/N - 1/sqrt(N) |`.
pub fn verify_cross_correlation_level(
    x: &ComplexSequence,
    y: &ComplexSequence,
    tol: f64,
) -> Result<PropertyReport> {
    let profile = cyclic_cross_correlation(x, y, true)?;
    let target = 1.0 / (x.len() as f64).sqrt();
    let (loc, dev) = profile
        .values()
        .iter()
        .enumerate()
        .map(|(tau, v)| (tau, (v.norm() - target).abs()))
        .fold((0, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best });
    Ok(PropertyReport::from_deviation(
        PropertyId::FixedCrossCorrelation,
        dev,
        loc,
        tol,
    ))
}

/// Checks that the unitary DFT of the sequence is itself a (rotated,
/// cyclically shifted) sequence of the same family.
///
/// Passes iff (a) the spectrum has unit amplitude within `tol`, and (b)
/// exhaustive search finds a root, cyclic shift, and unit-modulus constant
/// `c` (fitted from sample 0) whose sequence matches the spectrum
/// elementwise within `tol`. The search covers cyclic shifts because the
/// spectrum of a root generally lands on a shifted member of the family,
/// not the unshifted one.
pub fn verify_dft_closure(params: &ZcParams, tol: f64) -> PropertyReport {
    let spectrum = dft(&zc_generate(params));
    let n = params.length();

    let amplitude = verify_constant_amplitude(&spectrum, tol);
    if !amplitude.passed {
        return PropertyReport::from_deviation(
            PropertyId::DftClosure,
            amplitude.worst_deviation,
            amplitude.worst_location,
            tol,
        );
    }

    let mut best_dev = f64::INFINITY;
    let mut best_loc = 0;
    for root in 1..n {
        let candidate = zc_generate(&ZcParams::new(root, n).expect("valid root"));
        for shift in 0..n {
            let c = spectrum[0] / candidate[shift];
            let mut dev = 0.0;
            let mut loc = 0;
            for k in 0..n {
                let d = (spectrum[k] - c * candidate[(k + shift) % n]).norm();
                if d > dev {
                    dev = d;
                    loc = k;
                    if dev > best_dev {
                        break; // cannot become the best candidate
                    }
                }
            }
            if dev < best_dev {
                best_dev = dev;
                best_loc = loc;
                if best_dev <= tol {
                    return PropertyReport::from_deviation(
                        PropertyId::DftClosure,
                        best_dev,
                        best_loc,
                        tol,
                    );
                }
            }
        }
    }
    PropertyReport::from_deviation(PropertyId::DftClosure, best_dev, best_loc, tol)
}

/// One per-root check inside a family report. `root` is absent for
/// anonymous sequences verified from a file.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootCheck {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    pub report: PropertyReport,
}

/// One per-pair check inside a family report. `coprime_ok` records whether
/// the root difference is coprime to the length, the precondition for the
/// fixed cross-correlation level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairCheck {
    pub roots: (usize, usize),
    pub report: PropertyReport,
    pub coprime_ok: bool,
}

/// Aggregated verification over a set of roots at one length: amplitude and
/// autocorrelation per root, cross-correlation level per unordered pair.
///
/// `prime_length` is a warning flag: non-prime odd lengths are verifiable
/// (reports simply fail where the properties fail), but only prime lengths
/// carry the full guarantees.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub length: usize,
    pub prime_length: bool,
    pub per_root: Vec<RootCheck>,
    pub per_pair: Vec<PairCheck>,
    pub compliant_pair_count: usize,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        self.per_root.iter().all(|c| c.report.passed)
            && self.per_pair.iter().all(|c| c.report.passed)
    }
}

/// Runs the single-sequence and pairwise checks over `roots` at `length`.
///
/// Roots are deduplicated and sorted; pair reports are ordered
/// lexicographically. `compliant_pair_count` counts pairs passing the
/// fixed cross-correlation check.
pub fn verify_family(length: usize, roots: &[usize], tol: f64) -> Result<FamilyReport> {
    let mut roots: Vec<usize> = roots.to_vec();
    roots.sort_unstable();
    roots.dedup();

    let mut sequences = Vec::with_capacity(roots.len());
    for &root in &roots {
        let params = ZcParams::new(root, length)?;
        sequences.push(zc_generate(&params));
    }

    let mut per_root = Vec::with_capacity(2 * roots.len());
    for (&root, seq) in roots.iter().zip(&sequences) {
        per_root.push(RootCheck {
            root: Some(root),
            report: verify_constant_amplitude(seq, tol),
        });
        per_root.push(RootCheck {
            root: Some(root),
            report: verify_zero_autocorrelation(seq, tol),
        });
    }

    let mut per_pair = Vec::new();
    let mut compliant_pair_count = 0;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let report = verify_cross_correlation_level(&sequences[i], &sequences[j], tol)?;
            if report.passed {
                compliant_pair_count += 1;
            }
            per_pair.push(PairCheck {
                roots: (roots[i], roots[j]),
                report,
                coprime_ok: is_coprime(roots[j] - roots[i], length),
            });
        }
    }

    Ok(FamilyReport {
        length,
        prime_length: is_prime(length),
        per_root,
        per_pair,
        compliant_pair_count,
    })
}

/// Amplitude and autocorrelation checks for one sequence outside any root
/// family (e.g. loaded from a file).
pub fn verify_sequence(x: &ComplexSequence, tol: f64) -> FamilyReport {
    let per_root = vec![
        RootCheck {
            root: None,
            report: verify_constant_amplitude(x, tol),
        },
        RootCheck {
            root: None,
            report: verify_zero_autocorrelation(x, tol),
        },
    ];
    FamilyReport {
        length: x.len(),
        prime_length: is_prime(x.len()),
        per_root,
        per_pair: Vec::new(),
        compliant_pair_count: 0,
    }
}
