//! Python bindings: the sequence generators, correlation engines,
//! verification reports, comparison codes, and presets, exposed as plain
//! functions. Complex samples cross the boundary as Python `complex`
//! values; reports and statistics come back as dicts.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use zcseq_core as core;
use zcseq_core::{ComplexSequence, ExtensionSpec, LfsrSpec, PresetId, ZcParams};

fn value_error(err: core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn sequence(samples: Vec<Complex64>) -> PyResult<ComplexSequence> {
    ComplexSequence::new(samples).map_err(value_error)
}

fn extension_spec(target_length: usize, method: &str) -> PyResult<ExtensionSpec> {
    match method {
        "cyclic-extend" => ExtensionSpec::cyclic_extend(target_length).map_err(value_error),
        "truncate" => ExtensionSpec::truncate(target_length).map_err(value_error),
        other => Err(PyValueError::new_err(format!(
            "unknown extension method {other:?} (expected \"cyclic-extend\" or \"truncate\")"
        ))),
    }
}

fn samples_out(seq: ComplexSequence) -> Vec<Complex64> {
    seq.samples().to_vec()
}

fn property_report_dict<'py>(
    py: Python<'py>,
    report: &core::PropertyReport,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("property_id", format!("{:?}", report.property_id))?;
    d.set_item("passed", report.passed)?;
    d.set_item("worst_deviation", report.worst_deviation)?;
    d.set_item("worst_location", report.worst_location)?;
    d.set_item("tolerance_used", report.tolerance_used)?;
    Ok(d)
}

fn family_report_dict<'py>(
    py: Python<'py>,
    report: &core::FamilyReport,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("length", report.length)?;
    d.set_item("prime_length", report.prime_length)?;
    let per_root = PyList::empty(py);
    for check in &report.per_root {
        let entry = PyDict::new(py);
        entry.set_item("root", check.root)?;
        entry.set_item("report", property_report_dict(py, &check.report)?)?;
        per_root.append(entry)?;
    }
    d.set_item("per_root", per_root)?;
    let per_pair = PyList::empty(py);
    for check in &report.per_pair {
        let entry = PyDict::new(py);
        entry.set_item("roots", check.roots)?;
        entry.set_item("report", property_report_dict(py, &check.report)?)?;
        entry.set_item("coprime_ok", check.coprime_ok)?;
        per_pair.append(entry)?;
    }
    d.set_item("per_pair", per_pair)?;
    d.set_item("compliant_pair_count", report.compliant_pair_count)?;
    d.set_item("all_passed", report.all_passed())?;
    Ok(d)
}

fn stats_dict<'py>(
    py: Python<'py>,
    stats: &core::CorrelationStats,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("mean_abs", stats.mean_abs)?;
    d.set_item("mean_square", stats.mean_square)?;
    d.set_item("max_abs", stats.max_abs)?;
    d.set_item("sample_count", stats.sample_count)?;
    Ok(d)
}

/// Pure sequence: samples exp(-j*pi*root*n*(n+1)/length).
#[pyfunction]
fn zc_generate(root: usize, length: usize) -> PyResult<Vec<Complex64>> {
    let params = ZcParams::new(root, length).map_err(value_error)?;
    Ok(samples_out(core::zc_generate(&params)))
}

/// Exact reduced phase numerators: sample n has phase pi*k[n]/length.
#[pyfunction]
fn zc_phase_numerators(root: usize, length: usize) -> PyResult<Vec<i64>> {
    let params = ZcParams::new(root, length).map_err(value_error)?;
    Ok(core::zc_phase_numerators(&params))
}

/// Root of the elementwise complex-conjugate sequence: length - root.
#[pyfunction]
fn conjugate_root(root: usize, length: usize) -> PyResult<usize> {
    let params = ZcParams::new(root, length).map_err(value_error)?;
    Ok(params.conjugate_root().root())
}

/// Arbitrary-length sequence built from a prime base; method is
/// "cyclic-extend" or "truncate".
#[pyfunction]
#[pyo3(signature = (root, target_length, method="cyclic-extend"))]
fn zc_extended(root: usize, target_length: usize, method: &str) -> PyResult<Vec<Complex64>> {
    let spec = extension_spec(target_length, method)?;
    Ok(samples_out(
        core::zc_extended(root, &spec).map_err(value_error)?,
    ))
}

/// Phase numerators of an extended sequence, over the derived base length.
#[pyfunction]
#[pyo3(signature = (root, target_length, method="cyclic-extend"))]
fn zc_extended_phase_numerators(
    root: usize,
    target_length: usize,
    method: &str,
) -> PyResult<Vec<i64>> {
    let spec = extension_spec(target_length, method)?;
    core::zc_extended_phase_numerators(root, &spec).map_err(value_error)
}

/// Prime base length an extension/truncation to `target_length` is built on.
#[pyfunction]
#[pyo3(signature = (target_length, method="cyclic-extend"))]
fn extension_base_length(target_length: usize, method: &str) -> PyResult<usize> {
    Ok(extension_spec(target_length, method)?.base_length())
}

#[pyfunction]
fn cyclic_shift(samples: Vec<Complex64>, m: i64) -> PyResult<Vec<Complex64>> {
    Ok(samples_out(sequence(samples)?.cyclic_shift(m)))
}

#[pyfunction]
fn is_prime(n: usize) -> bool {
    core::is_prime(n)
}

#[pyfunction]
fn largest_prime_leq(n: usize) -> PyResult<usize> {
    core::largest_prime_leq(n).map_err(value_error)
}

#[pyfunction]
fn smallest_prime_geq(n: usize) -> usize {
    core::smallest_prime_geq(n)
}

#[pyfunction]
fn is_coprime(a: usize, b: usize) -> bool {
    core::is_coprime(a, b)
}

/// Direct-sum cyclic autocorrelation values per shift.
#[pyfunction]
#[pyo3(signature = (samples, normalized=true))]
fn cyclic_autocorrelation(samples: Vec<Complex64>, normalized: bool) -> PyResult<Vec<Complex64>> {
    let x = sequence(samples)?;
    Ok(core::cyclic_autocorrelation(&x, normalized).values().to_vec())
}

/// Direct-sum cyclic cross-correlation; the first argument is conjugated.
#[pyfunction]
#[pyo3(signature = (a, b, normalized=true))]
fn cyclic_cross_correlation(
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    normalized: bool,
) -> PyResult<Vec<Complex64>> {
    let x = sequence(a)?;
    let y = sequence(b)?;
    Ok(core::cyclic_cross_correlation(&x, &y, normalized)
        .map_err(value_error)?
        .values()
        .to_vec())
}

/// FFT-accelerated cyclic cross-correlation (valid for any length).
#[pyfunction]
#[pyo3(signature = (a, b, normalized=true))]
fn fft_cyclic_cross_correlation(
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    normalized: bool,
) -> PyResult<Vec<Complex64>> {
    let x = sequence(a)?;
    let y = sequence(b)?;
    Ok(core::fft_cyclic_cross_correlation(&x, &y, normalized)
        .map_err(value_error)?
        .values()
        .to_vec())
}

/// Unitary DFT (scaled by 1/sqrt(N) so energy is preserved).
#[pyfunction]
fn dft(samples: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
    Ok(samples_out(core::dft(&sequence(samples)?)))
}

/// Unitary inverse DFT.
#[pyfunction]
fn idft(samples: Vec<Complex64>) -> PyResult<Vec<Complex64>> {
    Ok(samples_out(core::idft(&sequence(samples)?)))
}

/// Peak-to-average power ratio (1.0 for constant-amplitude sequences).
#[pyfunction]
fn papr(samples: Vec<Complex64>) -> PyResult<f64> {
    core::papr(&sequence(samples)?).map_err(value_error)
}

/// Multiplies sample n by exp(j*2*pi*epsilon*n).
#[pyfunction]
fn apply_frequency_offset(samples: Vec<Complex64>, epsilon: f64) -> PyResult<Vec<Complex64>> {
    Ok(samples_out(core::apply_frequency_offset(
        &sequence(samples)?,
        epsilon,
    )))
}

#[pyfunction]
#[pyo3(signature = (samples, tol=core::DEFAULT_TOLERANCE))]
fn verify_constant_amplitude<'py>(
    py: Python<'py>,
    samples: Vec<Complex64>,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let report = core::verify_constant_amplitude(&sequence(samples)?, tol);
    property_report_dict(py, &report)
}

#[pyfunction]
#[pyo3(signature = (samples, tol=core::DEFAULT_TOLERANCE))]
fn verify_zero_autocorrelation<'py>(
    py: Python<'py>,
    samples: Vec<Complex64>,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let report = core::verify_zero_autocorrelation(&sequence(samples)?, tol);
    property_report_dict(py, &report)
}

#[pyfunction]
#[pyo3(signature = (a, b, tol=core::DEFAULT_TOLERANCE))]
fn verify_cross_correlation_level<'py>(
    py: Python<'py>,
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let report = core::verify_cross_correlation_level(&sequence(a)?, &sequence(b)?, tol)
        .map_err(value_error)?;
    property_report_dict(py, &report)
}

#[pyfunction]
#[pyo3(signature = (root, length, tol=core::DEFAULT_TOLERANCE))]
fn verify_dft_closure<'py>(
    py: Python<'py>,
    root: usize,
    length: usize,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let params = ZcParams::new(root, length).map_err(value_error)?;
    let report = core::verify_dft_closure(&params, tol);
    property_report_dict(py, &report)
}

/// Family verification; `roots` defaults to every root at the length.
#[pyfunction]
#[pyo3(signature = (length, roots=None, tol=core::DEFAULT_TOLERANCE))]
fn verify_family<'py>(
    py: Python<'py>,
    length: usize,
    roots: Option<Vec<usize>>,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let roots = match roots {
        Some(r) => r,
        None => {
            if length < 3 {
                return Err(value_error(core::Error::InvalidLength(length)));
            }
            (1..length).collect()
        }
    };
    let report = core::verify_family(length, &roots, tol).map_err(value_error)?;
    family_report_dict(py, &report)
}

/// Maximal LFSR sequence as +/-1 chips. `taps` are polynomial exponents
/// with the constant term implicit, e.g. [3, 1] for x^3 + x + 1.
#[pyfunction]
#[pyo3(signature = (taps, initial_state=None))]
fn m_sequence(taps: Vec<usize>, initial_state: Option<Vec<bool>>) -> PyResult<Vec<i8>> {
    let spec = match initial_state {
        Some(state) => LfsrSpec::new(taps, state),
        None => LfsrSpec::with_all_ones_seed(taps),
    }
    .map_err(value_error)?;
    Ok(core::m_sequence(&spec).map_err(value_error)?.chips().to_vec())
}

/// Chipwise product of two maximal sequences, the second cyclically shifted.
#[pyfunction]
#[pyo3(signature = (taps_a, taps_b, shift=0))]
fn gold_code(taps_a: Vec<usize>, taps_b: Vec<usize>, shift: i64) -> PyResult<Vec<i8>> {
    let a = LfsrSpec::with_all_ones_seed(taps_a).map_err(value_error)?;
    let b = LfsrSpec::with_all_ones_seed(taps_b).map_err(value_error)?;
    Ok(core::gold_code(&a, &b, shift)
        .map_err(value_error)?
        .chips()
        .to_vec())
}

/// Rows of the Sylvester Hadamard matrix (order must be a power of two).
#[pyfunction]
fn walsh_codes(order: usize) -> PyResult<Vec<Vec<i8>>> {
    Ok(core::walsh_codes(order)
        .map_err(value_error)?
        .into_iter()
        .map(|row| row.chips().to_vec())
        .collect())
}

/// Named standards parameterization: name is one of "pss", "prach-long",
/// "prach-short", "pucch", "srs".
#[pyfunction]
#[pyo3(signature = (name, root, shift=0))]
fn preset_sequence(name: &str, root: usize, shift: i64) -> PyResult<Vec<Complex64>> {
    let preset_name: core::PresetName = name.parse().map_err(value_error)?;
    let id = PresetId::with_shift(preset_name, root, shift).map_err(value_error)?;
    Ok(samples_out(core::preset_sequence(&id)))
}

/// Cyclic-shift preamble family; variant is "long" (839) or "short" (139).
#[pyfunction]
#[pyo3(signature = (root, variant, shift_step))]
fn prach_shift_family(
    root: usize,
    variant: &str,
    shift_step: usize,
) -> PyResult<Vec<Vec<Complex64>>> {
    let variant = match variant {
        "long" => core::PrachVariant::Long,
        "short" => core::PrachVariant::Short,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown variant {other:?} (expected \"long\" or \"short\")"
            )))
        }
    };
    Ok(core::prach_shift_family(root, variant, shift_step)
        .map_err(value_error)?
        .into_iter()
        .map(samples_out)
        .collect())
}

/// Pooled correlation statistics over a family; mode is
/// "auto-nonzero-shift" or "cross-all-shifts".
#[pyfunction]
fn family_correlation_stats<'py>(
    py: Python<'py>,
    family: Vec<Vec<Complex64>>,
    mode: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let mode = match mode {
        "auto-nonzero-shift" => core::StatsMode::AutoNonzeroShift,
        "cross-all-shifts" => core::StatsMode::CrossAllShifts,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown mode {other:?} (expected \"auto-nonzero-shift\" or \"cross-all-shifts\")"
            )))
        }
    };
    let family: Vec<ComplexSequence> = family
        .into_iter()
        .map(sequence)
        .collect::<PyResult<_>>()?;
    let stats = core::family_correlation_stats(&family, mode).map_err(value_error)?;
    stats_dict(py, &stats)
}

/// Seeded Monte-Carlo cross-correlation statistics over random +/-1 pairs.
#[pyfunction]
fn random_pair_cross_stats<'py>(
    py: Python<'py>,
    length: usize,
    trials: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let stats = core::random_pair_cross_stats(length, trials, seed).map_err(value_error)?;
    stats_dict(py, &stats)
}

#[pymodule]
fn zcseq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(zc_generate, m)?)?;
    m.add_function(wrap_pyfunction!(zc_phase_numerators, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate_root, m)?)?;
    m.add_function(wrap_pyfunction!(zc_extended, m)?)?;
    m.add_function(wrap_pyfunction!(zc_extended_phase_numerators, m)?)?;
    m.add_function(wrap_pyfunction!(extension_base_length, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_shift, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(largest_prime_leq, m)?)?;
    m.add_function(wrap_pyfunction!(smallest_prime_geq, m)?)?;
    m.add_function(wrap_pyfunction!(is_coprime, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_autocorrelation, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_cross_correlation, m)?)?;
    m.add_function(wrap_pyfunction!(fft_cyclic_cross_correlation, m)?)?;
    m.add_function(wrap_pyfunction!(dft, m)?)?;
    m.add_function(wrap_pyfunction!(idft, m)?)?;
    m.add_function(wrap_pyfunction!(papr, m)?)?;
    m.add_function(wrap_pyfunction!(apply_frequency_offset, m)?)?;
    m.add_function(wrap_pyfunction!(verify_constant_amplitude, m)?)?;
    m.add_function(wrap_pyfunction!(verify_zero_autocorrelation, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cross_correlation_level, m)?)?;
    m.add_function(wrap_pyfunction!(verify_dft_closure, m)?)?;
    m.add_function(wrap_pyfunction!(verify_family, m)?)?;
    m.add_function(wrap_pyfunction!(m_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(gold_code, m)?)?;
    m.add_function(wrap_pyfunction!(walsh_codes, m)?)?;
    m.add_function(wrap_pyfunction!(preset_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(prach_shift_family, m)?)?;
    m.add_function(wrap_pyfunction!(family_correlation_stats, m)?)?;
    m.add_function(wrap_pyfunction!(random_pair_cross_stats, m)?)?;
    Ok(())
}
