//! Acceptance suite: one test per criterion, each printing its own
//! pass/fail line through the harness. Tolerances are pinned in the
//! assertions; expected values come from hand evaluation, exhaustive or
//! brute-force oracles, and frozen regression points.

use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zcseq_core::{
    cyclic_autocorrelation, cyclic_cross_correlation, fft_cyclic_cross_correlation,
    is_prime, m_sequence, papr, preset_sequence, random_pair_cross_stats, verify_dft_closure,
    walsh_codes, zc_extended, zc_extended_phase_numerators, zc_generate, ComplexSequence,
    ExtensionSpec, LfsrSpec, PresetId, PresetName, ZcParams,
};

fn params(root: usize, length: usize) -> ZcParams {
    ZcParams::new(root, length).unwrap()
}

fn unit(phase: f64) -> Complex64 {
    Complex64::from_polar(1.0, phase)
}

#[test]
fn criterion_01_length5_golden_vectors_and_shift2_orthogonality() {
    let started = Instant::now();

    let s1 = zc_generate(&params(1, 5));
    let s4 = zc_generate(&params(4, 5));
    let shifted = s1.cyclic_shift(2);
    let inner: Complex64 = s1
        .iter()
        .zip(shifted.iter())
        .map(|(a, b)| a.conj() * b)
        .sum();

    let elapsed = started.elapsed();

    let fifth = 2.0 * PI / 5.0;
    let expected_s1 = [
        unit(0.0),
        unit(-fifth),
        unit(-3.0 * fifth),
        unit(-fifth),
        unit(0.0),
    ];
    let expected_s4 = [
        unit(0.0),
        unit(fifth),
        unit(-2.0 * fifth),
        unit(fifth),
        unit(0.0),
    ];
    for n in 0..5 {
        assert!((s1[n] - expected_s1[n]).norm() < 1e-12, "s1[{n}]");
        assert!((s4[n] - expected_s4[n]).norm() < 1e-12, "s4[{n}]");
    }

    assert!(inner.re.abs() < 1e-12, "inner product re: {}", inner.re);
    assert!(inner.im.abs() < 1e-12, "inner product im: {}", inner.im);

    assert!(
        elapsed.as_secs_f64() < 1e-3,
        "runtime {:?} exceeds 1 ms",
        elapsed
    );
    println!("criterion 01: length-5 golden vectors + shift-2 orthogonality: PASS");
}

#[test]
fn criterion_02_length5_cross_correlation_level() {
    let s1 = zc_generate(&params(1, 5));
    let s4 = zc_generate(&params(4, 5));

    let started = Instant::now();
    let profile = cyclic_cross_correlation(&s1, &s4, true).unwrap();
    let elapsed = started.elapsed();

    assert_eq!(profile.len(), 5);
    for (tau, v) in profile.values().iter().enumerate() {
        assert!(
            (v.norm() - 0.4472).abs() < 5e-5,
            "shift {tau}: |R| = {}",
            v.norm()
        );
    }

    assert!(
        elapsed.as_secs_f64() < 1e-3,
        "runtime {:?} exceeds 1 ms",
        elapsed
    );
    println!("criterion 02: length-5 cross-correlation level 0.4472: PASS");
}

#[test]
fn criterion_03_length12_golden_phase_numerators() {
    let spec = ExtensionSpec::cyclic_extend(12).unwrap();
    assert_eq!(spec.base_length(), 11);

    let k1 = zc_extended_phase_numerators(1, &spec).unwrap();
    assert_eq!(k1, vec![0, -2, -6, 10, 2, -8, 2, 10, -6, -2, 0, 0]);

    let k4 = zc_extended_phase_numerators(4, &spec).unwrap();
    assert_eq!(k4, vec![0, -8, -2, -4, 8, -10, 8, -4, -2, -8, 0, 0]);

    // the generated samples realize exactly these numerators over pi/11
    for (root, numerators) in [(1usize, &k1), (4usize, &k4)] {
        let z = zc_extended(root, &spec).unwrap();
        for (n, &k) in numerators.iter().enumerate() {
            let expected = unit(PI * k as f64 / 11.0);
            assert!((z[n] - expected).norm() < 1e-12, "root {root}, sample {n}");
        }
    }
    println!("criterion 03: length-12 golden phase numerators: PASS");
}

#[test]
fn criterion_04_length12_autocorrelation_profiles() {
    let spec = ExtensionSpec::cyclic_extend(12).unwrap();
    let z1 = zc_extended(1, &spec).unwrap();
    let z4 = zc_extended(4, &spec).unwrap();

    let r1 = cyclic_autocorrelation(&z1, true);
    let r4 = cyclic_autocorrelation(&z4, true);

    for tau in [1usize, 2, 10, 11] {
        for (root, r) in [(1, &r1), (4, &r4)] {
            let mag = r.values()[tau].norm();
            assert!(
                (mag - 1.0 / 12.0).abs() < 1e-9,
                "root {root}, shift {tau}: {mag}"
            );
        }
    }

    assert_ne!(r1.values(), r4.values(), "profiles must differ");

    let (_, worst1) = r1.peak_excluding_zero_shift();
    let (_, worst4) = r4.peak_excluding_zero_shift();
    assert!(
        worst4 > worst1,
        "expected the root-4 profile to be strictly worse: {worst4} vs {worst1}"
    );
    println!("criterion 04: length-12 autocorrelation profiles (1/12 shifts, root 4 worse): PASS");
}

#[test]
fn criterion_05_zero_autocorrelation_sweep_all_primes_to_199() {
    let started = Instant::now();
    let mut checked = 0usize;
    for n in (3usize..=199).filter(|&n| is_prime(n)) {
        for root in 1..n {
            let seq = zc_generate(&params(root, n));
            let profile = cyclic_autocorrelation(&seq, true);
            let (tau, worst) = profile.peak_excluding_zero_shift();
            assert!(worst < 1e-9, "(q={root}, N={n}) shift {tau}: {worst}");
            checked += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(checked > 4000, "sweep covered {checked} sequences");
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "direct-engine sweep took {:?}, budget is 10 s",
        elapsed
    );
    println!(
        "criterion 05: zero-autocorrelation sweep over {checked} prime-length sequences in {:.2} s: PASS",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_06_flat_cross_correlation_sweep() {
    for &n in &[5usize, 7, 11, 13, 31, 61] {
        let sequences: Vec<ComplexSequence> =
            (1..n).map(|q| zc_generate(&params(q, n))).collect();
        let level = 1.0 / (n as f64).sqrt();
        for i in 0..sequences.len() {
            for j in i + 1..sequences.len() {
                let normalized =
                    cyclic_cross_correlation(&sequences[i], &sequences[j], true).unwrap();
                for (tau, v) in normalized.values().iter().enumerate() {
                    assert!(
                        (v.norm() - level).abs() < 1e-9,
                        "N={n} pair ({},{}) shift {tau}: {}",
                        i + 1,
                        j + 1,
                        v.norm()
                    );
                }
                let raw = cyclic_cross_correlation(&sequences[i], &sequences[j], false).unwrap();
                for (tau, v) in raw.values().iter().enumerate() {
                    assert!(
                        (v.norm() - (n as f64).sqrt()).abs() < 1e-6,
                        "N={n} pair ({},{}) shift {tau} raw",
                        i + 1,
                        j + 1
                    );
                }
            }
        }
    }
    println!("criterion 06: fixed cross-correlation level over prime families: PASS");
}

#[test]
fn criterion_07_length63_coprimality_boundary() {
    let level = 1.0 / 63f64.sqrt();
    let s25 = zc_generate(&params(25, 63));
    let s29 = zc_generate(&params(29, 63));
    let s34 = zc_generate(&params(34, 63));

    // |34 - 25| = 9 shares the factor 9 with 63: the level breaks
    let bad = cyclic_cross_correlation(&s34, &s25, true).unwrap();
    let worst = bad
        .values()
        .iter()
        .map(|v| (v.norm() - level).abs())
        .fold(0.0, f64::max);
    assert!(worst > 1e-3, "expected a broken level, worst dev {worst}");

    // |29 - 34| = 5 and |29 - 25| = 4 are coprime to 63: the level holds
    for (a, b) in [(&s29, &s34), (&s29, &s25)] {
        let good = cyclic_cross_correlation(a, b, true).unwrap();
        for (tau, v) in good.values().iter().enumerate() {
            assert!((v.norm() - level).abs() < 1e-9, "shift {tau}: {}", v.norm());
        }
    }
    println!("criterion 07: length-63 coprimality boundary pair (34,25): PASS");
}

#[test]
fn criterion_08_pss_conjugate_root_pair() {
    let a = preset_sequence(&PresetId::new(PresetName::LtePss, 29).unwrap());
    let b = preset_sequence(&PresetId::new(PresetName::LtePss, 34).unwrap());
    let diff = a.max_abs_diff(&b.conjugate()).unwrap();
    assert!(diff < 1e-12, "max elementwise difference {diff}");
    println!("criterion 08: PSS root 29 conjugate of root 34: PASS");
}

#[test]
fn criterion_09_dft_closure_search() {
    for &n in &[5usize, 7, 11, 13] {
        for root in 1..n {
            let report = verify_dft_closure(&params(root, n), 1e-9);
            assert!(
                report.passed,
                "(q={root}, N={n}): worst deviation {}",
                report.worst_deviation
            );
        }
    }
    println!("criterion 09: DFT closure search over N in {{5,7,11,13}}: PASS");
}

#[test]
fn criterion_10_fft_engine_oracle_equivalence_and_speed() {
    let lengths = [5usize, 11, 12, 63, 139, 839];
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut random_sequence = |n: usize| -> ComplexSequence {
        ComplexSequence::new(
            (0..n)
                .map(|_| {
                    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
                })
                .collect(),
        )
        .unwrap()
    };

    for case in 0..200 {
        let n = lengths[case % lengths.len()];
        let x = random_sequence(n);
        let y = random_sequence(n);
        let direct = cyclic_cross_correlation(&x, &y, true).unwrap();
        let fast = fft_cyclic_cross_correlation(&x, &y, true).unwrap();
        for (tau, (a, b)) in direct.values().iter().zip(fast.values()).enumerate() {
            let diff = (a - b).norm();
            assert!(diff < 1e-9, "case {case}, N={n}, shift {tau}: {diff}");
        }
    }

    // speed at the long-preamble length, same pair for both engines
    let x = zc_generate(&params(129, 839));
    let y = zc_generate(&params(201, 839));
    let reps = 10;
    // warm both paths (FFT planning is cached thereafter)
    let _ = cyclic_cross_correlation(&x, &y, true).unwrap();
    let _ = fft_cyclic_cross_correlation(&x, &y, true).unwrap();

    let t0 = Instant::now();
    for _ in 0..reps {
        std::hint::black_box(cyclic_cross_correlation(&x, &y, true).unwrap());
    }
    let direct_time = t0.elapsed();

    let t1 = Instant::now();
    for _ in 0..reps {
        std::hint::black_box(fft_cyclic_cross_correlation(&x, &y, true).unwrap());
    }
    let fft_time = t1.elapsed();

    let speedup = direct_time.as_secs_f64() / fft_time.as_secs_f64();
    assert!(
        speedup >= 5.0,
        "FFT engine speedup {speedup:.1}x at N=839 (direct {direct_time:?}, fft {fft_time:?})"
    );
    println!(
        "criterion 10: FFT/direct equivalence over 200 pairs, {speedup:.0}x speedup at N=839: PASS"
    );
}

#[test]
fn criterion_11_m_sequence_period_balance_autocorrelation() {
    let (deg5a, _) = LfsrSpec::degree5_preferred_pair();
    for spec in [LfsrSpec::degree3(), deg5a, LfsrSpec::degree7()] {
        let m = spec.degree();
        let n = (1usize << m) - 1;
        let seq = m_sequence(&spec).unwrap();
        assert_eq!(seq.len(), n, "degree {m} period");

        let minus = seq.chips().iter().filter(|&&c| c == -1).count();
        let plus = seq.len() - minus;
        assert_eq!(minus, 1 << (m - 1), "degree {m} balance");
        assert_eq!(plus, (1 << (m - 1)) - 1, "degree {m} balance");

        let profile = cyclic_autocorrelation(&seq.to_complex(), true);
        let expected = -1.0 / n as f64;
        for (tau, v) in profile.values().iter().enumerate().skip(1) {
            assert_eq!(v.re, expected, "degree {m} shift {tau}");
            assert_eq!(v.im, 0.0, "degree {m} shift {tau} imaginary part");
        }
    }
    println!("criterion 11: m-sequence period/balance/two-valued autocorrelation: PASS");
}

#[test]
fn criterion_12_family_comparison_statistics() {
    // full root family at N=31: the worst cross-correlation equals the level
    let n = 31usize;
    let family: Vec<ComplexSequence> = (1..n).map(|q| zc_generate(&params(q, n))).collect();
    let mut max_abs = 0.0f64;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let profile = cyclic_cross_correlation(&family[i], &family[j], true).unwrap();
            for v in profile.values() {
                max_abs = max_abs.max(v.norm());
            }
        }
    }
    let level = 1.0 / (n as f64).sqrt();
    assert!((max_abs - level).abs() < 1e-9, "zc max_abs {max_abs}");

    // seeded Monte-Carlo baseline: mean square within 20% of 1/N
    let stats = random_pair_cross_stats(31, 500, 7).unwrap();
    let expected = 1.0 / 31.0;
    assert!(
        (stats.mean_square - expected).abs() < 0.2 * expected,
        "random-pn mean_square {} vs {expected}",
        stats.mean_square
    );

    // Walsh order 8: some shifted autocorrelation value is exactly 1
    let rows = walsh_codes(8).unwrap();
    let mut hit_one = false;
    for row in &rows {
        let profile = cyclic_autocorrelation(&row.to_complex(), true);
        for v in &profile.values()[1..] {
            if v.norm() == 1.0 {
                hit_one = true;
            }
        }
    }
    assert!(hit_one, "no Walsh row reached a shifted autocorrelation of 1");
    println!("criterion 12: zc/random-pn/walsh comparison statistics: PASS");
}

#[test]
fn criterion_13_papr_is_one_for_every_preset() {
    let ids = [
        PresetId::new(PresetName::LtePss, 25).unwrap(),
        PresetId::new(PresetName::LtePss, 29).unwrap(),
        PresetId::new(PresetName::LtePss, 34).unwrap(),
        PresetId::new(PresetName::PrachLong, 1).unwrap(),
        PresetId::new(PresetName::PrachLong, 838).unwrap(),
        PresetId::new(PresetName::PrachShort, 1).unwrap(),
        PresetId::new(PresetName::PrachShort, 138).unwrap(),
        PresetId::new(PresetName::PucchBase, 1).unwrap(),
        PresetId::new(PresetName::PucchBase, 10).unwrap(),
        PresetId::new(PresetName::SrsBase, 1).unwrap(),
        PresetId::new(PresetName::SrsBase, 30).unwrap(),
    ];
    for id in &ids {
        let value = papr(&preset_sequence(id)).unwrap();
        assert!((value - 1.0).abs() < 1e-12, "{id}: PAPR {value}");
    }
    println!("criterion 13: unit PAPR for every preset: PASS");
}

#[test]
fn criterion_14_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_zcseq");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs")
    };

    // exit code 0: success
    let ok = run(&["gen", "--root", "1", "--length", "5"]);
    assert_eq!(ok.status.code(), Some(0));

    // exit code 1: verification failure (payload still emitted)
    let fail = run(&["verify", "--zc-family", "63", "--roots", "25,29,34"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(!fail.stdout.is_empty());

    // exit code 2: usage/validation error, diagnostics on stderr
    let usage = run(&["gen", "--root", "1", "--length", "4"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(usage.stdout.is_empty());
    assert!(!usage.stderr.is_empty());

    // byte-identical reruns under a fixed seed
    let args = [
        "compare", "--families", "random-pn", "--length", "31", "--trials", "100", "--seed",
        "42",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    // CSV round trip: profile computed from a re-read sequence matches the
    // in-memory pipeline within 1e-12
    let mut path = std::env::temp_dir();
    path.push(format!("zcseq-acceptance-{}.csv", std::process::id()));
    let gen = run(&["gen", "--root", "7", "--length", "139"]);
    std::fs::write(&path, &gen.stdout).unwrap();
    let corr = run(&["corr", "--input-a", path.to_str().unwrap(), "--normalized"]);
    assert_eq!(corr.status.code(), Some(0));

    let expected = cyclic_autocorrelation(&zc_generate(&params(7, 139)), true);
    let text = String::from_utf8(corr.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("shift,re,im,mag"));
    let mut rows = 0;
    for (tau, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        let re: f64 = fields[1].parse().unwrap();
        let im: f64 = fields[2].parse().unwrap();
        let v = expected.values()[tau];
        assert!((v.re - re).abs() < 1e-12 && (v.im - im).abs() < 1e-12, "shift {tau}");
        rows += 1;
    }
    assert_eq!(rows, 139);
    std::fs::remove_file(&path).ok();

    println!("criterion 14: CLI exit codes, determinism, CSV round trip: PASS");
}
