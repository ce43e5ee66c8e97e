//! Command-line front end: sequence generation, correlation sweeps,
//! verification reports, and code-family comparison.
//!
//! Exit codes: 0 on success (and when all verification checks pass),
//! 1 when a verification check fails, 2 on usage or validation errors.
//! Payload goes to stdout; diagnostics go to stderr.

mod io;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use zcseq_core::{
    cyclic_autocorrelation, cyclic_cross_correlation, family_correlation_stats,
    fft_cyclic_autocorrelation, fft_cyclic_cross_correlation, gold_family, random_auto_stats,
    random_pair_cross_stats, verify_family, verify_sequence, walsh_codes, zc_extended,
    zc_generate, ComplexSequence, CorrelationProfile, ExtensionSpec, LfsrSpec, StatsMode,
    ZcParams,
};

use io::{CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "zcseq",
    version,
    about = "Zadoff-Chu and related spreading sequences: generation, cyclic correlation, CAZAC verification, code comparison"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a sequence and print it as CSV or JSON
    Gen(GenArgs),
    /// Cyclic auto/cross-correlation of sequences or presets
    Corr(CorrArgs),
    /// Verify the constant-amplitude / zero-autocorrelation / fixed
    /// cross-correlation properties and report as JSON
    Verify(VerifyArgs),
    /// Pooled correlation statistics across code families
    Compare(CompareArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
#[command(group(
    ArgGroup::new("target").required(true).args(["length", "extend_to", "truncate_to"])
))]
struct GenArgs {
    /// Root index (validated against the base length)
    #[arg(long)]
    root: usize,

    /// Pure sequence of this odd length
    #[arg(long)]
    length: Option<usize>,

    /// Cyclically extend from the largest prime <= this target length
    #[arg(long, value_name = "N")]
    extend_to: Option<usize>,

    /// Truncate from the smallest prime >= this target length
    #[arg(long, value_name = "N")]
    truncate_to: Option<usize>,

    /// Cyclic shift applied to the generated sequence (any integer)
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    shift: i64,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    /// O(N^2) direct summation (the reference)
    Direct,
    /// FFT-accelerated circular correlation, valid for any length
    Fft,
}

#[derive(Args)]
struct CorrArgs {
    /// Sequence CSV file or inline `preset:<name>:<root>[:<shift>]`
    #[arg(long)]
    input_a: String,

    /// Second input; omitted means autocorrelation of input-a
    #[arg(long)]
    input_b: Option<String>,

    /// Divide correlation values by the sequence length
    #[arg(long)]
    normalized: bool,

    #[arg(long, value_enum, default_value_t = Engine::Direct)]
    engine: Engine,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
#[command(group(
    ArgGroup::new("target").required(true).args(["zc_family", "file"])
))]
struct VerifyArgs {
    /// Verify the root family at this length
    #[arg(long, value_name = "LENGTH")]
    zc_family: Option<usize>,

    /// Roots to include (comma-separated); defaults to every root
    #[arg(long, value_delimiter = ',', requires = "zc_family")]
    roots: Option<Vec<usize>>,

    /// Verify a single sequence read from a CSV file
    #[arg(long)]
    file: Option<String>,

    /// Deviation tolerance for every check
    #[arg(long, default_value_t = zcseq_core::DEFAULT_TOLERANCE)]
    tol: f64,

    /// Verification reports are structured documents; only json is valid
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    /// All roots at the given (odd) length
    Zc,
    /// Seeded iid +/-1 Monte-Carlo baseline
    RandomPn,
    /// Walsh-Hadamard rows (length must be a power of two)
    Walsh,
    /// Gold family from the degree-5 preferred pair (length 31)
    Gold,
}

impl FamilyKind {
    fn name(&self) -> &'static str {
        match self {
            FamilyKind::Zc => "zc",
            FamilyKind::RandomPn => "random-pn",
            FamilyKind::Walsh => "walsh",
            FamilyKind::Gold => "gold",
        }
    }
}

#[derive(Args)]
struct CompareArgs {
    /// Families to compare (comma-separated): zc, random-pn, walsh, gold
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    families: Vec<FamilyKind>,

    /// Sequence length; must be compatible with every requested family
    #[arg(long)]
    length: usize,

    /// Monte-Carlo trial count for the random-pn family
    #[arg(long, default_value_t = 500)]
    trials: usize,

    /// Seed for the random-pn family (reruns are byte-identical)
    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

enum Outcome {
    Success,
    VerificationFailed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Corr(args) => cmd_corr(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Compare(args) => cmd_compare(args),
    }
}

fn cmd_gen(args: GenArgs) -> CliResult<Outcome> {
    let sequence = match (args.length, args.extend_to, args.truncate_to) {
        (Some(length), None, None) => zc_generate(&ZcParams::new(args.root, length)?),
        (None, Some(target), None) => {
            zc_extended(args.root, &ExtensionSpec::cyclic_extend(target)?)?
        }
        (None, None, Some(target)) => zc_extended(args.root, &ExtensionSpec::truncate(target)?)?,
        _ => unreachable!("clap enforces exactly one target"),
    };
    let sequence = if args.shift == 0 {
        sequence
    } else {
        sequence.cyclic_shift(args.shift)
    };
    match args.format {
        Format::Csv => print!("{}", io::sequence_to_csv(&sequence)),
        Format::Json => println!("{}", io::sequence_to_json(&sequence)),
    }
    Ok(Outcome::Success)
}

fn cmd_corr(args: CorrArgs) -> CliResult<Outcome> {
    let a = io::resolve_sequence_input(&args.input_a)?;
    let profile: CorrelationProfile = match (&args.input_b, args.engine) {
        (None, Engine::Direct) => cyclic_autocorrelation(&a, args.normalized),
        (None, Engine::Fft) => fft_cyclic_autocorrelation(&a, args.normalized),
        (Some(b), Engine::Direct) => {
            let b = io::resolve_sequence_input(b)?;
            cyclic_cross_correlation(&a, &b, args.normalized)?
        }
        (Some(b), Engine::Fft) => {
            let b = io::resolve_sequence_input(b)?;
            fft_cyclic_cross_correlation(&a, &b, args.normalized)?
        }
    };
    let engine = match args.engine {
        Engine::Direct => "direct",
        Engine::Fft => "fft",
    };
    match args.format {
        Format::Csv => print!("{}", io::profile_to_csv(&profile)),
        Format::Json => println!("{}", io::profile_to_json(&profile, engine)),
    }
    Ok(Outcome::Success)
}

fn cmd_verify(args: VerifyArgs) -> CliResult<Outcome> {
    if args.format == Format::Csv {
        return Err(CliError::Usage(
            "verification reports are structured documents; use --format json".into(),
        ));
    }
    let report = match (args.zc_family, &args.file) {
        (Some(length), None) => {
            let roots: Vec<usize> = match args.roots {
                Some(roots) => roots,
                None => {
                    if length < 3 {
                        return Err(CliError::Core(zcseq_core::Error::InvalidLength(length)));
                    }
                    (1..length).collect()
                }
            };
            verify_family(length, &roots, args.tol)?
        }
        (None, Some(path)) => {
            let sequence = io::read_sequence_csv(std::path::Path::new(path))?;
            verify_sequence(&sequence, args.tol)
        }
        _ => unreachable!("clap enforces exactly one target"),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    if report.all_passed() {
        Ok(Outcome::Success)
    } else {
        Ok(Outcome::VerificationFailed)
    }
}

/// Full-family sweeps are O(length^4); keep the CLI interactive.
const MAX_COMPARE_FAMILY_LENGTH: usize = 256;

fn cmd_compare(args: CompareArgs) -> CliResult<Outcome> {
    let n = args.length;
    let mut rows = Vec::new();
    for kind in &args.families {
        let (auto, cross) = match kind {
            FamilyKind::Zc => {
                if n > MAX_COMPARE_FAMILY_LENGTH {
                    return Err(CliError::Usage(format!(
                        "zc comparison sweeps every root pair; length is capped at {MAX_COMPARE_FAMILY_LENGTH}"
                    )));
                }
                ZcParams::new(1, n)?; // validates the length
                let family: Vec<ComplexSequence> = (1..n)
                    .map(|q| zc_generate(&ZcParams::new(q, n).expect("valid root")))
                    .collect();
                (
                    family_correlation_stats(&family, StatsMode::AutoNonzeroShift)?,
                    family_correlation_stats(&family, StatsMode::CrossAllShifts)?,
                )
            }
            FamilyKind::RandomPn => (
                random_auto_stats(n, args.trials, args.seed)?,
                random_pair_cross_stats(n, args.trials, args.seed.wrapping_add(1))?,
            ),
            FamilyKind::Walsh => {
                if n > MAX_COMPARE_FAMILY_LENGTH {
                    return Err(CliError::Usage(format!(
                        "walsh comparison sweeps every row pair; length is capped at {MAX_COMPARE_FAMILY_LENGTH}"
                    )));
                }
                let family: Vec<ComplexSequence> = walsh_codes(n)?
                    .iter()
                    .map(|code| code.to_complex())
                    .collect();
                (
                    family_correlation_stats(&family, StatsMode::AutoNonzeroShift)?,
                    family_correlation_stats(&family, StatsMode::CrossAllShifts)?,
                )
            }
            FamilyKind::Gold => {
                if n != 31 {
                    return Err(CliError::Usage(format!(
                        "gold comparison uses the degree-5 preferred pair and supports length 31, not {n}"
                    )));
                }
                let (a, b) = LfsrSpec::degree5_preferred_pair();
                let family: Vec<ComplexSequence> = gold_family(&a, &b)?
                    .iter()
                    .map(|code| code.to_complex())
                    .collect();
                (
                    family_correlation_stats(&family, StatsMode::AutoNonzeroShift)?,
                    family_correlation_stats(&family, StatsMode::CrossAllShifts)?,
                )
            }
        };
        rows.push(io::ComparisonRow {
            family: kind.name().to_string(),
            mode: "auto-nonzero-shift".to_string(),
            stats: auto,
        });
        rows.push(io::ComparisonRow {
            family: kind.name().to_string(),
            mode: "cross-all-shifts".to_string(),
            stats: cross,
        });
    }
    let doc = io::ComparisonDoc {
        length: n,
        trials: args.trials,
        seed: args.seed,
        families: rows,
    };
    match args.format {
        Format::Csv => print!("{}", io::comparison_to_csv(&doc)),
        Format::Json => println!("{}", io::comparison_to_json(&doc)),
    }
    Ok(Outcome::Success)
}
