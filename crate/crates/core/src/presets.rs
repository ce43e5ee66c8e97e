//! Named constructors for the LTE/5G sequence parameterizations, so the
//! standards-cited vectors are one call away.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::ComplexSequence;
use crate::zc::{zc_extended, zc_generate, ExtensionSpec, ZcParams};

/// LTE PSS root indices, one per sector.
pub const LTE_PSS_ROOTS: [usize; 3] = [25, 29, 34];
/// LTE PSS sequence length (odd but not prime).
pub const LTE_PSS_LENGTH: usize = 63;
/// Random-access preamble lengths.
pub const PRACH_LONG_LENGTH: usize = 839;
pub const PRACH_SHORT_LENGTH: usize = 139;
/// Uplink control / sounding target lengths reached by cyclic extension.
pub const PUCCH_TARGET_LENGTH: usize = 12;
pub const SRS_TARGET_LENGTH: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PresetName {
    /// Downlink primary synchronization, length 63, roots 25/29/34.
    LtePss,
    /// Long random-access preamble, length 839.
    PrachLong,
    /// Short random-access preamble, length 139.
    PrachShort,
    /// Uplink control base sequence, length 12 extended from 11.
    PucchBase,
    /// Sounding reference base sequence, length 36 extended from 31.
    SrsBase,
}

impl PresetName {
    pub fn all() -> [PresetName; 5] {
        [
            PresetName::LtePss,
            PresetName::PrachLong,
            PresetName::PrachShort,
            PresetName::PucchBase,
            PresetName::SrsBase,
        ]
    }

    fn valid_root(&self, root: usize) -> bool {
        match self {
            PresetName::LtePss => LTE_PSS_ROOTS.contains(&root),
            PresetName::PrachLong => (1..PRACH_LONG_LENGTH).contains(&root),
            PresetName::PrachShort => (1..PRACH_SHORT_LENGTH).contains(&root),
            PresetName::PucchBase => (1..=10).contains(&root),
            PresetName::SrsBase => (1..=30).contains(&root),
        }
    }

    /// Output length of the preset sequence.
    pub fn sequence_length(&self) -> usize {
        match self {
            PresetName::LtePss => LTE_PSS_LENGTH,
            PresetName::PrachLong => PRACH_LONG_LENGTH,
            PresetName::PrachShort => PRACH_SHORT_LENGTH,
            PresetName::PucchBase => PUCCH_TARGET_LENGTH,
            PresetName::SrsBase => SRS_TARGET_LENGTH,
        }
    }
}

impl fmt::Display for PresetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PresetName::LtePss => "pss",
            PresetName::PrachLong => "prach-long",
            PresetName::PrachShort => "prach-short",
            PresetName::PucchBase => "pucch",
            PresetName::SrsBase => "srs",
        };
        f.write_str(s)
    }
}

impl FromStr for PresetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pss" => Ok(PresetName::LtePss),
            "prach-long" => Ok(PresetName::PrachLong),
            "prach-short" => Ok(PresetName::PrachShort),
            "pucch" => Ok(PresetName::PucchBase),
            "srs" => Ok(PresetName::SrsBase),
            other => Err(Error::InvalidPreset(format!(
                "unknown preset name {other:?} (expected pss, prach-long, prach-short, pucch, srs)"
            ))),
        }
    }
}

/// A validated preset selection: name, root, and optional cyclic shift
/// applied after construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PresetId {
    name: PresetName,
    root: usize,
    cyclic_shift: i64,
}

impl PresetId {
    pub fn new(name: PresetName, root: usize) -> Result<Self> {
        Self::with_shift(name, root, 0)
    }

    pub fn with_shift(name: PresetName, root: usize, cyclic_shift: i64) -> Result<Self> {
        if !name.valid_root(root) {
            return Err(Error::InvalidPreset(format!(
                "root {root} is not valid for preset {name}"
            )));
        }
        Ok(Self {
            name,
            root,
            cyclic_shift,
        })
    }

    pub fn name(&self) -> PresetName {
        self.name
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn cyclic_shift(&self) -> i64 {
        self.cyclic_shift
    }
}

impl fmt::Display for PresetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cyclic_shift == 0 {
            write!(f, "preset:{}:{}", self.name, self.root)
        } else {
            write!(f, "preset:{}:{}:{}", self.name, self.root, self.cyclic_shift)
        }
    }
}

impl FromStr for PresetId {
    type Err = Error;

    /// Parses the inline form `preset:<name>:<root>[:<shift>]`.
    fn from_str(s: &str) -> Result<Self> {
        let rest = s
            .strip_prefix("preset:")
            .ok_or_else(|| Error::InvalidPreset(format!("expected preset:<name>:<root>[:<shift>], got {s:?}")))?;
        let mut parts = rest.split(':');
        let name: PresetName = parts
            .next()
            .filter(|p| !p.is_empty())
            .ok_or_else(|| Error::InvalidPreset("missing preset name".into()))?
            .parse()?;
        let root: usize = parts
            .next()
            .ok_or_else(|| Error::InvalidPreset("missing preset root".into()))?
            .parse()
            .map_err(|_| Error::InvalidPreset("root must be an integer".into()))?;
        let shift: i64 = match parts.next() {
            Some(p) => p
                .parse()
                .map_err(|_| Error::InvalidPreset("shift must be an integer".into()))?,
            None => 0,
        };
        if parts.next().is_some() {
            return Err(Error::InvalidPreset(format!("trailing fields in {s:?}")));
        }
        PresetId::with_shift(name, root, shift)
    }
}

/// Builds the time-domain sequence for a preset. The cyclic shift, if any,
/// is applied last.
pub fn preset_sequence(id: &PresetId) -> ComplexSequence {
    let base = match id.name {
        PresetName::LtePss => {
            zc_generate(&ZcParams::new(id.root, LTE_PSS_LENGTH).expect("validated"))
        }
        PresetName::PrachLong => {
            zc_generate(&ZcParams::new(id.root, PRACH_LONG_LENGTH).expect("validated"))
        }
        PresetName::PrachShort => {
            zc_generate(&ZcParams::new(id.root, PRACH_SHORT_LENGTH).expect("validated"))
        }
        PresetName::PucchBase => {
            let spec = ExtensionSpec::cyclic_extend(PUCCH_TARGET_LENGTH).expect("valid target");
            zc_extended(id.root, &spec).expect("validated root")
        }
        PresetName::SrsBase => {
            let spec = ExtensionSpec::cyclic_extend(SRS_TARGET_LENGTH).expect("valid target");
            zc_extended(id.root, &spec).expect("validated root")
        }
    };
    if id.cyclic_shift == 0 {
        base
    } else {
        base.cyclic_shift(id.cyclic_shift)
    }
}

/// Which random-access preamble length a shift family is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrachVariant {
    Long,
    Short,
}

impl PrachVariant {
    pub fn length(&self) -> usize {
        match self {
            PrachVariant::Long => PRACH_LONG_LENGTH,
            PrachVariant::Short => PRACH_SHORT_LENGTH,
        }
    }
}

/// All cyclic shifts of one preamble root at a fixed step:
/// `floor(N / shift_step)` sequences, the k-th shifted by `k * shift_step`.
///
/// Distinct cyclic shifts of a constant-amplitude zero-autocorrelation
/// sequence are orthogonal at zero lag, which is what makes the family
/// usable by simultaneous transmitters.
pub fn prach_shift_family(
    root: usize,
    variant: PrachVariant,
    shift_step: usize,
) -> Result<Vec<ComplexSequence>> {
    let length = variant.length();
    if shift_step == 0 || shift_step > length {
        return Err(Error::InvalidStep {
            step: shift_step,
            length,
        });
    }
    let base = zc_generate(&ZcParams::new(root, length)?);
    let count = length / shift_step;
    Ok((0..count)
        .map(|k| base.cyclic_shift((k * shift_step) as i64))
        .collect())
}
