use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    verify_conjecture_gen, verify_conjecture_u, verify_sieved, verify_sieved_gaussian,
    verify_sieved_sweep, verify_structure, ExportFormat, Span, StructureBounds, VerificationReport,
};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    ConjectureU,
    ConjectureGen,
    Sieved,
    SievedSweep,
    SievedGaussian,
    Structure,
}

impl CheckName {
    pub const ALL: [CheckName; 6] = [
        CheckName::ConjectureU,
        CheckName::ConjectureGen,
        CheckName::Sieved,
        CheckName::SievedSweep,
        CheckName::SievedGaussian,
        CheckName::Structure,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckName::ConjectureU => "conjecture-u",
            CheckName::ConjectureGen => "conjecture-gen",
            CheckName::Sieved => "sieved",
            CheckName::SievedSweep => "sieved-sweep",
            CheckName::SievedGaussian => "sieved-gaussian",
            CheckName::Structure => "structure",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown check {s:?}")))
    }
}

/// One sweep: which check, its parameter ranges, and where the report goes.
/// Missing ranges fall back to per-check defaults.
///
/// | check | parameters | defaults |
/// |---|---|---|
/// | `conjecture-u` | `m` (each prime), `k`, `n_extra` | m 2..7, k m+1..25, n_extra 5 |
/// | `conjecture-gen` | `m`, `a`, `b`, `n` | m 2..12, a m..19, b m+1..20, n 1..25 |
/// | `sieved` | single `m`, `a`, `b` | required |
/// | `sieved-sweep` | upper ends of `m`, `b` | m ≤ 12, b ≤ 20 |
/// | `sieved-gaussian` | `primes`, upper end of `k` | primes 2,3,5,7, k ≤ 30 |
/// | `structure` | upper ends of `m`, `n`, `k`; `max_degree`, `samples`, `seed` | see [`StructureBounds`] |
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub check: CheckName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Span>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<Span>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Span>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Span>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Span>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_extra: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub format: ExportFormat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
}

impl SweepConfig {
    pub fn new(check: CheckName) -> Self {
        SweepConfig {
            check,
            m: None,
            n: None,
            k: None,
            a: None,
            b: None,
            n_extra: None,
            max_degree: None,
            primes: None,
            samples: None,
            seed: None,
            format: ExportFormat::Json,
            out: None,
        }
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    fn single(span: Option<Span>, name: &str) -> Result<usize> {
        match span {
            Some(s) if s.is_single() => Ok(s.lo),
            Some(s) => Err(invalid(format!("{name} must be a single value for this check, got {s}"))),
            None => Err(invalid(format!("{name} is required for this check"))),
        }
    }

    /// Run the sweep. Reports carry wall-clock time; strip it with
    /// [`VerificationReport::without_timing`] for reproducible output.
    pub fn run(&self) -> Result<Vec<VerificationReport>> {
        match self.check {
            CheckName::ConjectureU => {
                let ms = self.m.unwrap_or(Span { lo: 2, hi: 7 });
                let mut out = Vec::new();
                for m in ms.iter() {
                    if ms.is_single() || crate::qseries::is_prime(m) {
                        let k = self.k.unwrap_or(Span { lo: m + 1, hi: 25 });
                        out.push(verify_conjecture_u(m, k, self.n_extra.unwrap_or(5))?);
                    }
                }
                Ok(out)
            }
            CheckName::ConjectureGen => {
                let ms = self.m.unwrap_or(Span { lo: 2, hi: 12 });
                ms.iter()
                    .map(|m| {
                        let a = self.a.unwrap_or(Span { lo: m, hi: 19 });
                        let b = self.b.unwrap_or(Span { lo: m + 1, hi: 20 });
                        let n = self.n.unwrap_or(Span { lo: 1, hi: 25 });
                        verify_conjecture_gen(m, a, b, n)
                    })
                    .collect()
            }
            CheckName::Sieved => Ok(vec![verify_sieved(
                Self::single(self.m, "m")?,
                Self::single(self.a, "a")?,
                Self::single(self.b, "b")?,
            )?]),
            CheckName::SievedSweep => Ok(vec![verify_sieved_sweep(
                self.m.map_or(12, |s| s.hi),
                self.b.map_or(20, |s| s.hi),
            )?]),
            CheckName::SievedGaussian => {
                let primes = self.primes.clone().unwrap_or_else(|| vec![2, 3, 5, 7]);
                Ok(vec![verify_sieved_gaussian(&primes, self.k.map_or(30, |s| s.hi))?])
            }
            CheckName::Structure => verify_structure(&self.structure_bounds()),
        }
    }

    fn structure_bounds(&self) -> StructureBounds {
        let mut bounds = StructureBounds::default();
        if let Some(m) = self.m {
            bounds.grid.m_max = m.hi;
        }
        if let Some(n) = self.n {
            bounds.grid.n_max = n.hi;
        }
        if let Some(k) = self.k {
            bounds.grid.k_max = k.hi;
        }
        if let Some(s) = self.samples {
            bounds.samples = s;
        }
        if let Some(s) = self.seed {
            bounds.seed = s;
        }
        match self.max_degree {
            Some(d) => bounds.cap_degree(d),
            None => bounds,
        }
    }
}
