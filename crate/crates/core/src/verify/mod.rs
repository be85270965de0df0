//! Parameter sweeps over the theorems and conjectures, producing structured
//! reports, plus file export.
//!
//! Every sweep enumerates its grid in a fixed order, evaluates cells in
//! parallel and merges the outcomes back in grid order, so reports are
//! reproducible byte for byte once timing is stripped.

mod config;
mod conjecture;
mod export;
mod sieved;
mod structure;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub use config::{CheckName, SweepConfig};
pub use conjecture::{verify_conjecture_gen, verify_conjecture_u};
pub use export::{export, render, ExportFormat, Payload};
pub use sieved::{verify_sieved, verify_sieved_gaussian, verify_sieved_sweep};
pub use structure::{
    check_counts, check_covers, check_decomposition, check_duality, check_induced_order,
    check_involution, check_kskew, check_lattice, check_membership, check_rectangle_conjugation,
    check_stratification, check_translation, verify_structure, IdealGrid, Slice, StructureBounds,
};

/// Whether a failure means a bug (proved statement) or a finding (open
/// conjecture).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Theorem,
    Conjecture,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Theorem => "theorem",
            CheckKind::Conjecture => "conjecture",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, i64>,
    pub object: serde_json::Value,
}

impl Counterexample {
    pub fn new(params: &[(&str, usize)], object: impl Serialize) -> Self {
        Counterexample {
            params: params.iter().map(|&(k, v)| (k.to_string(), v as i64)).collect(),
            object: serde_json::to_value(object).unwrap_or(serde_json::Value::Null),
        }
    }
}

/// Result of one sweep. `pass + fail + skip = grid` and there is one
/// counterexample per failure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub kind: CheckKind,
    pub grid: u64,
    pub pass: u64,
    pub fail: u64,
    pub skip: u64,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.fail == 0
    }

    /// Zero the wall-clock field so identical sweeps serialize identically.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// `check,kind,grid,pass,fail,skip` row, without a header.
    pub fn csv_row(&self) -> String {
        format!("{},{},{},{},{},{}", self.check, self.kind, self.grid, self.pass, self.fail, self.skip)
    }

    pub fn summary(&self) -> String {
        format!(
            "{} [{}]: {} cells, {} pass, {} fail, {} skip",
            self.check, self.kind, self.grid, self.pass, self.fail, self.skip
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(Counterexample),
    Skip,
}

impl Outcome {
    pub fn check(ok: bool, fail: impl FnOnce() -> Counterexample) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(fail())
        }
    }
}

pub(crate) fn assemble(
    check: &str,
    kind: CheckKind,
    outcomes: Vec<Outcome>,
    notes: Vec<String>,
    started: Instant,
) -> VerificationReport {
    let mut report = VerificationReport {
        check: check.to_string(),
        kind,
        grid: outcomes.len() as u64,
        pass: 0,
        fail: 0,
        skip: 0,
        counterexamples: Vec::new(),
        notes,
        elapsed_ms: 0,
    };
    for o in outcomes {
        match o {
            Outcome::Pass => report.pass += 1,
            Outcome::Skip => report.skip += 1,
            Outcome::Fail(c) => {
                report.fail += 1;
                report.counterexamples.push(c);
            }
        }
    }
    report.elapsed_ms = started.elapsed().as_millis() as u64;
    report
}

/// Tally of a subset of outcomes, used for boundary-case notes.
pub(crate) fn tally<'a>(outcomes: impl IntoIterator<Item = &'a Outcome>) -> (usize, usize, usize) {
    outcomes.into_iter().fold((0, 0, 0), |(p, f, s), o| match o {
        Outcome::Pass => (p + 1, f, s),
        Outcome::Fail(_) => (p, f + 1, s),
        Outcome::Skip => (p, f, s + 1),
    })
}

/// Inclusive integer range, written `lo..hi`, `lo..=hi` or a single `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(invalid(format!("empty range {lo}..{hi}")));
        }
        Ok(Span { lo, hi })
    }

    pub fn single(v: usize) -> Self {
        Span { lo: v, hi: v }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn is_single(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for Span {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim().parse::<usize>().map_err(|_| invalid(format!("bad range bound {t:?} in {s:?}")))
        };
        match s.split_once("..") {
            Some((lo, hi)) => Span::new(num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
            None => Ok(Span::single(num(s)?)),
        }
    }
}

impl<'de> Deserialize<'de> for Span {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            One(usize),
            Pair([usize; 2]),
            Text(String),
        }
        let span = match Raw::deserialize(d)? {
            Raw::One(v) => Ok(Span::single(v)),
            Raw::Pair([lo, hi]) => Span::new(lo, hi),
            Raw::Text(s) => s.parse(),
        };
        span.map_err(serde::de::Error::custom)
    }
}
