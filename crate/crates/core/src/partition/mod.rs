//! Integer partitions, cells and skew shapes.
//!
//! Rows are numbered from 1 starting at the bottom of the Ferrers diagram, so
//! row 1 holds the largest part. Columns are numbered from 1 at the left.

mod kskew;
mod shape;

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use kskew::{k_conjugate, k_skew, rectangle_k_conjugate, to_core};
pub use shape::{residue, Cell, CornerKind, KRectangle, SkewShape};

/// A weakly decreasing sequence of positive integers.
///
/// Parts are stored without trailing zeros; the degree is cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    degree: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts arbitrary non-negative parts into a partition, discarding zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let degree = parts.iter().sum();
        Partition { parts, degree }
    }

    /// The rectangle `(width^height)`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![width; height])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-based part lookup; parts past the length read as zero.
    pub fn get(&self, index: usize) -> usize {
        self.parts.get(index).copied().unwrap_or(0)
    }

    /// Length of row `row` (1-based), zero above the diagram.
    pub fn row(&self, row: usize) -> usize {
        debug_assert!(row >= 1);
        self.get(row - 1)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn is_k_bounded(&self, k: usize) -> bool {
        self.first() <= k
    }

    /// Hook length of cell (1,1): `λ₁ + ℓ(λ) − 1`, zero when empty.
    pub fn corner_hook(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.first() + self.len() - 1
        }
    }

    /// Canonical byte encoding of the parts (LEB128 varints, one per part).
    /// Equal partitions encode identically and distinct ones differently.
    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.parts.len());
        for &p in &self.parts {
            let mut v = p as u64;
            loop {
                let byte = (v & 0x7f) as u8;
                v >>= 7;
                if v == 0 {
                    out.push(byte);
                    break;
                }
                out.push(byte | 0x80);
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let mut cols = vec![0; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        Self::from_sorted(cols)
    }

    /// True if every part of `self` is at most the matching part of `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    /// Multiset union of the parts, sorted decreasing.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Self::from_sorted(parts)
    }

    /// Componentwise sum of parts.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Self::from_sorted((0..n).map(|i| self.get(i) + other.get(i)).collect())
    }

    /// Componentwise minimum (intersection of diagrams).
    pub fn meet(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len());
        Self::from_sorted((0..n).map(|i| self.parts[i].min(other.parts[i])).collect())
    }

    /// Componentwise maximum (union of diagrams).
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Self::from_sorted((0..n).map(|i| self.get(i).max(other.get(i))).collect())
    }

    /// Adds one box to row `row` (1-based), if the result is a partition.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        let i = row.checked_sub(1)?;
        if i > self.len() || (i > 0 && self.parts[i - 1] == self.get(i)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        Some(Partition { parts, degree: self.degree + 1 })
    }

    /// Removes one box from row `row` (1-based), if the result is a partition.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        let i = row.checked_sub(1)?;
        if i >= self.len() || self.get(i + 1) == self.parts[i] {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        Some(Partition { parts, degree: self.degree - 1 })
    }

    /// All partitions obtained by adding one box, ordered by row.
    pub fn add_one_box(&self) -> impl Iterator<Item = Partition> + '_ {
        (1..=self.len() + 1).filter_map(|r| self.add_box(r))
    }

    /// All partitions obtained by removing one box, ordered by row.
    pub fn remove_one_box(&self) -> impl Iterator<Item = Partition> + '_ {
        (1..=self.len()).filter_map(|r| self.remove_box(r))
    }

    /// Number of nonzero parts strictly smaller than `m`.
    pub fn count_parts_below(&self, m: usize) -> usize {
        self.parts.iter().filter(|&&p| p < m).count()
    }

    /// Rows as a comma-separated list, the command-line form.
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

/// `inner ⊆ outer`, missing parts read as zero.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.is_contained_in(outer)
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn union(a: &Partition, b: &Partition) -> Partition {
    a.union(b)
}

pub fn sum(a: &Partition, b: &Partition) -> Partition {
    a.sum(b)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_csv())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts, e.g. `4,3,2,2,1,1`. Surrounding brackets
    /// and whitespace are tolerated; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("literal partition")
    };
}

/// All partitions fitting in a box of the given width and height, in
/// lexicographic order of their parts.
pub fn partitions_in_box(width: usize, height: usize) -> Vec<Partition> {
    fn go(width: usize, rows_left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::from_sorted(prefix.clone()));
        if rows_left == 0 {
            return;
        }
        let cap = prefix.last().copied().unwrap_or(width);
        for p in 1..=cap {
            prefix.push(p);
            go(width, rows_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(width, height, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of `degree` with largest part at most `max_part`.
pub fn partitions_of(degree: usize, max_part: usize) -> Vec<Partition> {
    fn go(remaining: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(prefix.clone()));
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(degree, max_part, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All `k`-bounded partitions of degree at most `max_degree`, by degree then
/// lexicographically.
pub fn k_bounded_up_to(k: usize, max_degree: usize) -> Vec<Partition> {
    (0..=max_degree).flat_map(|d| partitions_of(d, k)).collect()
}
