//! The rectangular order ideals `L^k(m,n) = {μ : μ ⪯ (m^n)}`.
//!
//! Membership uses the explicit description: a partition lies in `L^k(m,n)`
//! exactly when it fits in the `m × n` box and has at most `k − m + 1`
//! parts smaller than `m`. Lattice search is only used by tests and the
//! verifier to confirm this.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::partition::{partitions_in_box, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealSpec {
    m: usize,
    n: usize,
    k: usize,
}

impl IdealSpec {
    pub fn new(m: usize, n: usize, k: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(invalid(format!("box dimensions must be positive, got {m}x{n}")));
        }
        if m > k {
            return Err(invalid(format!("width {m} exceeds k = {k}")));
        }
        Ok(IdealSpec { m, n, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Maximum number of parts smaller than `m`: `k − m + 1`.
    pub fn short_row_bound(&self) -> usize {
        self.k - self.m + 1
    }

    pub fn top_rank(&self) -> usize {
        self.m * self.n
    }

    /// The generating rectangle `(m^n)`.
    pub fn generator(&self) -> Partition {
        Partition::rectangle(self.m, self.n)
    }

    fn fits(&self, p: &Partition) -> bool {
        p.len() <= self.n && p.first() <= self.m
    }
}

pub fn is_member(p: &Partition, spec: &IdealSpec) -> bool {
    spec.fits(p) && p.count_parts_below(spec.m) <= spec.short_row_bound()
}

fn sort_by_rank(v: &mut [Partition]) {
    v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
}

/// `(m^a, μ₁+1, …, μ_h+1)`.
fn lift(m: usize, a: usize, mu: &Partition, h: usize) -> Partition {
    let mut parts = vec![m; a];
    parts.extend((0..h).map(|i| mu.get(i) + 1));
    Partition::new(parts).expect("lifted parts stay weakly decreasing")
}

/// Every member of `L^k(m,n)`, by degree then lexicographically.
///
/// For `n ≥ k−m+1` this is the disjoint union of the partitions inside
/// `(m^{k−m+1})` and, for `i = 1..n−(k−m+1)`, the partitions
/// `(m^i, μ+1^{k−m+1})` with `μ ⊆ ((m−1)^{k−m+1})`. Below that threshold the
/// ideal is the whole box.
pub fn enumerate(spec: &IdealSpec) -> Vec<Partition> {
    let (m, n, h) = (spec.m, spec.n, spec.short_row_bound());
    let mut out = if n < h {
        partitions_in_box(m, n)
    } else {
        let mut v = partitions_in_box(m, h);
        let inner = partitions_in_box(m - 1, h);
        for i in 1..=n - h {
            v.extend(inner.iter().map(|mu| lift(m, i, mu, h)));
        }
        v
    };
    sort_by_rank(&mut out);
    out
}

/// `Γ^k(m,n) = L^k(m,n) \ L^{k−1}(m,n)`: box partitions with exactly
/// `k−m+1` parts smaller than `m`, listed as `(m^a, μ+1^{k−m+1})` with
/// `μ ⊆ ((m−2)^{k−m+1})` and `a ≤ n−(k−m+1)`.
///
/// Empty when `n < k−m+1`.
pub fn gamma_set(spec: &IdealSpec) -> Result<Vec<Partition>> {
    if spec.k <= spec.m {
        return Err(invalid(format!("stratum needs k > m, got k={} m={}", spec.k, spec.m)));
    }
    let (m, n, h) = (spec.m, spec.n, spec.short_row_bound());
    if n < h || m < 2 {
        return Ok(Vec::new());
    }
    let inner = partitions_in_box(m - 2, h);
    let mut out: Vec<Partition> = (0..=n - h)
        .flat_map(|a| inner.iter().map(move |mu| lift(m, a, mu, h)))
        .collect();
    sort_by_rank(&mut out);
    Ok(out)
}

fn require_member(p: &Partition, spec: &IdealSpec) -> Result<()> {
    if is_member(p, spec) {
        Ok(())
    } else {
        Err(Error::NotMember { partition: p.clone(), m: spec.m, n: spec.n, k: spec.k })
    }
}

/// The complement of `p` in `(m^n)` rotated by 180°: `(λ^c)_i = m − λ_{n+1−i}`.
pub fn complement_dual(p: &Partition, spec: &IdealSpec) -> Result<Partition> {
    require_member(p, spec)?;
    let parts = (0..spec.n).map(|i| spec.m - p.get(spec.n - 1 - i)).collect();
    Ok(Partition::new(parts).expect("complement of a box partition is a partition"))
}

/// Cellwise intersection, which is the meet in `L^k(m,n)`.
pub fn meet(a: &Partition, b: &Partition, spec: &IdealSpec) -> Result<Partition> {
    require_member(a, spec)?;
    require_member(b, spec)?;
    Ok(a.meet(b))
}

/// Cellwise union, which is the join in `L^k(m,n)`.
pub fn join(a: &Partition, b: &Partition, spec: &IdealSpec) -> Result<Partition> {
    require_member(a, spec)?;
    require_member(b, spec)?;
    Ok(a.join(b))
}

/// Number of vertices in each rank `0..=top_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankVector {
    pub coefficients: Vec<u64>,
}

impl RankVector {
    pub fn total(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coefficients.iter().eq(self.coefficients.iter().rev())
    }

    /// `i,count` header followed by one row per rank.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,count\n");
        for (i, c) in self.coefficients.iter().enumerate() {
            out.push_str(&format!("{i},{c}\n"));
        }
        out
    }
}

pub fn rank_vector<'a, I>(vertices: I, top_rank: usize) -> Result<RankVector>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let mut coefficients = vec![0u64; top_rank + 1];
    for p in vertices {
        let degree = p.degree();
        if degree > top_rank {
            return Err(Error::DegreeOverflow { degree, top_rank });
        }
        coefficients[degree] += 1;
    }
    Ok(RankVector { coefficients })
}
