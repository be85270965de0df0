use num_bigint::BigInt;

use super::{binomial, gaussian, QPoly};
use crate::error::{invalid, Result};

fn check_lk(m: usize, n: usize, k: usize) -> Result<()> {
    if m == 0 || m > k {
        return Err(invalid(format!("need 1 ≤ m ≤ k, got m={m} k={k}")));
    }
    if n + m < k + 1 {
        return Err(invalid(format!("need n ≥ k−m+1 = {}, got n={n}", k + 1 - m)));
    }
    Ok(())
}

fn check_gamma(m: usize, n: usize, k: usize) -> Result<()> {
    if m == 0 || k <= m {
        return Err(invalid(format!("need 1 ≤ m < k, got m={m} k={k}")));
    }
    if n + m < k + 1 {
        return Err(invalid(format!("need n ≥ k−m+1 = {}, got n={n}", k + 1 - m)));
    }
    Ok(())
}

/// `1 + q + … + q^{top}`.
pub fn chain_poly(top: usize) -> QPoly {
    QPoly::geometric(1, top + 1)
}

/// Rank-generating function of `L^k(m,n)`:
/// `[k+1 choose m]_q + q^{k+1}·(1 + q^m + … + q^{m(n−k+m−2)})·[k choose m−1]_q`.
pub fn rank_gen_lk(m: usize, n: usize, k: usize) -> Result<QPoly> {
    check_lk(m, n, k)?;
    let (mi, ki) = (m as i64, k as i64);
    let terms = n + m - k - 1;
    let tail = &QPoly::geometric(m, terms) * &gaussian(ki, mi - 1);
    Ok(&gaussian(ki + 1, mi) + &tail.shift(k + 1))
}

/// Rank-generating function of the stratum `Γ^k(m,n)`:
/// `q^{k−m+1}·(1 + q^m + … + q^{m(n−k+m−1)})·[k−1 choose m−2]_q`.
pub fn rank_gen_gamma(m: usize, n: usize, k: usize) -> Result<QPoly> {
    check_gamma(m, n, k)?;
    let (mi, ki) = (m as i64, k as i64);
    let terms = n + m - k;
    let body = &QPoly::geometric(m, terms) * &gaussian(ki - 1, mi - 2);
    Ok(body.shift(k - m + 1))
}

/// `|L^k(m,n)| = C(k+1,m) + (n−k+m−1)·C(k,m−1)`.
pub fn count_lk(m: usize, n: usize, k: usize) -> Result<BigInt> {
    check_lk(m, n, k)?;
    let (m, n, k) = (m as i64, n as i64, k as i64);
    Ok(binomial(k + 1, m) + BigInt::from(n - k + m - 1) * binomial(k, m - 1))
}

/// `Σ_{j=a+1}^{b} q^{j−m+1}·(1 − q^{m(n−j+m)})/(1 − q^m)·[j−1 choose m−2]_q`,
/// the sum of the stratum generating functions for `j = a+1..=b`.
pub fn conjecture_sum(a: usize, b: usize, m: usize, n: usize) -> Result<QPoly> {
    if m == 0 || a < m || a >= b || b + 1 > n + m {
        return Err(invalid(format!(
            "need m ≤ a < b ≤ n+m−1, got m={m} a={a} b={b} n={n}"
        )));
    }
    let mut acc = QPoly::zero();
    for j in a + 1..=b {
        acc += &rank_gen_gamma(m, n, j)?;
    }
    Ok(acc)
}

/// `Σ_{j=a+1}^{b} q^{j−(a+1)}·[j−1 choose m−2]_q`, the large-`n` limit of the
/// conjecture sum with the geometric factor and leading power removed.
pub fn conjecture_sum_limit(a: usize, b: usize, m: usize) -> Result<QPoly> {
    if m == 0 || a < m || a >= b {
        return Err(invalid(format!("need m ≤ a < b, got m={m} a={a} b={b}")));
    }
    let mut acc = QPoly::zero();
    for j in a + 1..=b {
        acc += &gaussian(j as i64 - 1, m as i64 - 2).shift(j - a - 1);
    }
    Ok(acc)
}
