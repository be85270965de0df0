use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{assemble, CheckKind, Counterexample, Outcome, VerificationReport};
use crate::error::{invalid, Error, Result};
use crate::qseries::{
    binomial, conjecture_sum_limit, cyclotomic_check, divisors, gaussian, is_prime,
    prime_divisors, sieved_sums,
};

fn hypothesis_error(m: usize, a: usize, b: usize) -> Option<String> {
    if m < 2 || a < m || a >= b {
        return Some(format!("need 2 ≤ m ≤ a < b, got m={m} a={a} b={b}"));
    }
    let bad: Vec<usize> = prime_divisors(m).into_iter().filter(|&p| a % p == p - 1 || b % p == p - 1).collect();
    if bad.is_empty() {
        None
    } else {
        Some(format!("a={a} or b={b} is −1 modulo prime divisor(s) {bad:?} of m={m}"))
    }
}

fn all_equal_to(sums: &[BigInt], total: &BigInt, m: usize) -> bool {
    let m = BigInt::from(m);
    sums.iter().all(|s| s * &m == *total)
}

/// Outcomes for one `(m, a, b)`: the residue-class check on
/// `Σ_{j=a+1}^{b} q^{j−a−1}·[j−1 choose m−2]_q`, then one cyclotomic check
/// per divisor `d > 1` of `m`.
fn sieved_cell(m: usize, a: usize, b: usize) -> Result<Vec<Outcome>> {
    let poly = conjecture_sum_limit(a, b, m)?;
    let sums = sieved_sums(&poly, m)?;
    let total: BigInt = (a + 1..=b).map(|j| binomial(j as i64 - 1, m as i64 - 2)).sum();
    let params = [("m", m), ("a", a), ("b", b)];
    let mut out = vec![Outcome::check(all_equal_to(&sums, &total, m), || {
        Counterexample::new(&params, serde_json::json!({ "sieved_sums": sums.iter().map(ToString::to_string).collect::<Vec<_>>(), "total": total.to_string() }))
    })];
    for d in divisors(m).into_iter().filter(|&d| d > 1) {
        let ok = cyclotomic_check(a, b, m, d)?;
        out.push(Outcome::check(ok, || {
            Counterexample::new(&[("m", m), ("a", a), ("b", b), ("d", d)], "nonzero remainder modulo the cyclotomic polynomial")
        }));
    }
    Ok(out)
}

/// Residue-class sums for a single `(m, a, b)` meeting the hypotheses, which
/// are enforced: a violation is an error, not a skip.
pub fn verify_sieved(m: usize, a: usize, b: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    if let Some(msg) = hypothesis_error(m, a, b) {
        return Err(Error::Hypothesis(msg));
    }
    let outcomes = sieved_cell(m, a, b)?;
    let notes = vec![format!("cell 0 is the residue-class check; the rest are cyclotomic checks for d | {m}, d > 1")];
    Ok(assemble("sieved", CheckKind::Theorem, outcomes, notes, started))
}

/// Every `(m, a, b)` with `2 ≤ m ≤ m_max` and `m ≤ a < b ≤ b_max`; cells
/// violating the residue hypothesis are skipped. Each `(m, a, b)` contributes
/// one residue-class cell and one cell per divisor `d > 1` of `m`.
pub fn verify_sieved_sweep(m_max: usize, b_max: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    if m_max < 2 {
        return Err(invalid(format!("need m_max ≥ 2, got {m_max}")));
    }
    let triples: Vec<(usize, usize, usize)> = (2..=m_max)
        .flat_map(|m| (m..b_max).flat_map(move |a| (a + 1..=b_max).map(move |b| (m, a, b))))
        .collect();
    if triples.is_empty() {
        return Err(invalid(format!("no (m, a, b) with m ≤ a < b ≤ {b_max}")));
    }
    let outcomes: Vec<Vec<Outcome>> = triples
        .par_iter()
        .map(|&(m, a, b)| match hypothesis_error(m, a, b) {
            Some(_) => Ok(vec![Outcome::Skip; divisors(m).len()]),
            None => sieved_cell(m, a, b),
        })
        .collect::<Result<_>>()?;
    let skipped = outcomes.iter().filter(|o| matches!(o[0], Outcome::Skip)).count();
    let notes = vec![
        format!("{} (m, a, b) triples, {skipped} excluded by the residue hypothesis", triples.len()),
        "each triple contributes one residue-class cell and one cyclotomic cell per divisor d > 1 of m".to_string(),
    ];
    Ok(assemble("sieved-sweep", CheckKind::Theorem, outcomes.into_iter().flatten().collect(), notes, started))
}

/// Residue-class sums of `[k−1 choose m−2]_q` for prime `m < k ≤ k_max`
/// with `k ≢ −1, 0 mod m`, each equal to `C(k−1, m−2)/m`. Excluded residues
/// of `k` are skipped.
pub fn verify_sieved_gaussian(primes: &[usize], k_max: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    let cells: Vec<(usize, usize)> =
        primes.iter().flat_map(|&m| (m + 1..=k_max).map(move |k| (m, k))).collect();
    if cells.is_empty() {
        return Err(invalid(format!("no prime m < k ≤ {k_max} in {primes:?}")));
    }
    let outcomes: Vec<Outcome> = cells
        .par_iter()
        .map(|&(m, k)| -> Result<Outcome> {
            if k % m == 0 || k % m == m - 1 {
                return Ok(Outcome::Skip);
            }
            let (ki, mi) = (k as i64, m as i64);
            let sums = sieved_sums(&gaussian(ki - 1, mi - 2), m)?;
            let total = binomial(ki - 1, mi - 2);
            Ok(Outcome::check(all_equal_to(&sums, &total, m), || {
                Counterexample::new(&[("m", m), ("k", k)], sums.iter().map(ToString::to_string).collect::<Vec<_>>())
            }))
        })
        .collect::<Result<_>>()?;
    let notes = vec!["k ≡ −1 or 0 mod m is outside the statement; those cells are skipped".to_string()];
    Ok(assemble("sieved-gaussian", CheckKind::Theorem, outcomes, notes, started))
}
