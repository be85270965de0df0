use std::time::Instant;

use rayon::prelude::*;

use super::{assemble, tally, CheckKind, Counterexample, Outcome, Span, VerificationReport};
use crate::error::{invalid, Error, Result};
use crate::qseries::{is_prime, is_unimodal, prime_divisors, rank_gen_gamma, QPoly};

#[derive(Clone, Copy, PartialEq, Eq)]
enum UCase {
    Single,
    Pair,
    Excluded,
}

/// Unimodality of the stratum generating function `Γ^k(m,n)` for prime `m`
/// and `k ≢ −1, 0 mod m`, and of `Γ^k + Γ^{k+1}` when `k ≡ −1 mod m` and
/// `n > k−m+1`.
///
/// Cells run over `k` in `k_range` and `k−m+1 ≤ n ≤ k + n_extra`. Cells with
/// `k ≡ 0 mod m` and the pair clause at `n = k−m+1` are outside the
/// statement and counted as skipped.
pub fn verify_conjecture_u(m: usize, k_range: Span, n_extra: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    if !is_prime(m) {
        return Err(Error::NotPrime(m));
    }
    if k_range.lo <= m {
        return Err(invalid(format!("need k > m = {m}, range starts at {}", k_range.lo)));
    }
    let cells: Vec<(usize, usize)> = k_range
        .iter()
        .flat_map(|k| (k + 1 - m..=k + n_extra).map(move |n| (k, n)))
        .collect();
    let case = |k: usize| match k % m {
        0 => UCase::Excluded,
        r if r == m - 1 => UCase::Pair,
        _ => UCase::Single,
    };
    let outcomes: Vec<Outcome> = cells
        .par_iter()
        .map(|&(k, n)| -> Result<Outcome> {
            let boundary = n == k + 1 - m;
            let poly = match case(k) {
                UCase::Excluded => return Ok(Outcome::Skip),
                UCase::Pair if boundary => return Ok(Outcome::Skip),
                UCase::Pair => &rank_gen_gamma(m, n, k)? + &rank_gen_gamma(m, n, k + 1)?,
                UCase::Single => rank_gen_gamma(m, n, k)?,
            };
            Ok(Outcome::check(is_unimodal(&poly), || {
                Counterexample::new(&[("m", m), ("n", n), ("k", k)], &poly)
            }))
        })
        .collect::<Result<_>>()?;

    let on_boundary = |want: UCase| {
        cells
            .iter()
            .zip(&outcomes)
            .filter(move |((k, n), _)| *n == k + 1 - m && case(*k) == want)
            .map(|(_, o)| o)
    };
    let (bp, bf, _) = tally(on_boundary(UCase::Single));
    let (_, _, bs) = tally(on_boundary(UCase::Pair));
    let notes = vec![
        format!("k ≡ 0 mod {m} is outside the statement; those cells are skipped"),
        format!("boundary n = k−m+1, single clause: {bp} pass, {bf} fail"),
        format!("boundary n = k−m+1, paired clause (needs n > k−m+1): {bs} skipped"),
    ];
    Ok(assemble("conjecture-u", CheckKind::Conjecture, outcomes, notes, started))
}

fn violates(x: usize, primes: &[usize]) -> bool {
    primes.iter().any(|&p| x % p == p - 1)
}

/// Unimodality of `Σ_{j=a+1}^{b} Γ^j(m,n)` over all `(a, b, n)` in the given
/// ranges with `m ≤ a < b ≤ n+m−1`. Pairs where `a` or `b` is `−1` modulo a
/// prime divisor of `m` are skipped.
pub fn verify_conjecture_gen(
    m: usize,
    a_range: Span,
    b_range: Span,
    n_range: Span,
) -> Result<VerificationReport> {
    let started = Instant::now();
    if m < 2 {
        return Err(invalid(format!("need m ≥ 2, got {m}")));
    }
    if a_range.lo < m {
        return Err(invalid(format!("need a ≥ m = {m}, range starts at {}", a_range.lo)));
    }
    if n_range.lo == 0 {
        return Err(invalid("n must be positive"));
    }
    let primes = prime_divisors(m);
    let mut cells = Vec::new();
    for n in n_range.iter() {
        for a in a_range.iter() {
            for b in b_range.iter() {
                if a < b && b < n + m {
                    cells.push((n, a, b));
                }
            }
        }
    }
    if cells.is_empty() {
        return Err(invalid("no (a, b, n) satisfies m ≤ a < b ≤ n+m−1 in the given ranges"));
    }

    // Per n, prefix sums of the stratum generating functions over j.
    let prefixes: Vec<(usize, Vec<QPoly>)> = n_range
        .iter()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&n| -> Result<(usize, Vec<QPoly>)> {
            let top = (n + m - 1).min(b_range.hi);
            let mut acc = vec![QPoly::zero(); top.max(m) + 1];
            for j in m + 1..=top {
                acc[j] = &acc[j - 1] + &rank_gen_gamma(m, n, j)?;
            }
            Ok((n, acc))
        })
        .collect::<Result<_>>()?;

    let outcomes: Vec<Outcome> = cells
        .par_iter()
        .map(|&(n, a, b)| {
            if violates(a, &primes) || violates(b, &primes) {
                return Outcome::Skip;
            }
            let table = &prefixes[n - n_range.lo].1;
            let poly = &table[b] - &table[a];
            Outcome::check(is_unimodal(&poly), || {
                Counterexample::new(&[("m", m), ("n", n), ("a", a), ("b", b)], &poly)
            })
        })
        .collect();

    let (bp, bf, bs) = tally(
        cells.iter().zip(&outcomes).filter(|((n, _, b), _)| b + 1 == n + m).map(|(_, o)| o),
    );
    let notes = vec![
        format!("prime divisors of {m}: {primes:?}; a or b ≡ −1 modulo one of them is skipped"),
        format!("boundary b = n+m−1: {bp} pass, {bf} fail, {bs} skipped"),
    ];
    Ok(assemble("conjecture-gen", CheckKind::Conjecture, outcomes, notes, started))
}
