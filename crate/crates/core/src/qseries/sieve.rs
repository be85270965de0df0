use num_bigint::BigInt;
use num_traits::Zero;

use super::{gaussian, QPoly};
use crate::error::{invalid, Result};

/// Weakly rises then weakly falls over the window between the lowest and
/// highest nonzero coefficients. Interior zeros count as values.
pub fn is_unimodal(p: &QPoly) -> bool {
    let (Some(lo), Some(hi)) = (p.low_degree(), p.degree()) else {
        return true;
    };
    let window = &p.coeffs()[lo..=hi];
    let mut i = 1;
    while i < window.len() && window[i - 1] <= window[i] {
        i += 1;
    }
    while i < window.len() && window[i - 1] >= window[i] {
        i += 1;
    }
    i >= window.len()
}

/// `c_i = c_{twice_center − i}` for every `i`; `twice_center` may be odd.
pub fn is_symmetric(p: &QPoly, twice_center: i64) -> bool {
    let Some(deg) = p.degree() else {
        return true;
    };
    if twice_center < deg as i64 {
        return false;
    }
    let span = twice_center as usize;
    (0..=span).all(|i| p.coefficient(i) == p.coefficient(span - i))
}

pub fn is_weakly_increasing(values: &[BigInt]) -> bool {
    values.windows(2).all(|w| w[0] <= w[1])
}

/// Entry `ℓ` is the sum of the coefficients of `q^{ℓ + jm}` over all `j`.
pub fn sieved_sums(p: &QPoly, m: usize) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(invalid("sieve modulus must be positive"));
    }
    let mut out = vec![BigInt::zero(); m];
    for (i, c) in p.coeffs().iter().enumerate() {
        out[i % m] += c;
    }
    Ok(out)
}

/// `v_i = Σ_{t ≥ 0} a_{i − tm}` for `i < length`.
pub fn strided_prefix_sums(p: &QPoly, m: usize, length: usize) -> Result<Vec<BigInt>> {
    if m == 0 {
        return Err(invalid("stride must be positive"));
    }
    let needed = p.degree().map_or(0, |d| d + 1);
    if length < needed {
        return Err(invalid(format!("length {length} is shorter than degree + 1 = {needed}")));
    }
    let mut v: Vec<BigInt> = Vec::with_capacity(length);
    for i in 0..length {
        let prev = if i >= m { v[i - m].clone() } else { BigInt::zero() };
        v.push(prev + p.coefficient(i));
    }
    Ok(v)
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn prime_divisors(n: usize) -> Vec<usize> {
    divisors(n).into_iter().filter(|&d| is_prime(d)).collect()
}

/// `Φ_d`, obtained from `q^d − 1` by dividing out `Φ_e` for every proper
/// divisor `e` of `d`.
pub fn cyclotomic(d: usize) -> Result<QPoly> {
    if d == 0 {
        return Err(invalid("cyclotomic index must be positive"));
    }
    let mut p = &QPoly::monomial(1, d) - &QPoly::one();
    for e in divisors(d) {
        if e < d {
            p = p.div_exact(&cyclotomic(e)?)?;
        }
    }
    Ok(p)
}

/// Whether `Σ_{j=a+1}^{b} ω^j·[j−1 choose m−2]_ω` vanishes for a primitive
/// `d`-th root of unity `ω`, decided by reducing the polynomial modulo `Φ_d`.
pub fn cyclotomic_check(a: usize, b: usize, m: usize, d: usize) -> Result<bool> {
    if d <= 1 || !m.is_multiple_of(d) {
        return Err(invalid(format!("need a divisor d > 1 of m, got d={d} m={m}")));
    }
    if a >= b {
        return Err(invalid(format!("need a < b, got a={a} b={b}")));
    }
    let mut sum = QPoly::zero();
    for j in a + 1..=b {
        sum += &gaussian(j as i64 - 1, m as i64 - 2).shift(j);
    }
    let (_, rem) = sum.div_rem(&cyclotomic(d)?)?;
    Ok(rem.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{binomial, conjecture_sum_limit};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn unimodality() {
        assert!(is_unimodal(&p(&[1, 2, 2, 1])));
        assert!(!is_unimodal(&p(&[1, 0, 1])));
        assert!(is_unimodal(&p(&[0, 0, 1, 3, 3])));
        assert!(is_unimodal(&QPoly::zero()));
        assert!(!is_unimodal(&p(&[2, 1, 2])));
        assert!(is_unimodal(&gaussian(6, 3)));
        assert!(is_symmetric(&gaussian(6, 3), 9));
        assert!(!is_symmetric(&gaussian(6, 3), 8));
        assert!(is_symmetric(&p(&[0, 1, 1]), 3));
        assert!(!is_symmetric(&p(&[1, 1, 1]), 1));
    }

    #[test]
    fn sieved_examples() {
        assert_eq!(sieved_sums(&gaussian(3, 1), 3).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(sieved_sums(&gaussian(4, 1), 3).unwrap(), ints(&[2, 1, 1]));
        assert_eq!(sieved_sums(&QPoly::zero(), 4).unwrap(), ints(&[0, 0, 0, 0]));
        assert!(sieved_sums(&QPoly::one(), 0).is_err());
    }

    #[test]
    fn strided_examples() {
        // Strides of 3 over 1 + q + q^2 never overlap, so each v_i is a single term.
        let v = strided_prefix_sums(&p(&[1, 1, 1]), 3, 6).unwrap();
        assert_eq!(v, ints(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(strided_prefix_sums(&QPoly::one(), 1, 3).unwrap(), ints(&[1, 1, 1]));
        let v = strided_prefix_sums(&gaussian(4, 2), 2, 8).unwrap();
        assert_eq!(v, ints(&[1, 1, 3, 2, 4, 2, 4, 2]));
        assert!(strided_prefix_sums(&p(&[1, 1, 1]), 3, 2).is_err());
    }

    #[test]
    fn number_theory() {
        let primes: Vec<usize> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(1), Vec::<usize>::new());
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        // q^n − 1 is the product of Φ_d over d | n.
        for n in 1..=30 {
            let prod = divisors(n)
                .into_iter()
                .fold(QPoly::one(), |acc, d| &acc * &cyclotomic(d).unwrap());
            assert_eq!(prod, &QPoly::monomial(1, n) - &QPoly::one());
        }
    }

    #[test]
    fn cyclotomic_check_examples() {
        assert!(cyclotomic_check(2, 4, 2, 2).unwrap());
        assert!(cyclotomic_check(3, 6, 3, 3).unwrap());
        assert!(cyclotomic_check(3, 4, 3, 1).is_err());
        assert!(cyclotomic_check(3, 4, 3, 2).is_err());
        assert!(cyclotomic_check(4, 4, 3, 3).is_err());
        // b = 5 ≡ −1 mod 3 breaks the hypothesis and the identity with it.
        assert!(!cyclotomic_check(3, 5, 3, 3).unwrap());
    }

    #[test]
    fn sieve_of_limit_sum_small_case() {
        let s = conjecture_sum_limit(4, 6, 4).unwrap();
        assert_eq!(sieved_sums(&s, 4).unwrap(), ints(&[4, 4, 4, 4]));
        let s = conjecture_sum_limit(3, 4, 3).unwrap();
        assert_eq!(sieved_sums(&s, 3).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(binomial(3, 1), BigInt::from(3));
    }

    proptest! {
        #[test]
        fn weakly_increasing_strided_sums_stabilise(
            coeffs in prop::collection::vec(0i64..6, 1..12),
            m in 1usize..5,
        ) {
            let poly = QPoly::from_coeffs(coeffs);
            let Some(d) = poly.degree() else { return Ok(()); };
            let v = strided_prefix_sums(&poly, m, d + 2 * m + 1).unwrap();
            if is_weakly_increasing(&v) {
                let start = (d + 1).saturating_sub(m);
                prop_assert!(v[start..].iter().all(|x| *x == v[start]));
                let total = poly.eval_one();
                let sums = sieved_sums(&poly, m).unwrap();
                let m_big = BigInt::from(m);
                prop_assert!(sums.iter().all(|s| s * &m_big == total));
            }
        }

        #[test]
        fn sieved_sums_add_up(coeffs in prop::collection::vec(-9i64..9, 0..15), m in 1usize..7) {
            let poly = QPoly::from_coeffs(coeffs);
            let sums = sieved_sums(&poly, m).unwrap();
            prop_assert_eq!(sums.iter().sum::<BigInt>(), poly.eval_one());
        }

        #[test]
        fn symmetric_gaussians(a in 0i64..12, b in 0i64..12) {
            prop_assume!(b <= a);
            let g = gaussian(a, b);
            prop_assert!(is_symmetric(&g, b * (a - b)));
            prop_assert!(is_unimodal(&g));
        }
    }
}
