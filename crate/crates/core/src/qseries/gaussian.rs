use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use super::QPoly;

thread_local! {
    static GAUSSIAN_MEMO: RefCell<HashMap<(usize, usize), QPoly>> = RefCell::new(HashMap::new());
}

/// Ordinary binomial coefficient, zero outside `0 ≤ b ≤ a`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::from(0);
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// The Gaussian polynomial `[a choose b]_q`; zero unless `0 ≤ b ≤ a`.
///
/// Built from the recurrence `[a,b] = [a−1,b−1] + q^b·[a−1,b]`, memoised per
/// thread.
pub fn gaussian(a: i64, b: i64) -> QPoly {
    if a < 0 || b < 0 || b > a {
        return QPoly::zero();
    }
    let (a, b) = (a as usize, b as usize);
    if b == 0 || b == a {
        return QPoly::one();
    }
    if let Some(hit) = GAUSSIAN_MEMO.with(|m| m.borrow().get(&(a, b)).cloned()) {
        return hit;
    }
    let result = pascal(a, b);
    GAUSSIAN_MEMO.with(|m| m.borrow_mut().insert((a, b), result.clone()));
    result
}

fn pascal(a: usize, b: usize) -> QPoly {
    // row[j] = [i choose j] for the current i.
    let mut row: Vec<QPoly> = vec![QPoly::one()];
    for i in 1..=a {
        let width = i.min(b);
        let mut next = Vec::with_capacity(width + 1);
        for j in 0..=width {
            let poly = if j == 0 || j == i {
                QPoly::one()
            } else {
                let left = &row[j - 1];
                match row.get(j) {
                    Some(up) => left + &up.shift(j),
                    None => left.clone(),
                }
            };
            next.push(poly);
        }
        row = next;
    }
    row.swap_remove(b)
}

/// `[a choose b]_q` as the exact quotient
/// `∏_{i=1}^{b} (1 − q^{a−b+i}) / (1 − q^i)`, dividing one factor at a time.
pub fn gaussian_by_division(a: i64, b: i64) -> QPoly {
    if a < 0 || b < 0 || b > a {
        return QPoly::zero();
    }
    let mut acc = QPoly::one();
    for i in 1..=b {
        let top = (a - b + i) as usize;
        let num = &QPoly::one() - &QPoly::monomial(1, top);
        let den = &QPoly::one() - &QPoly::monomial(1, i as usize);
        acc = (&acc * &num).div_exact(&den).expect("partial products are Gaussian polynomials");
    }
    acc
}
