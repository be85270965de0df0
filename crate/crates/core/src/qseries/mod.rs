//! Exact integer polynomials in `q` and the generating functions built from
//! them. No floating point is used anywhere: roots of unity are handled by
//! reduction modulo cyclotomic polynomials.

mod gaussian;
mod genfun;
mod sieve;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};

pub use gaussian::{binomial, gaussian, gaussian_by_division};
pub use genfun::{
    chain_poly, conjecture_sum, conjecture_sum_limit, count_lk, rank_gen_gamma, rank_gen_lk,
};
pub use sieve::{
    cyclotomic, cyclotomic_check, divisors, is_prime, is_symmetric, is_unimodal,
    is_weakly_increasing, prime_divisors, sieved_sums, strided_prefix_sums,
};

/// Polynomial with arbitrary-precision integer coefficients; index `i` holds
/// the coefficient of `q^i`. Trailing zeros are never stored, so the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![BigInt::one()] }
    }

    /// `c·q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = QPoly { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.normalize();
        p
    }

    /// `1 + q^step + q^{2·step} + … ` with `count` terms.
    pub fn geometric(step: usize, count: usize) -> Self {
        if count == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); step * (count - 1) + 1];
        for t in 0..count {
            coeffs[t * step] += 1;
        }
        Self::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiply by `q^s`.
    pub fn shift(&self, s: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|x| x * c))
    }

    /// Value at `q = 1`, the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Quotient and remainder for a divisor whose leading coefficient is ±1,
    /// so division stays inside the integers.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let lead = divisor
            .coeffs
            .last()
            .ok_or_else(|| invalid("division by the zero polynomial"))?;
        if !lead.abs().is_one() {
            return Err(invalid("divisor must have leading coefficient ±1"));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = &rem[i] * lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &factor * d;
            }
            quot[i - dd] = factor;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Division known to leave no remainder.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(invalid(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    /// Pretty form such as `1 + q + 2q^2 - q^5`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let var = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if var.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&var);
        }
        out
    }

    /// Coefficients as a JSON integer array.
    pub fn to_json(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", items.join(","))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self.to_json())
    }
}

impl Serialize for QPoly {
    /// Integer array; coefficients beyond 128 bits fall back to decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i128() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coefficient(i) + rhs.coefficient(i)))
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coefficient(i) - rhs.coefficient(i)))
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn normalisation_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0, 3]).low_degree(), Some(2));
        assert_eq!(p(&[0, 0, 3]).degree(), Some(2));
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(QPoly::geometric(3, 3), p(&[1, 0, 0, 1, 0, 0, 1]));
        assert!(QPoly::geometric(3, 0).is_zero());
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[1, 1, 2, 1, 1]).pretty(), "1 + q + 2q^2 + q^3 + q^4");
        assert_eq!(p(&[0, -1, 0, 3]).pretty(), "-q + 3q^3");
        assert_eq!(p(&[-2]).pretty(), "-2");
        assert_eq!(QPoly::zero().pretty(), "0");
    }

    #[test]
    fn json_forms() {
        let poly = p(&[1, 0, -2]);
        assert_eq!(poly.to_json(), "[1,0,-2]");
        assert_eq!(serde_json::to_string(&poly).unwrap(), "[1,0,-2]");
        assert_eq!(QPoly::zero().to_json(), "[]");
    }

    #[test]
    fn division() {
        let a = p(&[1, 1, 1]) * p(&[1, 0, -1, 4]);
        assert_eq!(a.div_exact(&p(&[1, 1, 1])).unwrap(), p(&[1, 0, -1, 4]));
        let (q, r) = p(&[0, 0, 0, 1]).div_rem(&p(&[1, 1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[1]));
        assert!(p(&[1, 2]).div_rem(&p(&[2, -1])).is_ok());
        assert!(p(&[1, 2]).div_rem(&p(&[1, 3])).is_err());
        assert!(p(&[1, 2]).div_rem(&QPoly::zero()).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-20i64..20, 0..10).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        }

        #[test]
        fn division_round_trip(a in arb_poly(), b in arb_poly(), shift in 0usize..4) {
            // Any divisor with a ±1 leading coefficient.
            let d = &b + &QPoly::monomial(1, b.degree().map_or(0, |x| x + 1 + shift));
            let (q, r) = a.div_rem(&d).unwrap();
            prop_assert_eq!(&(&q * &d) + &r, a);
            prop_assert!(r.degree().is_none_or(|rd| rd < d.degree().unwrap()));
        }
    }
}
