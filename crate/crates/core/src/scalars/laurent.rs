//! Laurent polynomials in `A` with integer coefficients.
//!
//! These never need a gcd, which makes them the working currency of the
//! diagram-expansion inner loops; results are converted to [`RatFn`] once at
//! the end.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use super::ratfn::RatFn;

/// `sum_k coeffs[k] * A^(low + k)`, trimmed at both ends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, k: i64) -> Self {
        Self::new(k, vec![c])
    }

    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut l = LaurentPoly { low, coeffs };
        l.normalize();
        l
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        terms
            .iter()
            .map(|&(k, c)| Self::monomial(BigInt::from(c), k))
            .fold(Self::zero(), |acc, t| acc + t)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        usize::try_from(k - self.low)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Write `self = A^shift * p(A)` with `p` an ordinary polynomial.
    pub fn to_poly_and_shift(&self) -> (IntPoly, i64) {
        (IntPoly::from_coeffs(self.coeffs.clone()), self.low)
    }

    /// Lift an ordinary polynomial.
    pub fn from_poly(p: &IntPoly) -> Self {
        Self::new(0, p.coeffs().to_vec())
    }

    pub fn to_ratfn(&self) -> RatFn {
        RatFn::from_laurent(self)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        if low < self.low || high > self.high() {
            let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
            for (i, c) in self.coeffs.drain(..).enumerate() {
                v[(self.low - low) as usize + i] = c;
            }
            self.coeffs = v;
            self.low = low;
        }
        let off = (rhs.low - self.low) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        self.normalize();
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        LaurentPoly::new(self.low + rhs.low, v)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_value_squared() {
        let d = LaurentPoly::from_terms(&[(2, -1), (-2, -1)]);
        assert_eq!(d.pow(2), LaurentPoly::from_terms(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn cancellation_trims_both_ends() {
        let a = LaurentPoly::from_terms(&[(-3, 1), (0, 2), (5, 1)]);
        let b = LaurentPoly::from_terms(&[(-3, -1), (5, -1)]);
        let s = &a + &b;
        assert_eq!(s, LaurentPoly::from_terms(&[(0, 2)]));
        assert_eq!((s.low(), s.high()), (0, 0));
    }
}
