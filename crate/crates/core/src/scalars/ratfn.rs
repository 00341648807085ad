//! Rational functions in `A` over the rationals, kept in lowest terms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::poly::IntPoly;

/// `num / den` with `num, den` in `Z[A]`.
///
/// Canonical form: the polynomial gcd of `num` and `den` is 1, the integer
/// contents share no common factor, and `den` has a positive leading
/// coefficient. Zero is `0 / 1`. Negative powers of `A` live in `den`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: IntPoly,
    den: IntPoly,
}

impl RatFn {
    pub fn zero() -> Self {
        RatFn {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFn {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(IntPoly::constant(c.into()))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFn {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// `A^k` for any integer `k`.
    pub fn a_power(k: i64) -> Self {
        let m = IntPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFn {
                num: IntPoly::one(),
                den: m,
            }
        }
    }

    pub fn from_laurent(l: &LaurentPoly) -> Self {
        let (p, shift) = l.to_poly_and_shift();
        if shift >= 0 {
            Self::from_poly(p.shift(shift as usize))
        } else {
            Self::new(p, IntPoly::monomial(BigInt::one(), (-shift) as usize))
        }
    }

    /// Reduce `num / den` to canonical form. Panics if `den` is zero.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        Self::normalize_content(num, den)
    }

    fn normalize_content(mut num: IntPoly, mut den: IntPoly) -> Self {
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        RatFn { num, den }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let bd = self.den.exact_div(&g);
        let dd = other.den.exact_div(&g);
        let num = self.num.mul(&dd).add(&other.num.mul(&bd));
        Self::new(num, self.den.mul(&dd))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.exact_div(&g1);
        let d2 = other.den.exact_div(&g1);
        let n2 = other.num.exact_div(&g2);
        let d1 = self.den.exact_div(&g2);
        Self::normalize_content(n1.mul(&n2), d1.mul(&d2))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// If the denominator is a monomial `c*A^k`, the value as a Laurent
    /// polynomial (only when `c` divides every numerator coefficient).
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if !self.den.is_monomial() {
            return None;
        }
        let k = self.den.valuation().unwrap();
        let c = self.den.leading().unwrap();
        let coeffs = self
            .num
            .coeffs()
            .iter()
            .map(|x| {
                let (q, r) = x.div_rem(c);
                r.is_zero().then_some(q)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(LaurentPoly::new(-(k as i64), coeffs))
    }
}

impl Default for RatFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.num.fmt_terms("A", f)?;
        write!(f, " / ")?;
        self.den.fmt_terms("A", f)
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
