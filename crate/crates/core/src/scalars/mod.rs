//! Exact coefficients: rational functions in `A`, and their images in the
//! cyclotomic field where `A` is a primitive `2N`-th root of unity.
//!
//! ```
//! use skeinwrt::scalars::{quantum_integer, ScalarRing};
//!
//! assert!(quantum_integer(5, ScalarRing::Cyclotomic(5)).is_zero());
//! assert!(!quantum_integer(4, ScalarRing::Cyclotomic(5)).is_zero());
//! ```

mod cyclotomic;
mod laurent;
mod poly;
mod ratfn;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use thiserror::Error;

pub use cyclotomic::{cyclotomic_poly, CycField, CycScalar};
pub use laurent::LaurentPoly;
pub use poly::IntPoly;
pub use ratfn::RatFn;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("denominator vanishes at a primitive {}-th root of unity", 2 * .0)]
    DenominatorVanishes(u32),
    #[error("division by zero")]
    DivisionByZero,
}

/// Which coefficient ring a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarRing {
    Generic,
    Cyclotomic(u32),
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarRing::Generic => write!(f, "generic"),
            ScalarRing::Cyclotomic(n) => write!(f, "cyclotomic(N={n})"),
        }
    }
}

/// A coefficient in one of the two rings.
///
/// Binary operations between scalars of different rings are a programming
/// error and panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Generic(RatFn),
    Cyclotomic(CycScalar),
}

impl Scalar {
    pub fn zero(ring: ScalarRing) -> Self {
        match ring {
            ScalarRing::Generic => Scalar::Generic(RatFn::zero()),
            ScalarRing::Cyclotomic(n) => Scalar::Cyclotomic(CycScalar::zero(n)),
        }
    }

    pub fn one(ring: ScalarRing) -> Self {
        Self::from_int(1, ring)
    }

    pub fn from_int(c: i64, ring: ScalarRing) -> Self {
        Self::from_bigint(BigInt::from(c), ring)
    }

    pub fn from_bigint(c: BigInt, ring: ScalarRing) -> Self {
        match ring {
            ScalarRing::Generic => Scalar::Generic(RatFn::from_int(c)),
            ScalarRing::Cyclotomic(n) => Scalar::Cyclotomic(CycScalar::from_int(n, c)),
        }
    }

    /// `A^k`.
    pub fn a_power(k: i64, ring: ScalarRing) -> Self {
        match ring {
            ScalarRing::Generic => Scalar::Generic(RatFn::a_power(k)),
            ScalarRing::Cyclotomic(n) => Scalar::Cyclotomic(CycScalar::a_power(n, k)),
        }
    }

    pub fn from_laurent(l: &LaurentPoly, ring: ScalarRing) -> Self {
        match ring {
            ScalarRing::Generic => Scalar::Generic(RatFn::from_laurent(l)),
            ScalarRing::Cyclotomic(n) => Scalar::Cyclotomic(CycScalar::from_laurent(n, l)),
        }
    }

    pub fn ring(&self) -> ScalarRing {
        match self {
            Scalar::Generic(_) => ScalarRing::Generic,
            Scalar::Cyclotomic(c) => ScalarRing::Cyclotomic(c.n()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Generic(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Generic(r) => r.is_one(),
            Scalar::Cyclotomic(c) => c.is_one(),
        }
    }

    pub fn as_generic(&self) -> Option<&RatFn> {
        match self {
            Scalar::Generic(r) => Some(r),
            Scalar::Cyclotomic(_) => None,
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        match self {
            Scalar::Generic(r) => r.inv().map(Scalar::Generic),
            Scalar::Cyclotomic(c) => c.inv().map(Scalar::Cyclotomic),
        }
        .ok_or(ScalarError::DivisionByZero)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.ring()), |acc, _| &acc * self)
    }

    /// Move into `ring`. Generic values are specialized; cyclotomic values
    /// only convert to their own field.
    pub fn to_ring(&self, ring: ScalarRing) -> Result<Self, ScalarError> {
        match (self, ring) {
            (_, r) if r == self.ring() => Ok(self.clone()),
            (Scalar::Generic(x), ScalarRing::Cyclotomic(n)) => {
                specialize(x, n).map(Scalar::Cyclotomic)
            }
            _ => panic!("cannot move {} into {ring}", self.ring()),
        }
    }
}

/// Image of a rational function under `A -> exp(i pi / N)`.
pub fn specialize(x: &RatFn, n: u32) -> Result<CycScalar, ScalarError> {
    let den = CycScalar::from_poly(n, x.denom());
    let inv = den.inv().ok_or(ScalarError::DenominatorVanishes(n))?;
    Ok(CycScalar::from_poly(n, x.numer()).mul(&inv))
}

/// `[n] = A^{2(n-1)} + A^{2(n-3)} + ... + A^{-2(n-1)}` as a Laurent polynomial.
pub fn quantum_integer_laurent(n: u32) -> LaurentPoly {
    let n = n as i64;
    (0..n)
        .map(|j| LaurentPoly::monomial(BigInt::from(1), 2 * (n - 1) - 4 * j))
        .fold(LaurentPoly::zero(), |acc, t| acc + t)
}

/// The quantum integer `[n]`.
pub fn quantum_integer(n: u32, ring: ScalarRing) -> Scalar {
    Scalar::from_laurent(&quantum_integer_laurent(n), ring)
}

/// `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: u32, ring: ScalarRing) -> Scalar {
    (1..=n).map(|k| quantum_integer(k, ring)).product_in(ring)
}

/// The value of a trivial loop, `-A^2 - A^{-2}`.
pub fn loop_value(ring: ScalarRing) -> Scalar {
    Scalar::from_laurent(&LaurentPoly::from_terms(&[(2, -1), (-2, -1)]), ring)
}

/// Products and sums that stay well-defined on empty iterators.
pub trait ScalarIterExt: Iterator<Item = Scalar> + Sized {
    fn product_in(self, ring: ScalarRing) -> Scalar {
        self.fold(Scalar::one(ring), |acc, x| &acc * &x)
    }

    fn sum_in(self, ring: ScalarRing) -> Scalar {
        self.fold(Scalar::zero(ring), |acc, x| &acc + &x)
    }
}

impl<I: Iterator<Item = Scalar>> ScalarIterExt for I {}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar ring mismatch: {} vs {}", a.ring(), b.ring())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.add(b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.add(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.sub(b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.sub(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Generic(a), Scalar::Generic(b)) => Scalar::Generic(a.mul(b)),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul(b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Generic(a) => Scalar::Generic(a.neg()),
            Scalar::Cyclotomic(a) => Scalar::Cyclotomic(a.neg()),
        }
    }
}

macro_rules! by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}

by_value!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Generic(r) => fmt::Display::fmt(r, f),
            Scalar::Cyclotomic(c) => fmt::Display::fmt(c, f),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
