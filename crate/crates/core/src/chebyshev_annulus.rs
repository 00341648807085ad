//! The skein algebra of the annulus, `Z[z]` with `z` the core curve, and
//! its quotient at a root of unity.
//!
//! `S_n` is the core curve carrying `JW_n`; `T_n` is the threading that
//! defines the classical shadow. At a primitive `2N`-th root of unity with
//! `N` odd the quotient relations are `S_{N-1} = 0` and
//! `S_{N-2-n} = S_n`, extended to negative indices by `S_{-1} = 0` and
//! `S_{-m-2} = -S_m`.
//!
//! ```
//! use skeinwrt::chebyshev_annulus::{chebyshev, curve_action, ChebKind};
//!
//! assert_eq!(chebyshev(ChebKind::T, 5).to_string(), "z^5 - 5*z^3 + 5*z");
//! let action = curve_action(2, &chebyshev(ChebKind::S, 2), 7).unwrap();
//! assert_eq!(action.keys().copied().collect::<Vec<_>>(), [0, 2, 4]);
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::recoupling::is_admissible_color;
use crate::scalars::{Scalar, ScalarRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnulusError {
    #[error("the reduction relations are only available for odd N (got N={0})")]
    EvenN(u32),
    #[error("color {w} is not admissible at N={n}")]
    InadmissibleColor { w: u32, n: u32 },
    #[error("threading T_{n} on color {w} reduced to {got}, expected -2*S_{w}")]
    ShadowMismatch { w: u32, n: u32, got: String },
}

/// A polynomial in the core class `z` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AnnulusElement {
    coeffs: BTreeMap<u32, BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebKind {
    T,
    S,
}

impl AnnulusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The core curve `z`.
    pub fn z() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, k: u32) -> Self {
        let mut x = Self::zero();
        x.add_term(k, c.into());
        x
    }

    /// From coefficients listed lowest degree first.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        let mut x = Self::zero();
        for (k, &c) in cs.iter().enumerate() {
            x.add_term(k as u32, BigInt::from(c));
        }
        x
    }

    fn add_term(&mut self, k: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, k: u32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero `(degree, coefficient)` pairs, increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&k, x) in &self.coeffs {
            out.add_term(k, x * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Expand in the `S_n` basis.
    pub fn to_s_basis(&self) -> BTreeMap<u32, BigInt> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some(d) = rest.degree() {
            let c = rest.coeff(d);
            rest = &rest - &chebyshev(ChebKind::S, d).scale(&c);
            out.insert(d, c);
        }
        out
    }

    /// Inverse of [`AnnulusElement::to_s_basis`].
    pub fn from_s_basis(s: &BTreeMap<u32, BigInt>) -> Self {
        s.iter().fold(Self::zero(), |acc, (&n, c)| {
            &acc + &chebyshev(ChebKind::S, n).scale(c)
        })
    }
}

impl Add for &AnnulusElement {
    type Output = AnnulusElement;
    fn add(self, rhs: &AnnulusElement) -> AnnulusElement {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Neg for &AnnulusElement {
    type Output = AnnulusElement;
    fn neg(self) -> AnnulusElement {
        self.scale(&-BigInt::one())
    }
}

impl Sub for &AnnulusElement {
    type Output = AnnulusElement;
    fn sub(self, rhs: &AnnulusElement) -> AnnulusElement {
        self + &(-rhs)
    }
}

impl Mul for &AnnulusElement {
    type Output = AnnulusElement;
    fn mul(self, rhs: &AnnulusElement) -> AnnulusElement {
        let mut out = AnnulusElement::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                out.add_term(i + j, a * b);
            }
        }
        out
    }
}

impl fmt::Display for AnnulusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&k, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

/// `T_n` or `S_n` by the shared recurrence `P_n = z P_{n-1} - P_{n-2}`.
pub fn chebyshev(kind: ChebKind, n: u32) -> AnnulusElement {
    let (mut prev, mut cur) = match kind {
        ChebKind::T => (AnnulusElement::monomial(2, 0), AnnulusElement::z()),
        ChebKind::S => (AnnulusElement::one(), AnnulusElement::z()),
    };
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&AnnulusElement::z() * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Thread `p` along `copies` parallel copies of the core.
pub fn thread(p: &AnnulusElement, copies: u32) -> AnnulusElement {
    p.pow(copies)
}

/// Thread one polynomial along each of several parallel copies of the core.
pub fn thread_parallel(ps: &[AnnulusElement]) -> AnnulusElement {
    ps.iter().fold(AnnulusElement::one(), |acc, p| &acc * p)
}

/// Rewrite `S_m` (any integer `m`) as `sign * S_k` with `k` an admissible
/// color for odd `n`, or `None` when the class vanishes.
pub fn reduce_index(m: i64, n: u32) -> Result<Option<(i32, u32)>, AnnulusError> {
    if n % 2 == 0 {
        return Err(AnnulusError::EvenN(n));
    }
    let n = n as i64;
    let (mut m, mut sign) = (m, 1);
    loop {
        if m == -1 || m == n - 1 {
            return Ok(None);
        }
        if m <= -2 {
            m = -m - 2;
            sign = -sign;
        } else if m >= n {
            m = n - 2 - m;
        } else if m % 2 == 1 {
            m = n - 2 - m;
        } else {
            return Ok(Some((sign, m as u32)));
        }
    }
}

/// The same reduction for even `n`, where the admissible colors are
/// `0..=n/2-2`: `S_{n/2-1} = 0` and `S_{n-2-m} = -S_m`.
fn reduce_index_even(m: i64, n: u32) -> Option<(i32, u32)> {
    let r = (n / 2) as i64;
    let period = 2 * r;
    // S_{m + 2r} = S_m, from the two reflections
    let mut m = m.rem_euclid(period);
    let mut sign = 1;
    if m == r - 1 || m == period - 1 {
        return None;
    }
    if m >= r {
        m = 2 * r - 2 - m;
        sign = -sign;
    }
    Some((sign, m as u32))
}

pub(crate) fn reduce_s_map(
    s: &BTreeMap<u32, BigInt>,
    n: u32,
) -> Result<BTreeMap<u32, BigInt>, AnnulusError> {
    let mut out: BTreeMap<u32, BigInt> = BTreeMap::new();
    for (&m, c) in s {
        let red = if n % 2 == 1 {
            reduce_index(m as i64, n)?
        } else {
            reduce_index_even(m as i64, n)
        };
        if let Some((sign, k)) = red {
            let slot = out.entry(k).or_default();
            if sign > 0 {
                *slot += c;
            } else {
                *slot -= c;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Canonical representative of `x` modulo the root-of-unity relations,
/// as an `S`-basis expansion supported on the admissible colors.
pub fn reduce_wrt(x: &AnnulusElement, n: u32) -> Result<BTreeMap<u32, BigInt>, AnnulusError> {
    if n % 2 == 0 {
        return Err(AnnulusError::EvenN(n));
    }
    reduce_s_map(&x.to_s_basis(), n)
}

/// Action of threading `p` around a curve colored `w`: the reduced
/// expansion of `p(z) * S_w`.
///
/// For even `n` this uses the reduction `S_{n/2-1} = 0`,
/// `S_{n-2-m} = -S_m` on the colors `0..=n/2-2`.
pub fn curve_action(
    w: u32,
    p: &AnnulusElement,
    n: u32,
) -> Result<BTreeMap<u32, BigInt>, AnnulusError> {
    if !is_admissible_color(w, n) {
        return Err(AnnulusError::InadmissibleColor { w, n });
    }
    let prod = p * &chebyshev(ChebKind::S, w);
    reduce_s_map(&prod.to_s_basis(), n)
}

/// Check that threading `T_n` on a curve colored `w` acts as `-2`.
pub fn shadow_check(w: u32, n: u32) -> Result<Scalar, AnnulusError> {
    if n % 2 == 0 {
        return Err(AnnulusError::EvenN(n));
    }
    let action = curve_action(w, &chebyshev(ChebKind::T, n), n)?;
    let expected = BTreeMap::from([(w, BigInt::from(-2))]);
    if action != expected {
        let got = action
            .iter()
            .map(|(k, c)| format!("{c}*S_{k}"))
            .collect::<Vec<_>>()
            .join(" + ");
        return Err(AnnulusError::ShadowMismatch { w, n, got });
    }
    Ok(Scalar::from_int(-2, ScalarRing::Cyclotomic(n)))
}
