//! Theta and tetrahedron coefficients and quantum 6j-symbols in closed form.
//!
//! Conventions: a loop colored `n` evaluates to `Delta_n = (-1)^n [n+1]`.
//! The 6j-symbol
//!
//! ```text
//! { a b e }
//! { c d f }
//! ```
//!
//! is the coefficient of the diagram with new edge `e` (vertices `(b,c,e)`
//! and `(a,d,e)`) when the diagram with old edge `f` (vertices `(a,b,f)` and
//! `(c,d,f)`) is rewritten:
//!
//! ```text
//! {a b e; c d f} = Tet[a b e; c d f] * Delta_e / (theta(a,d,e) * theta(b,c,e))
//! ```
//!
//! All three closed forms agree with direct network evaluation in
//! [`crate::tl_net`].

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use thiserror::Error;

use crate::scalars::{quantum_factorial, Scalar, ScalarRing};
use crate::tl_net::colored_loop_value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecouplingError {
    #[error("colors {0:?} do not form an admissible triple")]
    Inadmissible([u32; 3]),
    #[error("a denominator vanishes at a primitive {}-th root of unity", 2 * .0)]
    PoleAtRoot(u32),
}

/// Parity and triangle conditions.
pub fn is_admissible_triple(a: u32, b: u32, c: u32) -> bool {
    (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b
}

/// Bound on a single edge or circle color at level `n`.
pub fn is_admissible_color(w: u32, n: u32) -> bool {
    if n % 2 == 1 {
        w % 2 == 0 && w + 2 <= n
    } else {
        w + 2 <= n / 2
    }
}

/// The admissible colors at level `n`, increasing.
pub fn admissible_colors(n: u32) -> Vec<u32> {
    (0..n).filter(|&w| is_admissible_color(w, n)).collect()
}

/// Whether the colors around one trivalent vertex are `n`-admissible.
pub fn is_admissible_weight(colors: [u32; 3], n: u32) -> bool {
    let [a, b, c] = colors;
    let sum = a + b + c;
    let bounded = if n % 2 == 1 {
        sum + 4 <= 2 * n
    } else {
        sum + 4 <= n
    };
    is_admissible_triple(a, b, c) && colors.iter().all(|&w| is_admissible_color(w, n)) && bounded
}

/// Smallest new-edge color in a flip: `max(|a - d|, |b - c|)`.
pub fn minimal_flip_color(a: u32, b: u32, c: u32, d: u32) -> u32 {
    a.abs_diff(d).max(b.abs_diff(c))
}

/// The 6j-symbol arguments in array order `{a b e; c d f}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SixJ {
    pub a: u32,
    pub b: u32,
    pub e: u32,
    pub c: u32,
    pub d: u32,
    pub f: u32,
}

impl SixJ {
    pub fn new(a: u32, b: u32, e: u32, c: u32, d: u32, f: u32) -> Self {
        SixJ { a, b, e, c, d, f }
    }

    /// The four vertex triples: two around `f`, two around `e`.
    pub fn triples(&self) -> [[u32; 3]; 4] {
        let SixJ { a, b, e, c, d, f } = *self;
        [[a, b, f], [c, d, f], [b, c, e], [a, d, e]]
    }

    pub fn is_admissible(&self) -> bool {
        self.triples().iter().all(|&[x, y, z]| is_admissible_triple(x, y, z))
    }
}

impl fmt::Display for SixJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{} {} {}; {} {} {}}}",
            self.a, self.b, self.e, self.c, self.d, self.f
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Theta,
    Tet,
    SixJ,
}

type MemoKey = (Kind, [u32; 6], ScalarRing);

fn memo() -> &'static RwLock<HashMap<MemoKey, Result<Scalar, RecouplingError>>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, Result<Scalar, RecouplingError>>>> =
        OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn memoized(
    key: MemoKey,
    compute: impl FnOnce() -> Result<Scalar, RecouplingError>,
) -> Result<Scalar, RecouplingError> {
    if let Some(v) = memo().read().unwrap().get(&key) {
        return v.clone();
    }
    let v = compute();
    memo().write().unwrap().insert(key, v.clone());
    v
}

/// Evaluate in `ring` when possible, falling back to the generic value
/// specialized at the root of unity when an intermediate denominator
/// vanishes there.
fn in_ring(
    ring: ScalarRing,
    direct: impl Fn(ScalarRing) -> Option<Scalar>,
) -> Result<Scalar, RecouplingError> {
    if let Some(v) = direct(ring) {
        return Ok(v);
    }
    let ScalarRing::Cyclotomic(n) = ring else {
        unreachable!("generic closed forms have no poles")
    };
    direct(ScalarRing::Generic)
        .expect("generic closed forms have no poles")
        .to_ring(ring)
        .map_err(|_| RecouplingError::PoleAtRoot(n))
}

fn fact(k: u32, ring: ScalarRing) -> Scalar {
    quantum_factorial(k, ring)
}

fn ratio(num: Scalar, dens: &[Scalar]) -> Option<Scalar> {
    let mut den = Scalar::one(num.ring());
    for d in dens {
        den = &den * d;
    }
    num.checked_div(&den).ok()
}

fn theta_direct(a: u32, b: u32, c: u32, ring: ScalarRing) -> Option<Scalar> {
    let m = (a + b - c) / 2;
    let n = (b + c - a) / 2;
    let p = (a + c - b) / 2;
    let num = &(&(&fact(m + n + p + 1, ring) * &fact(m, ring)) * &fact(n, ring)) * &fact(p, ring);
    let v = ratio(num, &[fact(m + n, ring), fact(n + p, ring), fact(m + p, ring)])?;
    Some(if (m + n + p) % 2 == 0 { v } else { -v })
}

/// Value of the theta network with edge colors `a, b, c`.
pub fn theta(a: u32, b: u32, c: u32, ring: ScalarRing) -> Result<Scalar, RecouplingError> {
    if !is_admissible_triple(a, b, c) {
        return Err(RecouplingError::Inadmissible([a, b, c]));
    }
    memoized((Kind::Theta, [a, b, c, 0, 0, 0], ring), || {
        in_ring(ring, |r| theta_direct(a, b, c, r))
    })
}

fn tet_direct(s: SixJ, ring: ScalarRing) -> Option<Scalar> {
    let SixJ { a, b, e, c, d, f } = s;
    let lows = [(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2];
    let highs = [(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2];
    let lo = *lows.iter().max().unwrap();
    let hi = *highs.iter().min().unwrap();
    let mut inner = Scalar::one(ring);
    for &h in &highs {
        for &l in &lows {
            inner = &inner * &fact(h - l, ring);
        }
    }
    let mut outer = Scalar::one(ring);
    for x in [a, b, c, d, e, f] {
        outer = &outer * &fact(x, ring);
    }
    let pre = inner.checked_div(&outer).ok()?;
    let mut sum = Scalar::zero(ring);
    for k in lo..=hi {
        let dens: Vec<Scalar> = lows
            .iter()
            .map(|&l| fact(k - l, ring))
            .chain(highs.iter().map(|&h| fact(h - k, ring)))
            .collect();
        let term = ratio(fact(k + 1, ring), &dens)?;
        sum = if k % 2 == 0 { &sum + &term } else { &sum - &term };
    }
    Some(&pre * &sum)
}

/// Value of the tetrahedral network with vertex triples `(a,d,e)`,
/// `(b,c,e)`, `(a,b,f)` and `(c,d,f)`.
pub fn tet(s: SixJ, ring: ScalarRing) -> Result<Scalar, RecouplingError> {
    if let Some(bad) = s.triples().into_iter().find(|&[x, y, z]| !is_admissible_triple(x, y, z)) {
        return Err(RecouplingError::Inadmissible(bad));
    }
    let SixJ { a, b, e, c, d, f } = s;
    memoized((Kind::Tet, [a, b, e, c, d, f], ring), || {
        in_ring(ring, |r| tet_direct(s, r))
    })
}

fn six_j_direct(s: SixJ, ring: ScalarRing) -> Option<Scalar> {
    let t = tet_direct(s, ring)?;
    let num = &t * &colored_loop_value(s.e, ring);
    ratio(num, &[theta_direct(s.a, s.d, s.e, ring)?, theta_direct(s.b, s.c, s.e, ring)?])
}

/// The 6j-symbol `{a b e; c d f}`.
pub fn six_j(s: SixJ, ring: ScalarRing) -> Result<Scalar, RecouplingError> {
    if let Some(bad) = s.triples().into_iter().find(|&[x, y, z]| !is_admissible_triple(x, y, z)) {
        return Err(RecouplingError::Inadmissible(bad));
    }
    let SixJ { a, b, e, c, d, f } = s;
    memoized((Kind::SixJ, [a, b, e, c, d, f], ring), || {
        in_ring(ring, |r| six_j_direct(s, r))
    })
}
