//! Linear combinations of planar matchings and the Jones-Wenzl idempotents.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::scalars::{
    loop_value, quantum_integer, IntPoly, LaurentPoly, RatFn, Scalar, ScalarError, ScalarRing,
};

use super::matching::PlanarMatching;
use super::TlError;

/// An element of the Temperley-Lieb algebra on `n` strands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TLElement {
    n: usize,
    ring: ScalarRing,
    terms: BTreeMap<PlanarMatching, Scalar>,
}

impl TLElement {
    pub fn zero(n: usize, ring: ScalarRing) -> Self {
        TLElement {
            n,
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_matching(m: PlanarMatching, ring: ScalarRing) -> Self {
        let mut x = Self::zero(m.n(), ring);
        x.terms.insert(m, Scalar::one(ring));
        x
    }

    pub fn identity(n: usize, ring: ScalarRing) -> Self {
        Self::from_matching(PlanarMatching::identity(n), ring)
    }

    /// The cup-cap generator `e_i`, `1 <= i < n`.
    pub fn cupcap(n: usize, i: usize, ring: ScalarRing) -> Self {
        Self::from_matching(PlanarMatching::cupcap(n, i), ring)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarMatching, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &PlanarMatching) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ring))
    }

    pub fn add_term(&mut self, m: PlanarMatching, c: Scalar) {
        assert_eq!(m.n(), self.n, "strand count mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n, self.ring);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    fn check(&self, other: &Self) -> Result<(), TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        assert_eq!(self.ring, other.ring, "scalar ring mismatch");
        Ok(())
    }

    /// The product `self * other`: `self` drawn on top of `other`.
    pub fn compose(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        if self.ring == ScalarRing::Generic {
            return Ok(self.compose_generic(other));
        }
        let delta = loop_value(self.ring);
        let mut powers = vec![Scalar::one(self.ring)];
        let mut out = Self::zero(self.n, self.ring);
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                let (m, loops) = mx.stack_on(my);
                while powers.len() <= loops {
                    let next = powers.last().unwrap() * &delta;
                    powers.push(next);
                }
                out.add_term(m, &(cx * cy) * &powers[loops]);
            }
        }
        Ok(out)
    }

    // Work with a common denominator so the inner loop is gcd-free.
    fn compose_generic(&self, other: &Self) -> Self {
        let (dx, px) = self.scaled();
        let (dy, py) = other.scaled();
        let delta = LaurentPoly::from_terms(&[(2, -1), (-2, -1)]);
        let mut powers = vec![LaurentPoly::one()];
        let mut acc: BTreeMap<PlanarMatching, LaurentPoly> = BTreeMap::new();
        for (mx, cx) in &px {
            for (my, cy) in &py {
                let (m, loops) = mx.stack_on(my);
                while powers.len() <= loops {
                    let next = powers.last().unwrap() * &delta;
                    powers.push(next);
                }
                let t = &(cx * cy) * &powers[loops];
                *acc.entry(m).or_default() += &t;
            }
        }
        let inv = RatFn::new(IntPoly::one(), dx.mul(&dy));
        let mut out = Self::zero(self.n, ScalarRing::Generic);
        for (m, l) in acc {
            if !l.is_zero() {
                out.add_term(m, Scalar::Generic(RatFn::from_laurent(&l).mul(&inv)));
            }
        }
        out
    }

    /// Write a generic element as `(1/D) * sum p_m m` with `D` in `Z[A]` and
    /// Laurent numerators `p_m`.
    pub fn scaled(&self) -> (IntPoly, Vec<(PlanarMatching, LaurentPoly)>) {
        let coeffs: Vec<(&PlanarMatching, &RatFn)> = self
            .terms
            .iter()
            .map(|(m, c)| (m, c.as_generic().expect("scaled form needs generic scalars")))
            .collect();
        let mut d = IntPoly::one();
        for (_, c) in &coeffs {
            let g = d.gcd(c.denom());
            d = d.mul(&c.denom().exact_div(&g));
        }
        let terms = coeffs
            .into_iter()
            .map(|(m, c)| {
                let p = c.numer().mul(&d.exact_div(c.denom()));
                (m.clone(), LaurentPoly::from_poly(&p))
            })
            .collect();
        (d, terms)
    }

    /// Add `k` straight strands on the right.
    pub fn tensor_identity(&self, k: usize) -> Self {
        let mut out = Self::zero(self.n + k, self.ring);
        for (m, c) in &self.terms {
            out.add_term(m.tensor_identity(k), c.clone());
        }
        out
    }

    /// Markov closure: join top `i` to bottom `i` and evaluate loops.
    pub fn close_trace(&self) -> Scalar {
        let delta = loop_value(self.ring);
        let mut total = Scalar::zero(self.ring);
        for (m, c) in &self.terms {
            total += &(c * &delta.pow(m.closure_loops() as u32));
        }
        total
    }

    /// Move every coefficient into `ring`.
    pub fn to_ring(&self, ring: ScalarRing) -> Result<Self, ScalarError> {
        let mut out = Self::zero(self.n, ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.to_ring(ring)?);
        }
        Ok(out)
    }
}

fn jw_cache() -> &'static RwLock<HashMap<usize, Arc<TLElement>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<TLElement>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Generic Jones-Wenzl idempotent on `n` strands, built by the Wenzl
/// recursion `JW_n = X + ([n-1]/[n]) X e_{n-1} X` with `X = JW_{n-1} (x) 1`.
pub fn jones_wenzl_generic(n: usize) -> Arc<TLElement> {
    if let Some(jw) = jw_cache().read().unwrap().get(&n) {
        return jw.clone();
    }
    let g = ScalarRing::Generic;
    let jw = if n <= 1 {
        TLElement::identity(n, g)
    } else {
        let x = jones_wenzl_generic(n - 1).tensor_identity(1);
        let e = TLElement::cupcap(n, n - 1, g);
        let coef = quantum_integer(n as u32 - 1, g)
            .checked_div(&quantum_integer(n as u32, g))
            .unwrap();
        let xex = x.compose(&e).unwrap().compose(&x).unwrap();
        x.add(&xex.scale(&coef)).unwrap()
    };
    let jw = Arc::new(jw);
    jw_cache().write().unwrap().insert(n, jw.clone());
    jw
}

/// The Jones-Wenzl idempotent `JW_n` in `ring`.
///
/// At a root of unity the generic idempotent is specialized; this fails with
/// [`TlError::NotDefined`] once a quantum integer in a denominator vanishes.
pub fn jones_wenzl(n: usize, ring: ScalarRing) -> Result<TLElement, TlError> {
    let jw = jones_wenzl_generic(n);
    match ring {
        ScalarRing::Generic => Ok((*jw).clone()),
        ScalarRing::Cyclotomic(big_n) => jw
            .to_ring(ring)
            .map_err(|_| TlError::NotDefined { n, big_n }),
    }
}
