//! The cyclotomic field `Q[A] / Phi_{2N}(A)`, where `A` is a primitive
//! `2N`-th root of unity.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::poly::IntPoly;

/// Static data for one field: the modulus and the residues of `A^k`.
pub struct CycField {
    n: u32,
    modulus: IntPoly,
    degree: usize,
    // residues of A^k mod Phi_{2N} for 0 <= k < 2N
    powers: Vec<Vec<BigInt>>,
}

fn registry() -> &'static RwLock<HashMap<u32, Arc<CycField>>> {
    static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<CycField>>>> = OnceLock::new();
    FIELDS.get_or_init(Default::default)
}

/// `Phi_m(x)`, computed as `(x^m - 1) / prod_{d | m, d < m} Phi_d(x)`.
pub fn cyclotomic_poly(m: u32) -> IntPoly {
    let mut p = IntPoly::monomial(BigInt::one(), m as usize).sub(&IntPoly::one());
    for d in 1..m {
        if m % d == 0 {
            p = p.exact_div(&cyclotomic_poly(d));
        }
    }
    p
}

impl CycField {
    /// The shared field for `A` a primitive `2n`-th root of unity.
    pub fn get(n: u32) -> Arc<CycField> {
        assert!(n >= 1, "cyclotomic field needs N >= 1");
        if let Some(f) = registry().read().unwrap().get(&n) {
            return f.clone();
        }
        let field = Arc::new(Self::build(n));
        registry()
            .write()
            .unwrap()
            .entry(n)
            .or_insert(field)
            .clone()
    }

    fn build(n: u32) -> CycField {
        let modulus = cyclotomic_poly(2 * n);
        let degree = modulus.degree().unwrap();
        let mut powers = Vec::with_capacity(2 * n as usize);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..2 * n {
            powers.push(cur.clone());
            // multiply by A: shift up and fold the overflow back with the monic modulus
            let top = cur.pop().unwrap();
            cur.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, m) in cur.iter_mut().zip(modulus.coeffs()) {
                    *c -= &top * m;
                }
            }
        }
        CycField {
            n,
            modulus,
            degree,
            powers,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `phi(2N)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    fn power(&self, k: i64) -> &[BigInt] {
        &self.powers[k.rem_euclid(2 * self.n as i64) as usize]
    }
}

impl fmt::Debug for CycField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycField(N={})", self.n)
    }
}

/// An element of the cyclotomic field, stored as the rational coefficient
/// vector of its canonical residue (degree below `phi(2N)`).
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CycField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycScalar {}

impl std::hash::Hash for CycScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl CycScalar {
    pub fn zero(n: u32) -> Self {
        let field = CycField::get(n);
        let coeffs = vec![BigRational::zero(); field.degree];
        CycScalar { field, coeffs }
    }

    pub fn from_int(n: u32, c: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(n);
        x.coeffs[0] = BigRational::from_integer(c.into());
        x
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    /// Build from an explicit residue vector of length `phi(2N)`.
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> Self {
        let field = CycField::get(n);
        assert_eq!(coeffs.len(), field.degree, "wrong residue length");
        CycScalar { field, coeffs }
    }

    pub fn a_power(n: u32, k: i64) -> Self {
        let field = CycField::get(n);
        let coeffs = field
            .power(k)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        CycScalar { field, coeffs }
    }

    pub fn from_laurent(n: u32, l: &LaurentPoly) -> Self {
        let field = CycField::get(n);
        let mut acc = vec![BigInt::zero(); field.degree];
        for (k, c) in l.terms() {
            for (a, p) in acc.iter_mut().zip(field.power(k)) {
                if !p.is_zero() {
                    *a += c * p;
                }
            }
        }
        let coeffs = acc.into_iter().map(BigRational::from_integer).collect();
        CycScalar { field, coeffs }
    }

    pub fn from_poly(n: u32, p: &IntPoly) -> Self {
        Self::from_laurent(n, &LaurentPoly::from_poly(p))
    }

    pub fn n(&self) -> u32 {
        self.field.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.field.n, other.field.n,
            "mixing cyclotomic fields of different N"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycScalar {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let d = self.field.degree;
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = prod.drain(..d).collect();
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, p) in coeffs.iter_mut().zip(self.field.power((d + k) as i64)) {
                if !p.is_zero() {
                    *a += &c * BigRational::from_integer(p.clone());
                }
            }
        }
        CycScalar {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Multiply by `A^k`.
    pub fn mul_a_power(&self, k: i64) -> Self {
        self.mul(&Self::a_power(self.field.n, k))
    }

    /// Multiplicative inverse, `None` for zero. Solves `x * y = 1` as a
    /// linear system in the power basis.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.field.degree;
        let n = self.field.n;
        // column j of the multiplication matrix is self * A^j
        let cols: Vec<Vec<BigRational>> = (0..d)
            .map(|j| self.mul_a_power(j as i64).coeffs)
            .collect();
        let mut m: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
                row.push(if i == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let p = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x /= &p;
            }
            for r in 0..d {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=d {
                        let t = &f * &m[col][c];
                        m[r][c] -= t;
                    }
                }
            }
        }
        let coeffs = m.into_iter().map(|mut row| row.pop().unwrap()).collect();
        Some(CycScalar::from_coeffs(n, coeffs))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyc(N={})[", self.field.n)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(10), IntPoly::from_i64s(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic_poly(8), IntPoly::from_i64s(&[1, 0, 0, 0, 1]));
    }

    #[test]
    fn powers_wrap_at_2n() {
        for n in [3, 4, 5, 7] {
            assert!(CycScalar::a_power(n, 2 * n as i64).is_one());
            assert!(!CycScalar::a_power(n, n as i64).is_one());
            assert_eq!(CycScalar::a_power(n, n as i64), CycScalar::from_int(n, -1));
        }
    }

    #[test]
    fn inverse_of_a_unit() {
        let x = CycScalar::from_laurent(7, &LaurentPoly::from_terms(&[(0, 2), (3, 1)]));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
    }
}
