//! Dense square matrices over a scalar ring.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::chebyshev_annulus::AnnulusElement;
use crate::scalars::{Scalar, ScalarRing};

/// A `dim x dim` matrix. Column `w` holds the image of basis vector `b_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    dim: usize,
    ring: ScalarRing,
    entries: Vec<Scalar>,
}

impl OperatorMatrix {
    pub fn zero(dim: usize, ring: ScalarRing) -> Self {
        OperatorMatrix {
            dim,
            ring,
            entries: vec![Scalar::zero(ring); dim * dim],
        }
    }

    pub fn identity(dim: usize, ring: ScalarRing) -> Self {
        Self::scalar(dim, &Scalar::one(ring))
    }

    pub fn scalar(dim: usize, c: &Scalar) -> Self {
        let mut m = Self::zero(dim, c.ring());
        for i in 0..dim {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn diagonal(diag: Vec<Scalar>, ring: ScalarRing) -> Self {
        let mut m = Self::zero(diag.len(), ring);
        for (i, c) in diag.into_iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> ScalarRing {
        self.ring
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, c: Scalar) {
        assert_eq!(c.ring(), self.ring, "scalar ring mismatch");
        self.entries[row * self.dim + col] = c;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        OperatorMatrix {
            dim: self.dim,
            ring: self.ring,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    /// Evaluate the annulus polynomial `p` at this matrix.
    pub fn eval_poly(&self, p: &AnnulusElement) -> Self {
        let Some(deg) = p.degree() else {
            return Self::zero(self.dim, self.ring);
        };
        let mut acc = Self::zero(self.dim, self.ring);
        for k in (0..=deg).rev() {
            acc = &acc * self;
            let c = Scalar::from_bigint(p.coeff(k), self.ring);
            if !c.is_zero() {
                acc = &acc + &Self::scalar(self.dim, &c);
            }
        }
        acc
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        assert_eq!(self.ring, other.ring, "scalar ring mismatch");
    }
}

impl Add for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn add(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.check(rhs);
        OperatorMatrix {
            dim: self.dim,
            ring: self.ring,
            entries: self.entries.iter().zip(&rhs.entries).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn sub(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.check(rhs);
        OperatorMatrix {
            dim: self.dim,
            ring: self.ring,
            entries: self.entries.iter().zip(&rhs.entries).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul for &OperatorMatrix {
    type Output = OperatorMatrix;
    fn mul(self, rhs: &OperatorMatrix) -> OperatorMatrix {
        self.check(rhs);
        let d = self.dim;
        let mut out = OperatorMatrix::zero(d, self.ring);
        for i in 0..d {
            for k in 0..d {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let y = rhs.get(k, j);
                    if !y.is_zero() {
                        let s = out.get(i, j) + &(x * y);
                        out.set(i, j, s);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
