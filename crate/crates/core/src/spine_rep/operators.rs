//! Curve operators on the basis indexed by admissible weight systems.

use std::collections::HashMap;

use crate::chebyshev_annulus::{curve_action, reduce_s_map, AnnulusElement};
use crate::recoupling::{is_admissible_weight, tet, theta, RecouplingError, SixJ};
use crate::scalars::{Scalar, ScalarRing};
use crate::tl_net::colored_loop_value;

use super::matrix::OperatorMatrix;
use super::spine::{Component, PartialSpine};
use super::weights::{enumerate_weights, WeightSystem};
use super::SpineError;

/// The representation space of a spine at level `n`, with its ordered basis.
#[derive(Debug, Clone)]
pub struct SpineRep {
    spine: PartialSpine,
    n: u32,
    basis: Vec<WeightSystem>,
    index: HashMap<WeightSystem, usize>,
}

impl SpineRep {
    pub fn new(spine: PartialSpine, n: u32) -> Self {
        let basis = enumerate_weights(&spine, n);
        let index = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        SpineRep {
            spine,
            n,
            basis,
            index,
        }
    }

    pub fn spine(&self) -> &PartialSpine {
        &self.spine
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ring(&self) -> ScalarRing {
        ScalarRing::Cyclotomic(self.n)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[WeightSystem] {
        &self.basis
    }

    pub fn index_of(&self, w: &WeightSystem) -> Option<usize> {
        self.index.get(w).copied()
    }

    fn weight(w: &WeightSystem, c: Component) -> u32 {
        match c {
            Component::Edge(e) => w.edges[e],
            Component::Circle(i) => w.circles[i],
        }
    }

    /// The curve bounding a meridian disk of `c`, threaded once. It acts
    /// diagonally by `-(A^{2(w+1)} + A^{-2(w+1)})`.
    pub fn boundary_curve_operator(&self, c: Component) -> OperatorMatrix {
        let ring = self.ring();
        let diag = self
            .basis
            .iter()
            .map(|w| {
                let k = 2 * (Self::weight(w, c) as i64 + 1);
                -(&Scalar::a_power(k, ring) + &Scalar::a_power(-k, ring))
            })
            .collect();
        OperatorMatrix::diagonal(diag, ring)
    }

    /// The core of a circle, or a curve parallel to a loop edge, threaded
    /// by `p`.
    pub fn spine_curve_operator(
        &self,
        c: Component,
        p: &AnnulusElement,
    ) -> Result<OperatorMatrix, SpineError> {
        let ring = self.ring();
        let mut m = OperatorMatrix::zero(self.dim(), ring);
        match c {
            Component::Circle(i) => {
                for (col, w) in self.basis.iter().enumerate() {
                    for (k, coef) in curve_action(w.circles[i], p, self.n)? {
                        let mut w2 = w.clone();
                        w2.circles[i] = k;
                        self.accumulate(&mut m, &w2, col, &Scalar::from_bigint(coef, ring));
                    }
                }
            }
            Component::Edge(e) => {
                let stem = self.spine.loop_stem(e).ok_or_else(|| {
                    SpineError::IncompatibleComponent(self.spine.edge_name(e).to_string())
                })?;
                let s = reduce_s_map(&p.to_s_basis(), self.n)?;
                for (col, w) in self.basis.iter().enumerate() {
                    let (a, f) = (w.edges[e], w.edges[stem]);
                    for (&k, coef) in &s {
                        for (a2, fused) in self.loop_fusion(a, k, f)? {
                            let mut w2 = w.clone();
                            w2.edges[e] = a2;
                            let x = &Scalar::from_bigint(coef.clone(), ring) * &fused;
                            self.accumulate(&mut m, &w2, col, &x);
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// Fuse a strand colored `k` into a loop colored `a` whose stem is
    /// colored `f`: the coefficients of the resulting loop colors `a2`.
    fn loop_fusion(&self, a: u32, k: u32, f: u32) -> Result<Vec<(u32, Scalar)>, SpineError> {
        let ring = self.ring();
        let n = self.n;
        let mut out = Vec::new();
        for a2 in a.abs_diff(k)..=a + k {
            if !is_admissible_weight([a, k, a2], n) || !is_admissible_weight([a2, a2, f], n) {
                continue;
            }
            let th = theta(a, k, a2, ring)?;
            let pole = |_| RecouplingError::PoleAtRoot(n);
            let fuse = colored_loop_value(a2, ring).checked_div(&th).map_err(pole)?;
            let tri = tet(SixJ::new(a, a, k, a2, a2, f), ring)?
                .checked_div(&theta(a2, a2, f, ring)?)
                .map_err(pole)?;
            out.push((a2, &fuse * &tri));
        }
        Ok(out)
    }

    fn accumulate(&self, m: &mut OperatorMatrix, w2: &WeightSystem, col: usize, x: &Scalar) {
        if x.is_zero() {
            return;
        }
        let row = self
            .index_of(w2)
            .expect("curve operators preserve admissibility");
        let s = m.get(row, col) + x;
        m.set(row, col, s);
    }

    /// Components that carry a spine curve: circles and loop edges.
    pub fn curve_components(&self) -> Vec<Component> {
        self.spine
            .components()
            .into_iter()
            .filter(|&c| match c {
                Component::Circle(_) => true,
                Component::Edge(e) => self.spine.is_loop(e),
            })
            .collect()
    }
}
