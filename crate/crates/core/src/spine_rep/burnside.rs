//! Irreducibility via the Burnside span, and the shadow check on matrices.

use std::collections::VecDeque;

use crate::chebyshev_annulus::{chebyshev, AnnulusElement, ChebKind};
use crate::scalars::Scalar;

use super::flip::{conjugate, flip, is_flippable};
use super::matrix::OperatorMatrix;
use super::operators::SpineRep;
use super::spine::{standard_spine, Component};
use super::SpineError;

/// Default bound on the dimension accepted by [`verify_irreducible`].
pub const DEFAULT_MAX_DIM: usize = 8;

/// Limits for the span search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BurnsideBudget {
    pub max_dim: usize,
    /// Longest word multiplied out; `None` means `2 d^2`.
    pub max_word_len: Option<usize>,
}

impl Default for BurnsideBudget {
    fn default() -> Self {
        BurnsideBudget {
            max_dim: DEFAULT_MAX_DIM,
            max_word_len: None,
        }
    }
}

/// A named curve operator.
#[derive(Debug, Clone)]
pub struct NamedOperator {
    pub name: String,
    pub matrix: OperatorMatrix,
}

fn local_operators(
    rep: &SpineRep,
    threads: &[(&str, AnnulusElement)],
) -> Result<Vec<NamedOperator>, SpineError> {
    let spine = rep.spine();
    let mut out = Vec::new();
    for c in spine.components() {
        out.push(NamedOperator {
            name: format!("boundary({})", spine.component_name(c)),
            matrix: rep.boundary_curve_operator(c),
        });
    }
    for c in rep.curve_components() {
        let kind = match c {
            Component::Circle(_) => "core",
            Component::Edge(_) => "loop",
        };
        for (label, p) in threads {
            out.push(NamedOperator {
                name: format!("{kind}({})^{label}", spine.component_name(c)),
                matrix: rep.spine_curve_operator(c, p)?,
            });
        }
    }
    Ok(out)
}

/// Curve operators on `rep`: boundary curves of every component, spine
/// curves threaded by each of `threads`, and the same operators on every
/// single-flip neighbour transported back to `rep`'s basis.
pub fn curve_operators(
    rep: &SpineRep,
    threads: &[(&str, AnnulusElement)],
) -> Result<Vec<NamedOperator>, SpineError> {
    let mut out = local_operators(rep, threads)?;
    for e in 0..rep.spine().edge_count() {
        if !is_flippable(rep.spine(), e) {
            continue;
        }
        let fwd = flip(rep, e)?;
        let back = flip(&fwd.target, e)?;
        let name = rep.spine().edge_name(e);
        let prefix = format!("flip({name})");
        let own_boundary = format!("boundary({name})");
        for op in local_operators(&fwd.target, threads)? {
            if op.name.starts_with("boundary") && op.name != own_boundary {
                // unchanged by the flip
                continue;
            }
            out.push(NamedOperator {
                name: format!("{prefix}:{}", op.name),
                matrix: conjugate(&fwd, &back, &op.matrix),
            });
        }
    }
    Ok(out)
}

/// Row-echelon basis of a subspace of `K^len`.
struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&c * r);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero in a field");
        let v = v.iter().map(|x| x * &inv).collect();
        self.rows.push((p, v));
        true
    }
}

#[derive(Debug, Clone)]
pub struct IrreducibilityReport {
    pub genus: u32,
    pub n: u32,
    pub dim: usize,
    /// Dimension of the algebra generated by the curve operators.
    pub span: usize,
    pub generators: usize,
    /// Words multiplied out during the search.
    pub words: usize,
}

impl IrreducibilityReport {
    /// A full matrix algebra proves irreducibility; a smaller span is
    /// inconclusive because only some curves were used.
    pub fn irreducible(&self) -> bool {
        self.span == self.dim * self.dim
    }
}

/// Dimension of the algebra generated by `gens` (with the identity),
/// found by breadth-first multiplication of words.
/// Words longer than `max_len` are not explored.
pub fn algebra_span(gens: &[OperatorMatrix], dim: usize, max_len: usize) -> (usize, usize) {
    let Some(first) = gens.first() else {
        return (usize::from(dim > 0), 0);
    };
    let ring = first.ring();
    let target = dim * dim;
    let mut ech = Echelon { rows: Vec::new() };
    let id = OperatorMatrix::identity(dim, ring);
    ech.insert(id.entries().to_vec());
    let mut queue = VecDeque::from([(id, 0usize)]);
    let mut words = 0;
    while let Some((x, len)) = queue.pop_front() {
        if ech.rows.len() == target || len >= max_len {
            break;
        }
        for g in gens {
            let y = g * &x;
            words += 1;
            if ech.insert(y.entries().to_vec()) {
                queue.push_back((y, len + 1));
                if ech.rows.len() == target {
                    break;
                }
            }
        }
    }
    (ech.rows.len(), words)
}

fn level_threads(n: u32) -> Vec<(&'static str, AnnulusElement)> {
    vec![("z", AnnulusElement::z()), ("S2", chebyshev(ChebKind::S, 2))]
        .into_iter()
        .filter(|(l, _)| n % 2 == 1 || *l == "z")
        .collect()
}

/// Check irreducibility of the genus-`genus` representation at level `n`
/// by computing the span of products of curve operators.
pub fn verify_irreducible(
    genus: u32,
    n: u32,
    budget: BurnsideBudget,
) -> Result<IrreducibilityReport, SpineError> {
    let rep = SpineRep::new(standard_spine(genus)?, n);
    let dim = rep.dim();
    if dim > budget.max_dim {
        return Err(SpineError::DimensionBudgetExceeded {
            dim,
            budget: budget.max_dim,
        });
    }
    let ops = curve_operators(&rep, &level_threads(n))?;
    let gens: Vec<OperatorMatrix> = ops.into_iter().map(|o| o.matrix).collect();
    let max_len = budget.max_word_len.unwrap_or(2 * dim * dim);
    let (span, words) = algebra_span(&gens, dim, max_len);
    Ok(IrreducibilityReport {
        genus,
        n,
        dim,
        span,
        generators: gens.len(),
        words,
    })
}

/// `T_n` applied to one curve operator.
#[derive(Debug, Clone)]
pub struct ShadowEntry {
    pub curve: String,
    pub diagonal: Vec<Scalar>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct ShadowReport {
    pub genus: u32,
    pub n: u32,
    pub dim: usize,
    pub entries: Vec<ShadowEntry>,
}

impl ShadowReport {
    pub fn pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// Check that every curve operator `X` (threaded once) satisfies
/// `T_n(X) = -2 Id`. Only odd `n` is supported.
pub fn verify_shadow(genus: u32, n: u32) -> Result<ShadowReport, SpineError> {
    if n % 2 == 0 {
        return Err(SpineError::EvenN(n));
    }
    let rep = SpineRep::new(standard_spine(genus)?, n);
    let t = chebyshev(ChebKind::T, n);
    let minus_two = OperatorMatrix::scalar(rep.dim(), &Scalar::from_int(-2, rep.ring()));
    let entries = curve_operators(&rep, &[("z", AnnulusElement::z())])?
        .into_iter()
        .map(|op| {
            let m = op.matrix.eval_poly(&t);
            ShadowEntry {
                curve: op.name,
                diagonal: (0..rep.dim()).map(|i| m.get(i, i).clone()).collect(),
                pass: m == minus_two,
            }
        })
        .collect();
    Ok(ShadowReport {
        genus,
        n,
        dim: rep.dim(),
        entries,
    })
}
