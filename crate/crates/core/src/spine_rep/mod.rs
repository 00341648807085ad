//! The representation of the skein algebra of a closed surface, in the
//! basis of admissible colorings of a spine of a handlebody it bounds.
//!
//! ```
//! use skeinwrt::spine_rep::{dim, standard_spine};
//!
//! let theta = standard_spine(2).unwrap();
//! assert_eq!(dim(&theta, 5), 5);
//! ```

mod burnside;
mod flip;
mod matrix;
mod operators;
mod reduce;
mod spine;
mod weights;

use thiserror::Error;

use crate::chebyshev_annulus::AnnulusError;
use crate::recoupling::RecouplingError;

pub use burnside::{
    algebra_span, curve_operators, BurnsideBudget, verify_irreducible, verify_shadow, IrreducibilityReport,
    NamedOperator, ShadowEntry, ShadowReport, DEFAULT_MAX_DIM,
};
pub use flip::{conjugate, flip, flip_spine, flip_symbol, is_flippable, Flip};
pub use matrix::OperatorMatrix;
pub use operators::SpineRep;
pub use reduce::{
    complexity, delete_zero_edge, reduce_step, reduce_trace, Complexity, ReductionCase,
    ReductionMove,
};
pub use spine::{standard_spine, Component, Dart, PartialSpine};
pub use weights::{dim, enumerate_weights, is_admissible, WeightSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpineError {
    #[error("genus {0} is not supported (need genus >= 1)")]
    UnsupportedGenus(u32),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex}: {msg}")]
    BadVertex { vertex: String, msg: String },
    #[error("no component named {0}")]
    UnknownComponent(String),
    #[error("weights {0} are not admissible")]
    Inadmissible(String),
    #[error("edge {0} is a loop and cannot be flipped")]
    NonFlippableEdge(String),
    #[error("no spine curve runs along edge {0}")]
    IncompatibleComponent(String),
    #[error("dimension {dim} exceeds the budget {budget}")]
    DimensionBudgetExceeded { dim: usize, budget: usize },
    #[error("only odd N is supported here (got N={0})")]
    EvenN(u32),
    #[error("reduction stuck: {0}")]
    ReductionStuck(String),
    #[error(transparent)]
    Recoupling(#[from] RecouplingError),
    #[error(transparent)]
    Annulus(#[from] AnnulusError),
}
