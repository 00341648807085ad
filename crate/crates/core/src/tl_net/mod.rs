//! Temperley-Lieb diagrams, Jones-Wenzl idempotents and closed network
//! evaluation.
//!
//! ```
//! use skeinwrt::scalars::{quantum_integer, ScalarRing};
//! use skeinwrt::tl_net::jones_wenzl;
//!
//! let jw = jones_wenzl(2, ScalarRing::Generic).unwrap();
//! assert_eq!(jw.close_trace(), quantum_integer(3, ScalarRing::Generic));
//! ```

mod element;
mod matching;
mod network;

use thiserror::Error;

pub use element::{jones_wenzl, jones_wenzl_generic, TLElement};
pub use matching::PlanarMatching;
pub use network::{
    colored_loop_value, eval_network, eval_network_with_budget, ColoredNetwork, NetEdge,
    DEFAULT_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TlError {
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("JW_{n} is not defined at a primitive {}-th root of unity", 2 * .big_n)]
    NotDefined { n: usize, big_n: u32 },
    #[error("vertex {vertex}: colors {colors:?} are not admissible")]
    InadmissibleVertex { vertex: String, colors: Vec<u32> },
    #[error("vertex {vertex}: {msg}")]
    BadVertex { vertex: String, msg: String },
    #[error("the rotation system does not describe a planar embedding")]
    NonPlanar,
    #[error("total color {total} exceeds the budget {budget}")]
    BudgetExceeded { total: u32, budget: u32 },
    #[error("network value has a pole at a primitive {}-th root of unity", 2 * .big_n)]
    PoleAtRoot { big_n: u32 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
