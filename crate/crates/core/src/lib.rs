//! Exact skein-theoretic computations for the quantum representations of
//! surface skein algebras at roots of unity.

pub mod chebyshev_annulus;
pub mod error;
pub mod recoupling;
pub mod scalars;
pub mod spine_rep;
pub mod tl_net;

pub use error::Error;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/temperley_lieb.md")]
    mod temperley_lieb {}
    #[doc = include_str!("../../../book/src/recoupling.md")]
    mod recoupling {}
    #[doc = include_str!("../../../book/src/spines.md")]
    mod spines {}
    #[doc = include_str!("../../../book/src/annulus.md")]
    mod annulus {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
