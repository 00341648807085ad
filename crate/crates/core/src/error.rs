//! A single error type covering every module.

use thiserror::Error;

use crate::chebyshev_annulus::AnnulusError;
use crate::recoupling::RecouplingError;
use crate::scalars::ScalarError;
use crate::spine_rep::SpineError;
use crate::tl_net::TlError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Tl(#[from] TlError),
    #[error(transparent)]
    Recoupling(#[from] RecouplingError),
    #[error(transparent)]
    Annulus(#[from] AnnulusError),
    #[error(transparent)]
    Spine(#[from] SpineError),
}
