//! Braid group representations on truncated powers of `V`, pair-level
//! braidings for all supported types, and the Drinfeld coboundary.

mod closure;
mod pair;
mod tower;

use thiserror::Error;

use crate::alcove::AlcoveError;
use crate::exact::ExactError;
use crate::lie::Weight;

pub use closure::{algebra_dimension, Blocks};
pub use pair::{
    coboundary, pair_braiding, pair_braidings, pair_duality, pair_order, CoboundaryMatrix, PairBraiding,
    PairChannel, PairDuality,
};
pub use tower::{centralizer_dimension, duality_report, BraidTower, DualityEntry};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error(transparent)]
    Alcove(#[from] AlcoveError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("path-model towers are built for A1 only, got {0}")]
    UnsupportedType(String),
    #[error("need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("channel {nu} of {lambda} ⊗ V has multiplicity {multiplicity}")]
    MultiplicityChannel { lambda: Weight, nu: Weight, multiplicity: u64 },
}
