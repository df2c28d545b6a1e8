//! Weak quasi-Hopf structure of the `A_1` level-k category: q-Racah F- and
//! R-symbols, pentagon and hexagon suites, a propagation solver used as an
//! independent oracle, the explicit algebra `A_W = ⊕ End(W_λ)` with its
//! non-unital coproduct, and Drinfeld twists.

mod algebra;
mod rigidity;
mod sixj;
mod solver;
mod suites;
#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::alcove::AlcoveError;
use crate::exact::ExactError;

pub use algebra::{
    apply_twist, build_aw, coboundary_twist, transvectant, DeltaOneBlock, WeakAxiomReport, WeakQuasiBialgebra,
    MAX_AW_LEVEL,
};
pub use rigidity::{
    gauge_rigidity_experiment, negative_controls, random_gauge, GaugeInvariants, NegativeControlReport,
    RigidityReport,
};
pub use sixj::{
    admissible, admissible_fkey, fkeys, qsixj, rsymbol, triples, FKey, QRacah, SixJTable, Triple, TwistData,
};
pub use solver::{
    brute_force_pentagon, gauge_equivalent, rederive_from_special, BruteForceReport, GaugeMap, Seeds, Solver,
    UniquenessReport,
};
pub use suites::{
    hexagon_suite, pentagon_suite, unitarity_float_check, weighted_unitarity_violations, AxiomReport, AxiomSummary,
    Equation, Sym,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WqhError {
    #[error(transparent)]
    Alcove(#[from] AlcoveError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("F- and R-symbols are built for A1 only, got {0}")]
    UnsupportedType(String),
    #[error("labels {0:?} are not admissible")]
    Inadmissible(Vec<u8>),
    #[error("twist vanishes on vertex {0:?}")]
    SingularTwist(Vec<u8>),
    #[error("propagation stalled with {0} unknowns left")]
    Stalled(usize),
    #[error("inconsistent constraint: {0}")]
    Inconsistent(String),
    #[error("A_W is built for level at most {max}, got {level}")]
    LevelTooLarge { level: u8, max: u8 },
}
