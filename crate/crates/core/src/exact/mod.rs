//! Exact arithmetic: rationals, cyclotomic fields and matrices over them.

mod cyclotomic;
mod matrix;
mod scalar;

pub use cyclotomic::{quantum_integer, ComplexFloat, Cyclo, CycloField};
pub use matrix::{EchelonBasis, Matrix};
pub use scalar::{Conjugate, Scalar};


use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("sign of zero is indeterminate")]
    Indeterminate,
    #[error("parse error: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests;
