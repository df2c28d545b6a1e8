//! Exact computation and verification of the data of quantum-group fusion
//! categories `C(g, q)` at `q = e^{iπ/(dℓ)}`: alcove fusion rules, modular
//! data, braid representations on truncated powers of the generating
//! representation, the Drinfeld coboundary, and an explicit weak
//! quasi-bialgebra with twists for `sl2`.
//!
//! All core math is generic over the coefficient [`Scalar`](exact::Scalar);
//! the aliases below pin the exact and floating instantiations.

pub mod exact;
pub mod alcove;
pub mod braid;
pub mod wqh;
pub mod lie;

use num_rational::BigRational;

/// Arbitrary-precision rational.
pub type Rational = BigRational;
/// Exact element of a cyclotomic field.
pub type CycloNumber = exact::Cyclo<Rational>;
/// Matrix of exact cyclotomic numbers.
pub type CycloMatrix = exact::Matrix<CycloNumber>;
/// Floating-point shadow of [`CycloNumber`], used by numerical oracles.
pub type CycloF64 = exact::Cyclo<f64>;
/// Floating-point matrix.
pub type MatrixF64 = exact::Matrix<f64>;
