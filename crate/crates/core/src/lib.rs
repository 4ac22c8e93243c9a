//! Exact stable ranks by rational linear programming.
//!
//! Every quantity in this crate is an infimum of a ratio of linear forms over
//! nonnegative integer weight vectors. Such a fractional program becomes a
//! single linear program once the denominator is normalised to one, and the
//! linear program is solved exactly over the rationals by [`lp`].
//!
//! - [`tensor`]: torus-restricted G-stable rank of tensors, symmetric
//!   G-stable rank of forms, and diagonal SL-semistability.
//! - [`ideal`]: sparse polynomials, weighted orders, T-stable rank of ideals
//!   at the origin, linear changes of local parameters, and the log canonical
//!   threshold of monomial ideals through the Newton polyhedron.
//! - [`verify`]: randomized and anchored checks of the identities and
//!   inequalities relating these quantities.
//! - [`cli`]: the text input format and the `stablerank` command line.
//!
//! The runnable programs under `examples/` walk through each capability.

pub mod cli;
pub mod error;
pub mod ideal;
pub mod lp;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use lp::{
    lp_feasible, lp_minimize, minimize_slope, oracle_minimum_over_vertices, LinearProgram,
    LpOutcome, SlopeResult, SlopeValue,
};

/// Exact arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a [`Rational`] from small integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
