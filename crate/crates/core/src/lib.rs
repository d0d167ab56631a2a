//! Exact division of the stakes of an interrupted game of chance.
//!
//! Every number is an exact [`Rational`]; no solver path touches floating
//! point. The modules:
//!
//! - [`foundations`]: rationals, binomial coefficients, products.
//! - [`triangle`]: the arithmetic triangle and reading divisions off its bases.
//! - [`solver`]: backward induction, feigned and exact-length enumeration,
//!   first-game and last-game values.
//! - [`expectation`]: value of weighted chances, dice renouncement.
//! - [`sim`]: seeded Monte Carlo oracle with a σ-gate.

pub mod error;
pub mod expectation;
pub mod foundations;
pub mod sim;
pub mod solver;
pub mod triangle;

pub use error::{Error, Result};
pub use foundations::Rational;
pub use solver::{Division, GameState};
