//! Exact numbers: rationals over big integers, binomials, and products.

mod combinatorics;
mod rational;

pub use combinatorics::{choose, power_of_two, product_range};
pub use rational::Rational;
