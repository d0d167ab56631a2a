//! Dividing the stakes of an interrupted match.
//!
//! Every game is won by exactly one player, each with probability
//! `1/players`. Four routes to the same division are provided:
//!
//! - [`solve_recursive`]: backward induction over game states.
//! - [`solve_feigned`]: play out every remaining game and count sequences.
//! - [`solve_exact_length`]: sum the chances of winning on exactly game `k`.
//! - [`crate::triangle::base_partition`]: split a base of the arithmetic
//!   triangle (two players only).

mod enumeration;
mod recursive;
mod state;
mod values;

pub use enumeration::{
    classify_sequence, exact_length_terms, feigned_tally, solve_exact_length,
    solve_exact_length_with_cap, solve_feigned, solve_feigned_with_cap, ExactLengthTerms,
    WinnerRule, DEFAULT_SEQUENCE_CAP,
};
pub use recursive::solve_recursive;
pub use state::{AdvantageCoefficient, Division, GameState, OutcomeSequence};
pub use values::{
    advantage_to_probability, first_game_value_binomial, first_game_value_product,
    marginal_game_value, series_missing_2_k,
};
