//! Sequence-based divisions: the feigned condition, where every remaining
//! game is assumed played, and the exact-length decomposition, where each
//! sequence stops at its first winner.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::foundations::Rational;

use super::state::{Division, GameState, OutcomeSequence};

/// Default ceiling on `players^length` for enumerating methods.
pub const DEFAULT_SEQUENCE_CAP: u64 = 1 << 24;

/// How a fully played sequence is attributed to winners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WinnerRule {
    /// The first player, scanning games in order, to reach their target.
    /// Games after that point do not count.
    Chronological,
    /// Every player whose end-of-sequence total reaches their target. Can
    /// name several winners for three or more players; kept to reproduce
    /// that mistake, never used for a division.
    TerminalNaive,
}

/// Attributes `seq` to its winner(s) under `rule`.
///
/// `seq` must have exactly `state.max_remaining_games()` rounds.
pub fn classify_sequence(
    seq: &OutcomeSequence,
    state: &GameState,
    rule: WinnerRule,
) -> Result<BTreeSet<usize>> {
    if state.is_decided() {
        return Err(Error::DecidedState);
    }
    let expected = state.max_remaining_games() as usize;
    if seq.len() != expected {
        return Err(Error::SequenceLength {
            expected,
            actual: seq.len(),
        });
    }
    if let Some(&index) = seq.rounds().iter().find(|&&r| r >= state.players()) {
        return Err(Error::PlayerOutOfRange {
            index,
            players: state.players(),
        });
    }
    let winners = match rule {
        WinnerRule::Chronological => chronological_winner(seq.rounds(), state.missing())
            .into_iter()
            .collect(),
        WinnerRule::TerminalNaive => {
            let mut wins = vec![0u32; state.players()];
            for &r in seq.rounds() {
                wins[r] += 1;
            }
            wins.iter()
                .zip(state.missing())
                .enumerate()
                .filter(|(_, (w, m))| w >= m)
                .map(|(i, _)| i)
                .collect()
        }
    };
    Ok(winners)
}

fn chronological_winner(rounds: &[usize], missing: &[u32]) -> Option<usize> {
    chronological_winner_in(rounds, missing, &mut Vec::new())
}

fn chronological_winner_in(
    rounds: &[usize],
    missing: &[u32],
    left: &mut Vec<u32>,
) -> Option<usize> {
    left.clear();
    left.extend_from_slice(missing);
    for &r in rounds {
        left[r] -= 1;
        if left[r] == 0 {
            return Some(r);
        }
    }
    None
}

/// Number of length-`L` sequences, if within `cap`.
fn sequence_count(state: &GameState, cap: u64, method: &'static str) -> Result<u64> {
    let players = state.players();
    let length = state.max_remaining_games();
    let too_large = Error::TooLarge {
        method,
        players,
        length,
        cap,
    };
    match (players as u64).checked_pow(length) {
        Some(count) if count <= cap => Ok(count),
        _ => Err(too_large),
    }
}

/// Per-player attribution counts over all `players^L` feigned sequences.
///
/// Under [`WinnerRule::Chronological`] the counts sum to `players^L`; under
/// [`WinnerRule::TerminalNaive`] they can exceed it.
pub fn feigned_tally(state: &GameState, rule: WinnerRule, cap: u64) -> Result<Vec<u64>> {
    if state.is_decided() {
        return Err(Error::DecidedState);
    }
    sequence_count(state, cap, "feigned")?;
    let players = state.players();
    let length = state.max_remaining_games() as usize;
    let mut tally = vec![0u64; players];
    let mut rounds = vec![0usize; length];
    let mut wins = vec![0u32; players];
    let mut scratch = Vec::with_capacity(players);
    loop {
        match rule {
            WinnerRule::Chronological => {
                let w = chronological_winner_in(&rounds, state.missing(), &mut scratch)
                    .expect("a feigned sequence always has a winner");
                tally[w] += 1;
            }
            WinnerRule::TerminalNaive => {
                wins.iter_mut().for_each(|w| *w = 0);
                for &r in &rounds {
                    wins[r] += 1;
                }
                for (i, (w, m)) in wins.iter().zip(state.missing()).enumerate() {
                    if w >= m {
                        tally[i] += 1;
                    }
                }
            }
        }
        // Odometer over sequences in lexicographic order, first round
        // most significant.
        let mut pos = length;
        loop {
            if pos == 0 {
                return Ok(tally);
            }
            pos -= 1;
            rounds[pos] += 1;
            if rounds[pos] < players {
                break;
            }
            rounds[pos] = 0;
        }
    }
}

/// Division by the feigned condition with the default cap.
pub fn solve_feigned(state: &GameState) -> Result<Division> {
    solve_feigned_with_cap(state, DEFAULT_SEQUENCE_CAP)
}

/// Plays out all `L = Σ missing − (players − 1)` remaining games, counts
/// the sequences each player wins chronologically, and divides by
/// `players^L`.
pub fn solve_feigned_with_cap(state: &GameState, cap: u64) -> Result<Division> {
    let total = sequence_count(state, cap, "feigned")?;
    let tally = feigned_tally(state, WinnerRule::Chronological, cap)?;
    let shares = tally
        .into_iter()
        .map(|c| Rational::new(c, total).expect("total > 0"))
        .collect();
    Ok(Division::from_shares(shares))
}

/// Probability that each player wins at exactly each game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactLengthTerms {
    /// `terms[player][k - 1]` is the probability that `player` wins the
    /// match on game `k`.
    terms: Vec<Vec<Rational>>,
}

impl ExactLengthTerms {
    pub fn player(&self, player: usize) -> &[Rational] {
        &self.terms[player]
    }

    pub fn players(&self) -> usize {
        self.terms.len()
    }

    pub fn total(&self, player: usize) -> Rational {
        self.terms[player].iter().sum()
    }

    pub fn into_division(self) -> Division {
        let shares = (0..self.players()).map(|p| self.total(p)).collect();
        Division::from_shares(shares)
    }
}

/// Walks the prefix tree of games, stopping every branch at its first
/// winner. A branch ending on game `k` weighs `(1/players)^k`.
pub fn exact_length_terms(state: &GameState, cap: u64) -> Result<ExactLengthTerms> {
    if state.is_decided() {
        return Err(Error::DecidedState);
    }
    sequence_count(state, cap, "exact-length")?;
    let players = state.players();
    let length = state.max_remaining_games() as usize;
    let mut counts = vec![vec![0u64; length]; players];
    let mut missing = state.missing().to_vec();
    walk(&mut missing, 0, &mut counts);

    let terms = counts
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .map(|(depth, c)| {
                    let total = (players as u64).pow(depth as u32 + 1);
                    Rational::new(c, total).expect("total > 0")
                })
                .collect()
        })
        .collect();
    Ok(ExactLengthTerms { terms })
}

fn walk(missing: &mut [u32], depth: usize, counts: &mut [Vec<u64>]) {
    for winner in 0..missing.len() {
        if missing[winner] == 1 {
            counts[winner][depth] += 1;
            continue;
        }
        missing[winner] -= 1;
        walk(missing, depth + 1, counts);
        missing[winner] += 1;
    }
}

/// Division by the exact-length decomposition with the default cap.
pub fn solve_exact_length(state: &GameState) -> Result<Division> {
    solve_exact_length_with_cap(state, DEFAULT_SEQUENCE_CAP)
}

pub fn solve_exact_length_with_cap(state: &GameState, cap: u64) -> Result<Division> {
    Ok(exact_length_terms(state, cap)?.into_division())
}
