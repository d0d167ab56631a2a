use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::foundations::Rational;

/// Games each player still needs to win.
///
/// A zero entry marks a decided game: that player has already won.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    missing: Vec<u32>,
}

impl GameState {
    pub fn new(missing: impl Into<Vec<u32>>) -> Result<Self> {
        let missing = missing.into();
        if missing.len() < 2 {
            return Err(Error::InvalidState(format!(
                "need at least 2 players, got {}",
                missing.len()
            )));
        }
        if missing.iter().filter(|&&m| m == 0).count() > 1 {
            return Err(Error::InvalidState(
                "at most one player can have nothing missing".into(),
            ));
        }
        Ok(GameState { missing })
    }

    pub fn missing(&self) -> &[u32] {
        &self.missing
    }

    pub fn players(&self) -> usize {
        self.missing.len()
    }

    /// The player who has already won, if any.
    pub fn winner(&self) -> Option<usize> {
        self.missing.iter().position(|&m| m == 0)
    }

    pub fn is_decided(&self) -> bool {
        self.winner().is_some()
    }

    /// The most games that can still be played before someone must have
    /// won: `Σ missing − (players − 1)`.
    pub fn max_remaining_games(&self) -> u32 {
        let total: u32 = self.missing.iter().sum();
        (total + 1).saturating_sub(self.players() as u32)
    }

    /// State after `winner` takes the next game. Panics if `winner` is out of
    /// range or the state is already decided.
    pub fn after_win(&self, winner: usize) -> GameState {
        assert!(!self.is_decided(), "no games follow a decided state");
        let mut missing = self.missing.clone();
        missing[winner] -= 1;
        GameState { missing }
    }

    pub(crate) fn check_player(&self, index: usize) -> Result<()> {
        if index >= self.players() {
            return Err(Error::PlayerOutOfRange {
                index,
                players: self.players(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.missing.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Exact per-player shares of a unit stake.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    shares: Vec<Rational>,
}

impl Division {
    /// Validates that every share lies in `[0, 1]` and that they sum to 1.
    pub fn new(shares: Vec<Rational>) -> Result<Self> {
        let zero = Rational::zero();
        let one = Rational::one();
        if let Some(s) = shares.iter().find(|s| **s < zero || **s > one) {
            return Err(Error::InvalidDivision(format!("share {s} outside [0, 1]")));
        }
        let total: Rational = shares.iter().sum();
        if total != one {
            return Err(Error::InvalidDivision(format!("shares sum to {total}")));
        }
        Ok(Division { shares })
    }

    pub(crate) fn from_shares(shares: Vec<Rational>) -> Self {
        debug_assert_eq!(shares.iter().sum::<Rational>(), Rational::one());
        Division { shares }
    }

    /// Everything to `winner`.
    pub fn certain(players: usize, winner: usize) -> Self {
        let shares = (0..players)
            .map(|i| {
                if i == winner {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Division { shares }
    }

    pub fn shares(&self) -> &[Rational] {
        &self.shares
    }

    pub fn share(&self, player: usize) -> &Rational {
        &self.shares[player]
    }

    pub fn players(&self) -> usize {
        self.shares.len()
    }

    /// Monetary split of `stake`.
    pub fn amounts(&self, stake: &Rational) -> Vec<Rational> {
        self.shares.iter().map(|s| s * stake).collect()
    }

    pub fn into_shares(self) -> Vec<Rational> {
        self.shares
    }
}

impl Serialize for Division {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.shares.serialize(serializer)
    }
}

impl fmt::Display for Division {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shares.iter().map(Rational::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Fraction of the opponent's half of the stake that belongs to the leader.
///
/// When `E` is the leader's expectation on a stake `S`, the coefficient `c`
/// satisfies `E − S/2 = c·S/2`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdvantageCoefficient(Rational);

impl AdvantageCoefficient {
    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::zero() || value > Rational::one() {
            return Err(Error::AdvantageOutOfRange(value.to_string()));
        }
        Ok(AdvantageCoefficient(value))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

impl fmt::Display for AdvantageCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Winner of each successive game, as player indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OutcomeSequence {
    rounds: Vec<usize>,
}

impl OutcomeSequence {
    pub fn new(rounds: impl Into<Vec<usize>>, players: usize) -> Result<Self> {
        let rounds = rounds.into();
        if let Some(&index) = rounds.iter().find(|&&r| r >= players) {
            return Err(Error::PlayerOutOfRange { index, players });
        }
        Ok(OutcomeSequence { rounds })
    }

    /// Parses letter notation, `a` for the first player, `b` for the second…
    pub fn from_letters(letters: &str, players: usize) -> Result<Self> {
        let rounds: Vec<usize> = letters
            .bytes()
            .map(|b| b.wrapping_sub(b'a') as usize)
            .collect();
        OutcomeSequence::new(rounds, players)
    }

    pub fn rounds(&self) -> &[usize] {
        &self.rounds
    }

    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }
}
