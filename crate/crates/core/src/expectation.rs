//! Value of a chance, and the dice-renouncement problem.

use crate::error::{Error, Result};
use crate::foundations::Rational;

/// Weighted payoffs: `chances` equally likely ways of receiving `payoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lottery {
    branches: Vec<(u64, Rational)>,
}

impl Lottery {
    pub fn new(branches: Vec<(u64, Rational)>) -> Result<Self> {
        if branches.is_empty() || branches.iter().any(|(w, _)| *w == 0) {
            return Err(Error::InvalidLottery);
        }
        Ok(Lottery { branches })
    }

    /// Equal chances of `a` or `b`.
    pub fn even(a: Rational, b: Rational) -> Self {
        Lottery {
            branches: vec![(1, a), (1, b)],
        }
    }

    pub fn branches(&self) -> &[(u64, Rational)] {
        &self.branches
    }
}

/// `Σ chances·payoff / Σ chances`.
pub fn lottery_value(lottery: &Lottery) -> Rational {
    let weights: u64 = lottery.branches.iter().map(|(w, _)| w).sum();
    let total: Rational = lottery
        .branches
        .iter()
        .map(|(w, payoff)| Rational::from(*w) * payoff)
        .sum();
    total
        .checked_div(&Rational::from(weights))
        .expect("weights are positive")
}

/// A wager to roll one of `favorable` faces out of `faces` at least once in
/// `total_throws` throws, for `stake`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiceGame {
    faces: u32,
    favorable: u32,
    total_throws: u32,
    stake: Rational,
}

impl DiceGame {
    pub fn new(faces: u32, favorable: u32, total_throws: u32, stake: Rational) -> Result<Self> {
        if faces < 2 {
            return Err(Error::InvalidDiceGame(format!("{faces} faces")));
        }
        if favorable == 0 || favorable >= faces {
            return Err(Error::InvalidDiceGame(format!(
                "{favorable} favorable faces of {faces}"
            )));
        }
        if total_throws == 0 {
            return Err(Error::InvalidDiceGame("no throws".into()));
        }
        Ok(DiceGame {
            faces,
            favorable,
            total_throws,
            stake,
        })
    }

    /// One six in eight throws of a die, for a unit stake.
    pub fn one_six_in_eight() -> Self {
        DiceGame::new(6, 1, 8, Rational::one()).expect("valid")
    }

    pub fn faces(&self) -> u32 {
        self.faces
    }

    pub fn favorable(&self) -> u32 {
        self.favorable
    }

    pub fn total_throws(&self) -> u32 {
        self.total_throws
    }

    pub fn stake(&self) -> &Rational {
        &self.stake
    }

    fn hit(&self) -> Rational {
        Rational::new(self.favorable, self.faces).expect("faces > 0")
    }

    fn miss(&self) -> Rational {
        Rational::new(self.faces - self.favorable, self.faces).expect("faces > 0")
    }
}

/// Probability of at least one favorable face over all throws.
pub fn win_probability(game: &DiceGame) -> Rational {
    Rational::one() - game.miss().pow(game.total_throws)
}

/// What the player may take for giving up throw `k` when every earlier
/// throw was also given up and paid for, each payment leaving the table.
///
/// `stake · hit · miss^(k−1)`.
pub fn renounce_value_unconditional(game: &DiceGame, k: u32) -> Result<Rational> {
    if k == 0 || k > game.total_throws {
        return Err(Error::ThrowOutOfRange {
            throw: k,
            total: game.total_throws,
        });
    }
    Ok(&game.stake * game.hit() * game.miss().pow(k - 1))
}

/// What the player may take for giving up the next throw while the whole
/// stake is still in play: `stake · hit`, however many throws were lost.
pub fn renounce_value_conditional(game: &DiceGame) -> Rational {
    &game.stake * game.hit()
}
