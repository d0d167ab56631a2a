//! Closed forms for what single games are worth in a two-player race.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::foundations::{choose, power_of_two, Rational};

use super::recursive::solve_recursive;
use super::state::{AdvantageCoefficient, GameState};

fn check_match_length(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::MatchTooShort(n));
    }
    Ok(())
}

/// Advantage gained by winning the first game of a race to `n`, as the
/// ratio of the first `n − 1` odd numbers' product to the first `n − 1`
/// even numbers' product.
pub fn first_game_value_product(n: u32) -> Result<AdvantageCoefficient> {
    check_match_length(n)?;
    let n = u64::from(n);
    let odds = (1..n).fold(BigUint::one(), |acc, i| acc * (2 * i - 1));
    let evens = (1..n).fold(BigUint::one(), |acc, i| acc * (2 * i));
    AdvantageCoefficient::new(Rational::new(odds, evens)?)
}

/// The same advantage as the central binomial `C(2n−2, n−1) / 2^(2n−2)`.
pub fn first_game_value_binomial(n: u32) -> Result<AdvantageCoefficient> {
    check_match_length(n)?;
    let top = 2 * u64::from(n) - 2;
    let value = Rational::new(choose(top, i64::from(n) - 1), power_of_two(top as u32))?;
    AdvantageCoefficient::new(value)
}

/// Winning probability `p = c/2 + 1/2` for advantage coefficient `c`.
pub fn advantage_to_probability(advantage: &AdvantageCoefficient) -> Rational {
    let half = Rational::new(1, 2).expect("nonzero");
    advantage.value() * &half + half
}

/// How much `winner`'s entitlement on `stake` rises if they take the next
/// game from `state`.
pub fn marginal_game_value(state: &GameState, winner: usize, stake: &Rational) -> Result<Rational> {
    if state.is_decided() {
        return Err(Error::DecidedState);
    }
    state.check_player(winner)?;
    let before = solve_recursive(state);
    let after = solve_recursive(&state.after_win(winner));
    Ok(stake * (after.share(winner) - before.share(winner)))
}

/// Share of the player missing 2 games against one missing `k`, summed by
/// the exact game on which that player wins: `Σ_{m=2}^{k+1} (m−1)/2^m`.
///
/// `k = 0` gives 0 (the opponent has already won).
pub fn series_missing_2_k(k: u32) -> Rational {
    (2..=k + 1)
        .map(|m| Rational::from(choose(u64::from(m) - 1, 1)) * Rational::inverse_power_of_two(m))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn leader_share(missing: &[u32]) -> Rational {
        solve_recursive(&GameState::new(missing.to_vec()).unwrap())
            .share(0)
            .clone()
    }

    #[test]
    fn product_form() {
        assert_eq!(first_game_value_product(2).unwrap().value(), &r(1, 2));
        assert_eq!(first_game_value_product(3).unwrap().value(), &r(3, 8));
        // 1·3·5·7·9·11·13 / 2·4·6·8·10·12·14
        assert_eq!(
            first_game_value_product(8).unwrap().value(),
            &r(135135, 645120)
        );
        assert_eq!(first_game_value_product(8).unwrap().value(), &r(429, 2048));
    }

    #[test]
    fn binomial_form() {
        assert_eq!(first_game_value_binomial(2).unwrap().value(), &r(1, 2));
        assert_eq!(first_game_value_binomial(3).unwrap().value(), &r(3, 8));
        assert_eq!(
            first_game_value_binomial(10).unwrap(),
            first_game_value_product(10).unwrap()
        );
    }

    #[test]
    fn short_match_is_rejected() {
        assert_eq!(first_game_value_product(1), Err(Error::MatchTooShort(1)));
        assert_eq!(first_game_value_binomial(0), Err(Error::MatchTooShort(0)));
    }

    #[test]
    fn first_game_value_from_solver() {
        // p' = 2p − 1 where p is the leader's share at (n−1, n).
        for n in 2..=8u32 {
            let p = leader_share(&[n - 1, n]);
            let from_solver = p * Rational::from(2) - Rational::one();
            assert_eq!(&from_solver, first_game_value_product(n).unwrap().value());
        }
    }

    #[test]
    fn probability_from_advantage() {
        let c = |v| AdvantageCoefficient::new(v).unwrap();
        assert_eq!(advantage_to_probability(&c(r(3, 8))), r(11, 16));
        assert_eq!(advantage_to_probability(&c(Rational::zero())), r(1, 2));
        assert_eq!(
            advantage_to_probability(&c(Rational::one())),
            Rational::one()
        );
    }

    #[test]
    fn last_game_value() {
        let stake = Rational::from(64);
        let state = GameState::new(vec![1, 2]).unwrap();
        assert_eq!(
            marginal_game_value(&state, 0, &stake).unwrap(),
            Rational::from(16)
        );
        let state = GameState::new(vec![1, 1]).unwrap();
        assert_eq!(
            marginal_game_value(&state, 0, &stake).unwrap(),
            Rational::from(32)
        );
        for k in 2..=12u32 {
            let state = GameState::new(vec![1, k - 1]).unwrap();
            let expected = &stake * Rational::inverse_power_of_two(k - 1);
            assert_eq!(
                marginal_game_value(&state, 0, &stake).unwrap(),
                expected,
                "k = {k}"
            );
        }
    }

    #[test]
    fn marginal_value_symmetric_state() {
        let stake = Rational::one();
        for k in 1..=6 {
            let state = GameState::new(vec![k, k]).unwrap();
            assert_eq!(
                marginal_game_value(&state, 0, &stake).unwrap(),
                marginal_game_value(&state, 1, &stake).unwrap()
            );
        }
    }

    #[test]
    fn marginal_value_errors() {
        let stake = Rational::one();
        let decided = GameState::new(vec![0, 2]).unwrap();
        assert_eq!(
            marginal_game_value(&decided, 0, &stake),
            Err(Error::DecidedState)
        );
        let live = GameState::new(vec![1, 2]).unwrap();
        assert!(matches!(
            marginal_game_value(&live, 2, &stake),
            Err(Error::PlayerOutOfRange { .. })
        ));
    }

    #[test]
    fn series_values() {
        assert_eq!(series_missing_2_k(0), Rational::zero());
        assert_eq!(series_missing_2_k(1), r(1, 4));
        assert_eq!(series_missing_2_k(2), r(1, 2));
        assert_eq!(series_missing_2_k(3), r(11, 16));
        for k in 1..=12 {
            assert_eq!(series_missing_2_k(k), leader_share(&[2, k]), "k = {k}");
        }
    }
}
