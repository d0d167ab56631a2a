use std::collections::HashMap;

use crate::foundations::Rational;

use super::state::{Division, GameState};

/// Step-by-step division by backward induction.
///
/// A player with nothing missing takes the whole stake. Otherwise each player
/// is equally likely to win the next game, and the division is the average
/// of the divisions after each possible winner.
///
/// Accepts decided states. The memo table lives for one call.
pub fn solve_recursive(state: &GameState) -> Division {
    let players = state.players();
    if let Some(winner) = state.winner() {
        return Division::certain(players, winner);
    }
    let mut memo = HashMap::new();
    let mut missing = state.missing().to_vec();
    let weight = Rational::new(1, players as i64).expect("players >= 2");
    Division::from_shares(average(&mut missing, &weight, &mut memo))
}

fn average(
    missing: &mut Vec<u32>,
    weight: &Rational,
    memo: &mut HashMap<Vec<u32>, Vec<Rational>>,
) -> Vec<Rational> {
    if let Some(hit) = memo.get(missing.as_slice()) {
        return hit.clone();
    }
    let players = missing.len();
    let mut acc = vec![Rational::zero(); players];
    for winner in 0..players {
        if missing[winner] == 1 {
            acc[winner] = &acc[winner] + Rational::one();
            continue;
        }
        missing[winner] -= 1;
        let next = average(missing, weight, memo);
        missing[winner] += 1;
        for (a, s) in acc.iter_mut().zip(next) {
            *a = &*a + s;
        }
    }
    let shares: Vec<Rational> = acc.into_iter().map(|a| a * weight).collect();
    memo.insert(missing.clone(), shares.clone());
    shares
}
