/*!
Seeded Monte Carlo estimates of a division, and a σ-gate comparing them
with an exact division.

The generator is PCG64 (XSL-RR 128/64): a 128-bit LCG with multiplier
`0x2360ED051FC65DA44385DF649FCCF645`, stepped before each output, and
increment `(stream << 1) | 1` with
`stream = 0x0A02BDBF7BB3C0A7AC28FA16A64ABF96`. Seed `s` starts the state
at `s`; construction adds the increment and steps once. Each 64-bit output
is `rotr(hi ^ lo, state >> 122)` over the two halves of the state.

A game winner among `n` players is drawn by rejection: outputs at or above
`2^64 − (2^64 mod n)` are discarded, the rest are taken modulo `n`.

Shard `k` of a sharded run uses the same stream advanced by `k·2^64`
outputs, so shards never overlap. A sharded report is deterministic in
`(seed, shards)` but differs from the single-stream report, which is the
canonical one.
*/

use rand_core::RngCore;
use rand_pcg::Pcg64;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::foundations::Rational;
use crate::solver::{solve_recursive, Division, GameState};

const PCG_STREAM: u128 = 0x0a02_bdbf_7bb3_c0a7_ac28_fa16_a64a_bf96;

/// The simulator's deterministic generator.
pub fn seeded_rng(seed: u64) -> Pcg64 {
    Pcg64::new(u128::from(seed), PCG_STREAM)
}

fn shard_rng(seed: u64, shard: u64) -> Pcg64 {
    let mut rng = seeded_rng(seed);
    rng.advance(u128::from(shard) << 64);
    rng
}

/// Uniform integer in `0..n` without modulo bias.
pub fn uniform_below<R: RngCore + ?Sized>(rng: &mut R, n: u64) -> u64 {
    assert!(n > 0);
    // 2^64 mod n; outputs above u64::MAX − rem would bias the low residues.
    let rem = (u64::MAX % n + 1) % n;
    let limit = u64::MAX - rem;
    loop {
        let x = rng.next_u64();
        if x <= limit {
            return x % n;
        }
    }
}

/// Plays fair games from `state` until someone has won; returns the winner
/// and the number of games played.
pub fn play_out<R: RngCore + ?Sized>(state: &GameState, rng: &mut R) -> (usize, u32) {
    if let Some(w) = state.winner() {
        return (w, 0);
    }
    let mut missing = state.missing().to_vec();
    let players = missing.len() as u64;
    let mut rounds = 0;
    loop {
        let w = uniform_below(rng, players) as usize;
        rounds += 1;
        missing[w] -= 1;
        if missing[w] == 0 {
            return (w, rounds);
        }
    }
}

pub fn simulate_game<R: RngCore + ?Sized>(state: &GameState, rng: &mut R) -> usize {
    play_out(state, rng).0
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimReport {
    pub trials: u64,
    pub wins: Vec<u64>,
    pub empirical: Vec<Rational>,
    /// `|empirical − exact| / √(exact·(1 − exact)/trials)` per player, with
    /// `exact` from the recursive solver.
    pub sigma_distance: Vec<f64>,
}

impl SimReport {
    fn from_wins(state: &GameState, trials: u64, wins: Vec<u64>) -> Self {
        let exact = solve_recursive(state);
        let sigma_distance = sigma_distances(&exact, trials, &wins);
        let empirical = wins
            .iter()
            .map(|&w| Rational::new(w, trials).expect("trials > 0"))
            .collect();
        SimReport {
            trials,
            wins,
            empirical,
            sigma_distance,
        }
    }
}

impl Serialize for SimReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SimReport", 4)?;
        s.serialize_field("trials", &self.trials)?;
        s.serialize_field("wins", &self.wins)?;
        s.serialize_field("empirical", &self.empirical)?;
        let sigma: Vec<String> = self
            .sigma_distance
            .iter()
            .map(|d| format!("{d:.3}"))
            .collect();
        s.serialize_field("sigma_distance", &sigma)?;
        s.end()
    }
}

fn sigma_distances(exact: &Division, trials: u64, wins: &[u64]) -> Vec<f64> {
    exact
        .shares()
        .iter()
        .zip(wins)
        .map(|(p, &w)| {
            let empirical = Rational::new(w, trials).expect("trials > 0");
            let gap = (empirical - p).abs().to_f64();
            let p = p.to_f64();
            let se = (p * (1.0 - p) / trials as f64).sqrt();
            if se > 0.0 {
                gap / se
            } else if gap == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        })
        .collect()
}

fn validate(state: &GameState, trials: u64) -> Result<()> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    if state.is_decided() {
        return Err(Error::DecidedState);
    }
    Ok(())
}

fn tally<R: RngCore>(state: &GameState, trials: u64, rng: &mut R) -> Vec<u64> {
    let mut wins = vec![0u64; state.players()];
    for _ in 0..trials {
        wins[simulate_game(state, rng)] += 1;
    }
    wins
}

/// Simulates `trials` matches from `state` on one stream seeded by `seed`.
pub fn estimate_division(state: &GameState, trials: u64, seed: u64) -> Result<SimReport> {
    validate(state, trials)?;
    let wins = tally(state, trials, &mut seeded_rng(seed));
    Ok(SimReport::from_wins(state, trials, wins))
}

/// Like [`estimate_division`] but splits trials over `shards` independent
/// sub-streams run in parallel. The first `trials % shards` shards run one
/// extra trial; wins are summed in shard order.
pub fn estimate_division_sharded(
    state: &GameState,
    trials: u64,
    seed: u64,
    shards: u64,
) -> Result<SimReport> {
    validate(state, trials)?;
    let shards = shards.clamp(1, trials);
    let base = trials / shards;
    let extra = trials % shards;
    let per_shard: Vec<Vec<u64>> = (0..shards)
        .into_par_iter()
        .map(|k| {
            let n = base + u64::from(k < extra);
            tally(state, n, &mut shard_rng(seed, k))
        })
        .collect();
    let mut wins = vec![0u64; state.players()];
    for shard in per_shard {
        for (w, s) in wins.iter_mut().zip(shard) {
            *w += s;
        }
    }
    Ok(SimReport::from_wins(state, trials, wins))
}

/// Outcome of comparing a report with an exact division.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GateResult {
    pub pass: bool,
    pub sigma_gate: f64,
    pub sigma_distance: Vec<f64>,
}

/// Passes iff every player's σ-distance from `exact` is at most `sigma_gate`.
pub fn check_against(exact: &Division, report: &SimReport, sigma_gate: f64) -> Result<GateResult> {
    if exact.players() != report.wins.len() {
        return Err(Error::PlayerCountMismatch {
            exact: exact.players(),
            report: report.wins.len(),
        });
    }
    let sigma_distance = sigma_distances(exact, report.trials, &report.wins);
    let pass = sigma_distance.iter().all(|&d| d <= sigma_gate);
    Ok(GateResult {
        pass,
        sigma_gate,
        sigma_distance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Replays a fixed list of outputs, cycling.
    struct Scripted {
        outputs: Vec<u64>,
        next: usize,
    }

    impl Scripted {
        fn new(outputs: Vec<u64>) -> Self {
            Scripted { outputs, next: 0 }
        }
    }

    impl RngCore for Scripted {
        fn next_u32(&mut self) -> u32 {
            self.next_u64() as u32
        }

        fn next_u64(&mut self) -> u64 {
            let x = self.outputs[self.next % self.outputs.len()];
            self.next += 1;
            x
        }

        fn fill_bytes(&mut self, dest: &mut [u8]) {
            rand_core::impls::fill_bytes_via_next(self, dest)
        }
    }

    fn state(m: &[u32]) -> GameState {
        GameState::new(m.to_vec()).unwrap()
    }

    #[test]
    fn first_round_win_ends_the_game() {
        let mut rng = Scripted::new(vec![0]);
        assert_eq!(play_out(&state(&[1, 5]), &mut rng), (0, 1));
        let mut rng = Scripted::new(vec![3]);
        assert_eq!(play_out(&state(&[1, 5, 4]), &mut rng), (0, 1));
    }

    #[test]
    fn rejection_skips_the_biased_tail() {
        // For n = 3, 2^64 mod 3 = 1, so u64::MAX is the one rejected output.
        let mut rng = Scripted::new(vec![u64::MAX, 4]);
        assert_eq!(uniform_below(&mut rng, 3), 1);
        assert_eq!(rng.next, 2);
        let mut rng = Scripted::new(vec![u64::MAX - 1]);
        assert_eq!(uniform_below(&mut rng, 3), (u64::MAX - 1) % 3);
        let mut rng = Scripted::new(vec![u64::MAX]);
        assert_eq!(uniform_below(&mut rng, 2), 1);
    }

    #[test]
    fn generator_is_pinned() {
        // Frozen first outputs for seed 42, guarding the documented stream.
        let mut a = seeded_rng(42);
        let mut b = seeded_rng(42);
        let first: Vec<u64> = (0..4).map(|_| a.next_u64()).collect();
        let again: Vec<u64> = (0..4).map(|_| b.next_u64()).collect();
        assert_eq!(first, again);
        assert_eq!(first, FROZEN_SEED_42);
    }

    const FROZEN_SEED_42: [u64; 4] = [
        9175663511918380246,
        10242628652808598733,
        9788821050650074150,
        5250005885374173606,
    ];

    #[test]
    fn shards_do_not_share_outputs() {
        let mut a = shard_rng(7, 0);
        let mut b = shard_rng(7, 1);
        assert_eq!(a.next_u64(), seeded_rng(7).next_u64());
        assert_ne!(a.next_u64(), b.next_u64());
    }

    #[test]
    fn determinism() {
        let s = state(&[2, 3]);
        let a = estimate_division(&s, 10_000, 99).unwrap();
        let b = estimate_division(&s, 10_000, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.wins.iter().sum::<u64>(), 10_000);
        let c = estimate_division_sharded(&s, 10_000, 99, 4).unwrap();
        let d = estimate_division_sharded(&s, 10_000, 99, 4).unwrap();
        assert_eq!(c, d);
        assert_eq!(c.wins.iter().sum::<u64>(), 10_000);
    }

    #[test]
    fn single_trial_is_one_hot() {
        let r = estimate_division(&state(&[1, 1]), 1, 7).unwrap();
        assert_eq!(r.wins.iter().sum::<u64>(), 1);
        assert!(r.wins.iter().all(|&w| w <= 1));
    }

    #[test]
    fn invalid_runs() {
        assert_eq!(
            estimate_division(&state(&[1, 1]), 0, 1),
            Err(Error::NoTrials)
        );
        assert_eq!(
            estimate_division(&state(&[0, 1]), 10, 1),
            Err(Error::DecidedState)
        );
    }

    #[test]
    fn gate_on_exact_counts() {
        let half = Rational::new(1, 2).unwrap();
        let exact = Division::new(vec![half.clone(), half]).unwrap();
        let report = SimReport::from_wins(&state(&[1, 1]), 1_000_000, vec![500_000, 500_000]);
        let gate = check_against(&exact, &report, 4.0).unwrap();
        assert!(gate.pass);
        assert_eq!(gate.sigma_distance, [0.0, 0.0]);
    }

    #[test]
    fn gate_rejects_mismatched_players() {
        let exact = solve_recursive(&state(&[1, 2, 2]));
        let report = estimate_division(&state(&[2, 3]), 100, 1).unwrap();
        assert_eq!(
            check_against(&exact, &report, 4.0),
            Err(Error::PlayerCountMismatch {
                exact: 3,
                report: 2
            })
        );
    }

    #[test]
    fn report_json_shape() {
        let report = SimReport::from_wins(&state(&[1, 1]), 4, vec![3, 1]);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"{"trials":4,"wins":[3,1],"empirical":["3/4","1/4"],"sigma_distance":["1.000","1.000"]}"#
        );
    }
}
