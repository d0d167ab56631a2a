use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use partis::expectation::{
    renounce_value_conditional, renounce_value_unconditional, win_probability, DiceGame,
};
use partis::sim::{check_against, estimate_division, estimate_division_sharded};
use partis::solver::{
    advantage_to_probability, first_game_value_binomial, first_game_value_product,
    solve_exact_length_with_cap, solve_feigned_with_cap, solve_recursive,
};
use partis::triangle::{base_partition, Triangle};
use partis::{Division, Error, GameState};
use serde_json::{json, Value};

use crate::output::{annotated, decimal, decimals, fractions, join_annotated, Envelope, Report};
use crate::{DiceArgs, DiceMode, Method, SimulateArgs, SolveArgs, TriangleArgs, ValueFirstArgs};

#[derive(Debug)]
pub enum CommandError {
    /// Arguments that parse but describe an impossible request.
    Usage(String),
    /// An enumeration would exceed the sequence cap.
    Cap(Error),
    Internal(String),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Usage(msg) | CommandError::Internal(msg) => f.write_str(msg),
            CommandError::Cap(err) => write!(f, "{err}"),
        }
    }
}

fn usage(err: impl fmt::Display) -> CommandError {
    CommandError::Usage(err.to_string())
}

fn solver_error(err: Error) -> CommandError {
    match err {
        Error::TooLarge { .. } => CommandError::Cap(err),
        other => CommandError::Internal(other.to_string()),
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Recursive => "recursive",
        Method::Feigned => "feigned",
        Method::ExactLength => "exact-length",
        Method::Triangle => "triangle",
        Method::All => "all",
    }
}

fn run_method(method: Method, state: &GameState, cap: u64) -> Result<Division, Error> {
    match method {
        Method::Recursive => Ok(solve_recursive(state)),
        Method::Feigned => solve_feigned_with_cap(state, cap),
        Method::ExactLength => solve_exact_length_with_cap(state, cap),
        Method::Triangle => base_partition(state.missing()[0], state.missing()[1]),
        Method::All => unreachable!("expanded by the caller"),
    }
}

pub fn solve(args: &SolveArgs) -> Result<Report, CommandError> {
    let state = GameState::new(args.missing.0.clone()).map_err(usage)?;
    let two_players = state.players() == 2;
    if args.method == Method::Triangle && !two_players {
        return Err(usage("the triangle method needs exactly two players"));
    }
    let all = args.method == Method::All;
    let methods = if all {
        vec![
            Method::Recursive,
            Method::Feigned,
            Method::ExactLength,
            Method::Triangle,
        ]
    } else {
        vec![args.method]
    };

    let mut ran: Vec<(Method, Division)> = Vec::new();
    let mut skipped: Vec<(Method, String)> = Vec::new();
    for method in methods {
        if method == Method::Triangle && !two_players {
            skipped.push((method, "needs exactly two players".into()));
            continue;
        }
        match run_method(method, &state, args.max_sequences) {
            Ok(division) => ran.push((method, division)),
            Err(err @ Error::TooLarge { .. }) if all => skipped.push((method, err.to_string())),
            Err(err) => return Err(solver_error(err)),
        }
    }

    let division = ran[0].1.clone();
    let agreement = all.then(|| ran.iter().all(|(_, d)| *d == division));
    let amounts = args.stake.as_ref().map(|stake| division.amounts(stake));

    let mut results = json!({
        "shares": fractions(division.shares()),
        "methods": ran
            .iter()
            .map(|(m, d)| json!({ "method": method_name(*m), "shares": fractions(d.shares()) }))
            .collect::<Vec<_>>(),
    });
    let mut approximate = json!({ "shares": decimals(division.shares()) });
    if let Some(amounts) = &amounts {
        results["amounts"] = json!(fractions(amounts));
        approximate["amounts"] = json!(decimals(amounts));
    }
    if all {
        results["skipped"] = skipped
            .iter()
            .map(|(m, why)| json!({ "method": method_name(*m), "reason": why }))
            .collect();
    }
    results["approximate"] = approximate;

    let mut text = String::new();
    let _ = writeln!(text, "state {state}, method {}", method_name(args.method));
    let _ = writeln!(text, "shares: {}", join_annotated(division.shares()));
    if let (Some(stake), Some(amounts)) = (&args.stake, &amounts) {
        let _ = writeln!(text, "amounts of {stake}: {}", join_annotated(amounts));
    }
    if let Some(agree) = agreement {
        let names: Vec<&str> = ran.iter().map(|(m, _)| method_name(*m)).collect();
        let verdict = if agree { "agree" } else { "DISAGREE" };
        let _ = writeln!(text, "methods {verdict}: {}", names.join(", "));
        for (m, d) in ran.iter().filter(|(_, d)| *d != division) {
            let _ = writeln!(text, "  {}: {d}", method_name(*m));
        }
        for (m, why) in &skipped {
            let _ = writeln!(text, "skipped {}: {why}", method_name(*m));
        }
    }

    Ok(Report {
        envelope: Envelope {
            command: "solve",
            inputs: json!({
                "missing": args.missing.0,
                "method": method_name(args.method),
                "stake": args.stake.as_ref().map(ToString::to_string),
                "max_sequences": args.max_sequences,
            }),
            results,
            method_agreement: agreement,
        },
        text,
        exit_code: if agreement == Some(false) { 1 } else { 0 },
    })
}

pub fn triangle(args: &TriangleArgs) -> Result<Report, CommandError> {
    let t = Triangle::build(args.rows).map_err(usage)?;
    let to_u64 = |v: &BigUint| {
        u64::try_from(v).map_err(|_| CommandError::Internal(format!("cell {v} overflows u64")))
    };
    let bases = t
        .bases()
        .into_iter()
        .map(|base| base.into_iter().map(to_u64).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;

    let order = t.order();
    let widths: Vec<usize> = (1..=order)
        .map(|j| {
            (1..=order + 1 - j)
                .map(|i| t.cell(i, j).expect("cell within order").to_string().len())
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut text = String::new();
    for i in 1..=order {
        let row = t.parallel_rank(i).expect("rank within order");
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(v, w)| format!("{:>w$}", v.to_string(), w = *w))
            .collect();
        let _ = writeln!(text, "{}", cells.join(" "));
    }

    Ok(Report {
        envelope: Envelope {
            command: "triangle",
            inputs: json!({ "rows": args.rows }),
            results: json!({ "bases": bases }),
            method_agreement: None,
        },
        text,
        exit_code: 0,
    })
}

pub fn value_first(args: &ValueFirstArgs) -> Result<Report, CommandError> {
    let product = first_game_value_product(args.n).map_err(usage)?;
    let binomial = first_game_value_binomial(args.n).map_err(usage)?;
    let agree = product == binomial;
    let p = advantage_to_probability(&product);

    let mut text = String::new();
    let _ = writeln!(text, "race to {}", args.n);
    let _ = writeln!(text, "p' (product form):  {}", annotated(product.value()));
    let _ = writeln!(text, "p' (binomial form): {}", annotated(binomial.value()));
    let _ = writeln!(text, "p = (1 + p')/2:     {}", annotated(&p));
    if !agree {
        let _ = writeln!(text, "forms DISAGREE");
    }

    Ok(Report {
        envelope: Envelope {
            command: "value-first",
            inputs: json!({ "n": args.n }),
            results: json!({
                "p_prime": {
                    "product": product.value().to_string(),
                    "binomial": binomial.value().to_string(),
                },
                "p": p.to_string(),
                "approximate": { "p_prime": decimal(product.value()), "p": decimal(&p) },
            }),
            method_agreement: Some(agree),
        },
        text,
        exit_code: if agree { 0 } else { 1 },
    })
}

pub fn dice(args: &DiceArgs) -> Result<Report, CommandError> {
    let game = DiceGame::new(
        args.faces,
        args.favorable,
        args.throws_total,
        args.stake.clone(),
    )
    .map_err(usage)?;
    let unconditional = renounce_value_unconditional(&game, args.throw).map_err(usage)?;
    let (mode, value) = match args.mode {
        DiceMode::Unconditional => ("unconditional", unconditional),
        DiceMode::Conditional => ("conditional", renounce_value_conditional(&game)),
    };
    let win = win_probability(&game);

    let mut text = String::new();
    let _ = writeln!(
        text,
        "renouncing throw {} of {} ({mode}): {}",
        args.throw,
        args.throws_total,
        annotated(&value)
    );
    let _ = writeln!(
        text,
        "probability of at least one success: {}",
        annotated(&win)
    );

    Ok(Report {
        envelope: Envelope {
            command: "dice",
            inputs: json!({
                "throw": args.throw,
                "throws_total": args.throws_total,
                "faces": args.faces,
                "favorable": args.favorable,
                "mode": mode,
                "stake": args.stake.to_string(),
            }),
            results: json!({
                "value": value.to_string(),
                "win_probability": win.to_string(),
                "approximate": { "value": decimal(&value), "win_probability": decimal(&win) },
            }),
            method_agreement: None,
        },
        text,
        exit_code: 0,
    })
}

pub fn simulate(args: &SimulateArgs) -> Result<Report, CommandError> {
    let state = GameState::new(args.missing.0.clone()).map_err(usage)?;
    let report = if args.shards == 1 {
        estimate_division(&state, args.trials, args.seed)
    } else {
        estimate_division_sharded(&state, args.trials, args.seed, args.shards)
    }
    .map_err(usage)?;
    let exact = solve_recursive(&state);
    let gate = check_against(&exact, &report, args.sigma_gate).map_err(solver_error)?;

    let mut results = serde_json::to_value(&report).expect("plain data");
    results["exact"] = json!(fractions(exact.shares()));
    results["pass"] = Value::Bool(gate.pass);
    results["approximate"] = json!({ "empirical": decimals(&report.empirical) });

    let mut text = String::new();
    let _ = writeln!(
        text,
        "state {state}: {} trials, seed {}, {} shard(s)",
        args.trials, args.seed, args.shards
    );
    for (p, share) in exact.shares().iter().enumerate() {
        let _ = writeln!(
            text,
            "player {}: exact {}, wins {}, empirical ≈ {}, {:.3}σ",
            p + 1,
            annotated(share),
            report.wins[p],
            decimal(&report.empirical[p]),
            gate.sigma_distance[p]
        );
    }
    let verdict = if gate.pass { "pass" } else { "FAIL" };
    let _ = writeln!(text, "gate {}σ: {verdict}", args.sigma_gate);

    Ok(Report {
        envelope: Envelope {
            command: "simulate",
            inputs: json!({
                "missing": args.missing.0,
                "trials": args.trials,
                "seed": args.seed,
                "sigma_gate": args.sigma_gate,
                "shards": args.shards,
            }),
            results,
            method_agreement: None,
        },
        text,
        exit_code: if gate.pass { 0 } else { 4 },
    })
}
