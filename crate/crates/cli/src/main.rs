//! `partis`: exact stake division for interrupted games of chance.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partis::solver::DEFAULT_SEQUENCE_CAP;
use partis::Rational;

use crate::commands::CommandError;

/// Largest triangle the `triangle` subcommand will print.
pub const TRIANGLE_DISPLAY_CAP: u32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "partis",
    version,
    about = "Divide the stakes of an interrupted game"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Divide the stake for a given number of games each player is missing.
    Solve(SolveArgs),
    /// Print the arithmetic triangle.
    Triangle(TriangleArgs),
    /// Value of the first game in a race to n.
    ValueFirst(ValueFirstArgs),
    /// Value of renouncing one throw of a dice wager.
    Dice(DiceArgs),
    /// Estimate the division by Monte Carlo and gate it against the exact one.
    Simulate(SimulateArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recursive,
    Feigned,
    ExactLength,
    Triangle,
    All,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Games each player still needs, e.g. `2,3`.
    #[arg(long, value_parser = parse_missing)]
    pub missing: Missing,
    #[arg(long, value_enum, default_value_t = Method::Recursive)]
    pub method: Method,
    /// Total stake to divide, as an integer or `a/b`.
    #[arg(long, value_parser = parse_stake)]
    pub stake: Option<Rational>,
    /// Largest number of sequences the enumeration methods may visit.
    #[arg(long, default_value_t = DEFAULT_SEQUENCE_CAP)]
    pub max_sequences: u64,
}

#[derive(Args, Debug)]
pub struct TriangleArgs {
    /// Number of bases to build.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=i64::from(TRIANGLE_DISPLAY_CAP)))]
    pub rows: u32,
}

#[derive(Args, Debug)]
pub struct ValueFirstArgs {
    /// Games needed to win the match.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    pub n: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DiceMode {
    Unconditional,
    Conditional,
}

#[derive(Args, Debug)]
pub struct DiceArgs {
    /// Which throw is renounced, counting from 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub throw: u32,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub throws_total: u32,
    #[arg(long, default_value_t = 6)]
    pub faces: u32,
    /// Number of winning faces.
    #[arg(long, default_value_t = 1)]
    pub favorable: u32,
    #[arg(long, value_enum, default_value_t = DiceMode::Unconditional)]
    pub mode: DiceMode,
    #[arg(long, value_parser = parse_stake, default_value = "1")]
    pub stake: Rational,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long, value_parser = parse_missing)]
    pub missing: Missing,
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Generator seed. Required so every run is reproducible.
    #[arg(long)]
    pub seed: u64,
    /// Largest σ-distance that still passes.
    #[arg(long, default_value_t = 4.0, value_parser = parse_gate)]
    pub sigma_gate: f64,
    /// Independent generator streams run in parallel.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub shards: u64,
}

#[derive(Clone, Debug)]
pub struct Missing(pub Vec<u32>);

fn parse_missing(s: &str) -> Result<Missing, String> {
    let counts = s
        .split(',')
        .map(|part| match part.trim().parse::<u32>() {
            Ok(0) => Err("each count must be at least 1".to_string()),
            Ok(n) => Ok(n),
            Err(_) => Err(format!("`{}` is not a positive integer", part.trim())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if counts.len() < 2 {
        return Err("at least two players are required".into());
    }
    Ok(Missing(counts))
}

fn parse_stake(s: &str) -> Result<Rational, String> {
    let stake: Rational = s.parse().map_err(|e: partis::Error| e.to_string())?;
    if stake.is_negative() {
        return Err("stake must not be negative".into());
    }
    Ok(stake)
}

fn parse_gate(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(g) if g.is_finite() && g > 0.0 => Ok(g),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => commands::solve(&args),
        Command::Triangle(args) => commands::triangle(&args),
        Command::ValueFirst(args) => commands::value_first(&args),
        Command::Dice(args) => commands::dice(&args),
        Command::Simulate(args) => commands::simulate(&args),
    };
    match result {
        Ok(report) => {
            print!("{}", output::render(&report, cli.format));
            ExitCode::from(report.exit_code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

impl CommandError {
    fn exit_code(&self) -> u8 {
        match self {
            CommandError::Usage(_) => 2,
            CommandError::Cap(_) => 3,
            CommandError::Internal(_) => 1,
        }
    }
}
