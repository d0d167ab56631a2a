use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("empty product range {start}..={end}")]
    EmptyRange { start: u64, end: u64 },

    #[error("triangle order must be at least 1")]
    ZeroOrder,

    #[error("position {position} is outside base {base} (expected 1..{base})")]
    PositionOutOfRange { base: u32, position: u32 },

    #[error("a player with nothing missing has already won")]
    ZeroMissing,

    #[error("invalid game state: {0}")]
    InvalidState(String),

    #[error("invalid division: {0}")]
    InvalidDivision(String),

    #[error("game already decided; a sequence-based method needs a live state")]
    DecidedState,

    #[error("instance too large for {method} enumeration: {players}^{length} sequences exceeds the cap of {cap}")]
    TooLarge {
        method: &'static str,
        players: usize,
        length: u32,
        cap: u64,
    },

    #[error("outcome sequence has {actual} rounds, expected {expected}")]
    SequenceLength { expected: usize, actual: usize },

    #[error("player index {index} out of range for {players} players")]
    PlayerOutOfRange { index: usize, players: usize },

    #[error("a match must be played to at least 2 wins, got {0}")]
    MatchTooShort(u32),

    #[error("advantage coefficient {0} is outside [0, 1]")]
    AdvantageOutOfRange(String),

    #[error("lottery must have at least one branch and every weight must be positive")]
    InvalidLottery,

    #[error("invalid dice game: {0}")]
    InvalidDiceGame(String),

    #[error("throw {throw} is outside 1..={total}")]
    ThrowOutOfRange { throw: u32, total: u32 },

    #[error("player count mismatch: exact division has {exact}, report has {report}")]
    PlayerCountMismatch { exact: usize, report: usize },

    #[error("trial count must be positive")]
    NoTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
