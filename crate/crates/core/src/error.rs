use thiserror::Error;

/// Errors produced by the construction, counting and ranking routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be in 2..=256, got {0}")]
    InvalidAlphabet(usize),

    #[error("word must be nonempty")]
    EmptyWord,

    #[error("symbol {symbol} at position {position} is outside the alphabet 0..{k}")]
    SymbolOutOfRange { symbol: u32, position: usize, k: usize },

    #[error("cannot parse word {0:?}")]
    Parse(String),

    #[error("order n must be at least {min}, got {n}")]
    InvalidOrder { n: usize, min: usize },

    #[error("length {len} is outside the valid interval ({lo}, {hi}] for n={n}, k={k}")]
    LengthOutOfRange { n: usize, k: usize, len: u128, lo: u128, hi: u128 },

    #[error("k^n = {k}^{n} does not fit in exact 126-bit arithmetic")]
    Overflow { n: usize, k: usize },

    #[error("marker index {i} is outside 1..={max} for n={n}")]
    MarkerIndex { i: usize, n: usize, max: usize },

    #[error("surplus {s} must be smaller than n={n}")]
    Surplus { s: usize, n: usize },

    #[error("word is periodic (period {period}); it has no Lyndon rotation")]
    Periodic { period: usize },

    #[error("enumerating {candidates} candidate words exceeds the oracle limit {limit}")]
    OracleLimit { candidates: u128, limit: u128 },

    #[error("no successor of {0} stays inside the target set")]
    NoSuccessorInSet(String),

    #[error("successor mode requires k = 2, got k = {0}")]
    SuccessorNeedsBinary(usize),

    #[error("start word has length {got}, expected {expected}")]
    StartLength { got: usize, expected: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
