use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("empty text has no suffix array")]
    EmptyText,
    #[error("patterns must be nonempty")]
    EmptyPattern,
    #[error("patterns must share one common length")]
    UnequalPatternLengths,
    #[error("symbol {symbol} is outside the declared alphabet [0..{sigma})")]
    SymbolOutOfRange { symbol: crate::Symbol, sigma: crate::Symbol },
    #[error("alphabet size must be at least 1")]
    ZeroAlphabet,
    #[error("tau={tau} out of range [1..={max}]")]
    TauOutOfRange { tau: usize, max: usize },
    #[error("dm->LZ requires distinct patterns")]
    DuplicatePatterns,
    #[error("dm->LZ requires pattern length m >= 3, got {m}")]
    PatternTooShort { m: usize },
    #[error("color and value arrays differ in length ({colors} vs {values})")]
    ColorLengthMismatch { colors: usize, values: usize },
    #[error("insert positions must be strictly increasing and within [1..=result length]")]
    InvalidInsertPositions,
    #[error("delete positions must lie within [1..=sequence length]")]
    InvalidDeletePositions,
    #[error("position {pos} is not in R(tau, T)")]
    NotInR { pos: usize },
    #[error("infinite extension of the empty text is undefined")]
    EmptyInfiniteText,
    #[error("input of length {len} exceeds the oracle size guard {guard}")]
    SizeGuard { len: usize, guard: usize },
    #[error("int encoding arguments out of range: {reason}")]
    IntEncoding { reason: String },
    #[error("string nesting requires a nonempty pair collection P")]
    EmptyPairCollection,
    #[error("range prefix search reduction requires at least one query")]
    NoQueries,
    #[error("query range ({b}, {e}] out of bounds for {m} strings")]
    QueryRangeOutOfBounds { b: usize, e: usize, m: usize },
    #[error("infeasible parameters: {reason}")]
    InfeasibleParams { reason: String },
}
