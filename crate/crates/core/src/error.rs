use alloc::boxed::Box;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must live in the same `N^d` do not.
    DimensionMismatch { expected: usize, found: usize },
    /// Ambient dimension must be at least one.
    ZeroDimension,
    /// `I : 0` is not defined here.
    ColonByZero,
    /// Colon iteration did not reach a fixed point within the cap.
    SaturationDiverged { cap: usize },
    /// `inner ⊆ outer` was required.
    NotContained,
    /// The quotient has infinite length.
    InfiniteLength,
    /// The finite-difference tail never stayed constant for a full window.
    Inconclusive { terms: usize, tail: usize, window: usize },
    /// Not enough terms to take the requested differences.
    SequenceTooShort { len: usize, needed: usize },
    /// A d-th difference settled on a negative value.
    NegativeLeadingDifference,
    /// Zero or unit ideal passed where a proper nonzero ideal is needed.
    TrivialIdeal,
    /// The graded family has a zero ideal in degree one.
    EmptyFamily,
    /// Fewer points than the check needs.
    InsufficientData { points: usize, needed: usize },
    /// The requested semigroup level is neither materialized nor generated.
    LevelUnavailable { level: u32 },
    /// Semigroup data that cannot describe a subsemigroup of `N^{d+1}` with finite levels.
    InvalidSemigroup(&'static str),
    /// A dense grid for the requested computation would exceed the size cap.
    TooLarge { cells: u128 },
    /// Valuation weights must all be at least one.
    InvalidWeight { index: usize },
    /// A count did not fit in 128 bits.
    Overflow,
    /// A parameter that must be positive was zero.
    ZeroParameter(&'static str),
    /// An error raised while computing term `index` of a sequence.
    AtIndex { index: usize, source: Box<Error> },
}

impl Error {
    pub(crate) fn at(index: usize, source: Error) -> Self {
        Error::AtIndex { index, source: Box::new(source) }
    }

    /// The innermost error, with any index wrappers removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtIndex { source, .. } => source.root(),
            e => e,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroDimension => f.write_str("ambient dimension must be positive"),
            Error::ColonByZero => f.write_str("colon by the zero ideal is undefined"),
            Error::SaturationDiverged { cap } => {
                write!(f, "saturation did not stabilize within {cap} colon steps")
            }
            Error::NotContained => f.write_str("inner not contained in outer"),
            Error::InfiniteLength => f.write_str("quotient has infinite length"),
            Error::Inconclusive { terms, tail, window } => write!(
                f,
                "inconclusive: after {terms} terms the constant tail has length {tail} < window {window}"
            ),
            Error::SequenceTooShort { len, needed } => {
                write!(f, "sequence has {len} terms, need at least {needed}")
            }
            Error::NegativeLeadingDifference => {
                f.write_str("leading difference stabilized at a negative value")
            }
            Error::TrivialIdeal => f.write_str("ideal must be neither zero nor the unit ideal"),
            Error::EmptyFamily => f.write_str("graded family is zero in degree one"),
            Error::InsufficientData { points, needed } => {
                write!(f, "insufficient data: {points} points, need at least {needed}")
            }
            Error::LevelUnavailable { level } => write!(f, "level {level} is unavailable"),
            Error::InvalidSemigroup(why) => write!(f, "invalid semigroup: {why}"),
            Error::TooLarge { cells } => write!(f, "dense grid of {cells} cells exceeds the size cap"),
            Error::InvalidWeight { index } => write!(f, "weight {index} is below 1"),
            Error::Overflow => f.write_str("count overflowed 128 bits"),
            Error::ZeroParameter(name) => write!(f, "{name} must be positive"),
            Error::AtIndex { index, source } => write!(f, "at index {index}: {source}"),
        }
    }
}

impl core::error::Error for Error {}
