use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: undefined for empty word")]
    EmptyWord { op: &'static str },

    #[error("window exceeds word: length {n} requested from a word of length {len}")]
    WindowExceedsWord { n: usize, len: usize },

    #[error("symbol {symbol:?} at position {position} is outside the alphabet {alphabet:?}")]
    InvalidSymbol {
        symbol: char,
        position: usize,
        alphabet: String,
    },

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("parse error at token {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("cannot normalize: slope starts with 1 but has no further partial quotient")]
    CannotNormalize,

    #[error("normalize first: slope must satisfy a_1 >= 2 (alpha < 1/2)")]
    NotNormalized,

    #[error("CF digits exhausted: partial quotient a_{needed} is not available")]
    DigitsExhausted { needed: usize },

    #[error("no such semiconvergent: k = {k}, l = {ell}")]
    NoSuchSemiconvergent { k: usize, ell: u64 },

    #[error("index k = {k} is out of range")]
    IndexOutOfRange { k: isize },

    #[error("denominator overflow at q_{k}")]
    Overflow { k: usize },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("slope {p}/{q} must lie strictly between 0 and 1")]
    InvalidSlope { p: String, q: String },

    #[error("saturation failed: {found} of {expected} factors of length {n} within a prefix cap of {cap}")]
    SaturationFailed {
        n: usize,
        found: usize,
        expected: usize,
        cap: usize,
    },

    #[error("word {word} is not primitive")]
    NotPrimitive { word: String },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("malformed Rauzy graph: {0}")]
    MalformedGraph(String),

    #[error("Rauzy graph order must be at least 1")]
    ZeroOrder,

    #[error("length {n} is below the minimum {min}")]
    LengthTooSmall { n: usize, min: usize },

    #[error("source is not Sturmian")]
    NotSturmian,
}
