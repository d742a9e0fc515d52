use thiserror::Error;

/// Errors raised by word primitives and the fully-bordered machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the empty word")]
    EmptyWord,
    #[error("invalid letter {ch:?} at position {pos}; only '0' and '1' are allowed")]
    Parse { pos: usize, ch: char },
    #[error("rotation point {point} out of range for word of length {len}")]
    PointOutOfRange { point: usize, len: usize },
    #[error("word {0} is not primitive")]
    NotPrimitive(String),
    #[error("pattern of length {pattern} is longer than the word of length {word}")]
    PatternTooLong { pattern: usize, word: usize },
    #[error("{y} is not a border of {u}")]
    NotABorder { y: String, u: String },
    #[error("border {y} is not longer than t_v = {t_v:?}")]
    BorderTooShort { y: String, t_v: String },
    #[error("({u},{v}) is not a fully bordered pair")]
    NotFullyBordered { u: String, v: String },
    #[error("descent requires |v| <= |u|, got |u| = {u_len}, |v| = {v_len}")]
    Orientation { u_len: usize, v_len: usize },
    #[error("descent requires |uv| > 2")]
    TooShort,
    #[error("length {len} exceeds the bound {bound}")]
    BoundExceeded { len: usize, bound: usize },
    #[error("bound {bound} out of range {min}..={max}")]
    BoundOutOfRange {
        bound: usize,
        min: usize,
        max: usize,
    },
    #[error("descent of ({u},{v}) contradicts the split v = v'u'v': {detail}")]
    DescentContradiction {
        u: String,
        v: String,
        detail: String,
    },
    #[error("derivation trace does not replay: {0}")]
    Replay(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
