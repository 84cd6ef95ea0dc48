use thiserror::Error;

/// Errors raised by the combinatorial and cohomological operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be weakly increasing, got {0:?}")]
    NotWeaklyIncreasing(Vec<usize>),

    #[error("partition {parts:?} does not fit in a {rows}x{cols} box")]
    OutsideBox {
        parts: Vec<usize>,
        rows: usize,
        cols: usize,
    },

    #[error("jump sequence {jumps:?} is not strictly increasing within [1, {n}]")]
    InvalidJumps { jumps: Vec<usize>, n: usize },

    #[error("invalid sign character {0:?}; expected '+' or '-'")]
    InvalidSign(char),

    #[error("sign sequence must be non-empty")]
    EmptySigns,

    #[error("part count k = {k} exceeds ambient dimension n = {n}")]
    KExceedsN { k: usize, n: usize },

    #[error("weight q = {q} exceeds ambient dimension n = {n}")]
    QExceedsN { q: usize, n: usize },

    #[error("inadmissible differential from {src} to {tgt}")]
    InadmissibleShift { src: String, tgt: String },

    #[error("more than {cap} distinct candidate outcomes")]
    CandidateOverflow { cap: usize },

    #[error("parameter out of domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
