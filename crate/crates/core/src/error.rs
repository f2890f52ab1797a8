use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the exact-arithmetic, sequence and certificate layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid range [{lo}, {hi}]: {reason}")]
    InvalidRange { lo: i64, hi: i64, reason: String },

    #[error("index {index} outside stored range [{first}, {last}] of `{name}`")]
    IndexOutOfRange {
        name: String,
        index: u64,
        first: u64,
        last: i64,
    },

    #[error("invalid sequence definition: {0}")]
    Definition(String),

    #[error("binomial sum for `{name}` at n={n} is not an integer: {value}")]
    NonIntegral { name: String, n: u64, value: String },

    #[error("recurrence for `{name}` breaks at n={n}: {reason}")]
    Recurrence {
        name: String,
        n: u64,
        reason: String,
    },

    #[error("term {index} of `{name}` is {value}, expected a positive term")]
    NonPositiveTerm {
        name: String,
        index: u64,
        value: String,
    },

    #[error("b-file line {line}: {reason}")]
    BFile { line: usize, reason: String },

    #[error("window exhausted: width {width} cannot survive depth {depth}")]
    WindowExhausted { width: u64, depth: u32 },

    #[error("interlacing violated at n={n}")]
    InterlacingViolated { n: u64 },

    #[error("sign certificate inconclusive from k0={k0}: {reason}")]
    Inconclusive { k0: i64, reason: String },

    #[error("cache I/O on {path}: {source}")]
    Cache {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
