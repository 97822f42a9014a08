//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,

    #[error("{0}")]
    NotApplicable(String),

    #[error("decomposition failed verification: {0}")]
    InvalidDecomposition(String),

    #[error("decomposition has no slabs but its target is a nonzero module")]
    EmptyDecomposition,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("{what} out of range: {value} not in 0..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("budget exceeded: {knob} allows {limit} but {required} is required; raise `{knob}` to proceed")]
    Budget {
        knob: &'static str,
        limit: usize,
        required: usize,
    },

    #[error("iteration cap of {0} steps exceeded")]
    IterationCap(usize),

    #[error("retry cap exhausted: could not draw an ideal with {wanted} minimal generators (n={n}, max_degree={max_degree})")]
    RetryCap {
        wanted: usize,
        n: usize,
        max_degree: u32,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
