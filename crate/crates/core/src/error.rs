use thiserror::Error;

/// Largest `m + n` that the brute-force enumerator will accept.
pub const ORACLE_MAX_TOTAL: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: negative part at index {index}")]
    NegativePart { index: usize },

    #[error("invalid shape: not weakly decreasing at index {index}")]
    NotDecreasing { index: usize },

    #[error("cannot parse shape {input:?}: {reason}")]
    ParseShape { input: String, reason: String },

    #[error("cannot parse path {input:?}: {reason}")]
    ParsePath { input: String, reason: String },

    #[error("step {step} leaves the grid (negative coordinate)")]
    NegativeCoordinate { step: usize },

    #[error("oracle scale exceeded: m + n = {total} > {}", ORACLE_MAX_TOTAL)]
    OracleScale { total: usize },

    #[error("{axis} {index} is outside the path's span")]
    OutOfSpan { axis: &'static str, index: usize },

    #[error("shift moves the path off the grid")]
    ShiftUnderflow,

    #[error("cannot concatenate: prefix ends at ({0},{1}) but suffix starts at ({2},{3})")]
    Junction(usize, usize, usize, usize),

    #[error("path pair outside the domain: {0}")]
    Domain(String),

    #[error("disjoint pair: paths have no common vertex")]
    DisjointPair,

    #[error("no cut found")]
    NoCut,

    #[error("cut ordering violated")]
    CutOrdering,

    #[error("zero polynomial has no root count")]
    ZeroPolynomial,
}

pub type Result<T> = std::result::Result<T, Error>;
