use thiserror::Error;

use crate::word::Symbol;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("substitution target {0} occurs in its own replacement")]
    CyclicSubstitution(Symbol),

    #[error("rank n = {0} is out of range (need n >= 2)")]
    BadRank(u32),

    #[error("empty window [{0}, {1}]")]
    EmptyWindow(i64, i64),

    #[error("symbol {0} is not a sigma/rho generator")]
    ForeignSymbol(Symbol),

    #[error("generator {symbol} is outside the strand range of VB_{n}")]
    RankOutOfRange { symbol: Symbol, n: u32 },

    #[error("the trivial Schreier symbol has no expansion")]
    TrivialSymbol,

    #[error("word is not in the commutator subgroup (phi = ({0}, {1}))")]
    NotInKernel(i64, u8),

    #[error("cannot solve for {target}: it occurs {occurrences} times")]
    NotSolvable { target: String, occurrences: usize },

    #[error("script precondition failed at step {step}: {reason}")]
    ScriptPreconditionFailed { step: usize, reason: String },

    #[error("presentation still has parametric families; instantiate it first")]
    ParametricInput,

    #[error("window [{lo}, {hi}] is too narrow: need width of at least {needed} indices")]
    WindowTooNarrow { lo: i64, hi: i64, needed: i64 },

    #[error("presentation does not have the expected shape: {0}")]
    ShapeMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown identifier `{0}`")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
