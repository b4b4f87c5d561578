use thiserror::Error;

/// Errors surfaced by the exact kernels, the series engine, and the
/// export/parse layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("constant term of the divisor is not an invertible scalar")]
    NonUnitConstantTerm,

    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,

    #[error("series to revert must have zero constant term")]
    ReversionConstantTerm,

    #[error("linear coefficient of the series to revert is not an invertible scalar")]
    ReversionLinearTerm,

    #[error("coefficient at t^{0} is nonzero, cannot divide by t^{1}")]
    NonzeroLowOrder(usize, usize),

    #[error("argument out of range: {0}")]
    Domain(String),

    #[error("routes disagree for {family} at n = {n}")]
    RouteDisagreement { family: String, n: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
