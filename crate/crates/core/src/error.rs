use crate::arith::Fraction;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed fraction `{0}`")]
    Malformed(String),
    #[error("tangle {0} is an integer; every tangle must be non-integral")]
    IntegralTangle(Fraction),
    #[error("a Montesinos knot needs at least 3 tangles, got {0}")]
    TooFewTangles(usize),
    #[error("tangles ({0}) describe a link with more than one component, not a knot")]
    NotAKnot(String),
    #[error("vertices {0} and {1} are not joined by an edge of the diagram")]
    NotAdjacent(Fraction, Fraction),
    #[error("u = {u} lies outside {range}")]
    OutOfRange { u: Fraction, range: String },
    #[error("a constant edgepath has no endpoint on u = 0")]
    ConstantEdgepath,
    #[error("every edgepath of the system is constant")]
    AllConstant,
    #[error("internal assumption failed: {0}")]
    InternalAssumption(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
