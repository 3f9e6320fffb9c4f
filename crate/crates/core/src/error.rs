use thiserror::Error;

use crate::criteria::ClassReport;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient size must be in 1..=63, got {0}")]
    AmbientSize(usize),

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0} is undefined on the void complex")]
    VoidComplex(&'static str),

    #[error("{0} is undefined on the full simplex")]
    FullSimplex(&'static str),

    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),

    #[error("requested dimension {requested} exceeds the complex dimension {dimension}")]
    DimensionTooLarge { requested: isize, dimension: isize },

    #[error("{0} is undefined on the zero ideal")]
    ZeroIdeal(&'static str),

    #[error("{0} is undefined on the unit ideal")]
    UnitIdeal(&'static str),

    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("unrecognized field `{0}` (expected `rational` or `gf:P`)")]
    UnknownField(String),

    #[error("routes disagree: route A says {}, route B says {}", .0.0.verdict, .0.1.verdict)]
    RouteDisagreement(Box<(ClassReport, ClassReport)>),

    #[error("invalid harness configuration: {0}")]
    HarnessConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
