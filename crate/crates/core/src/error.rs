use alloc::string::String;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ambient strand counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("generator r{i}_{j} is not valid for n = {n}")]
    InvalidGenerator { i: usize, j: usize, n: usize },

    #[error("relation {index} is not homogeneous of degree 2")]
    NotQuadratic { index: usize },

    #[error("relation {index} is linearly dependent on the preceding relations")]
    DependentRelation { index: usize },

    #[error("relation {index} uses a generator outside the presentation")]
    UnknownGenerator { index: usize },

    #[error("tensor space of dimension {dimension} exceeds the size budget {budget}")]
    BudgetExceeded { dimension: u128, budget: usize },

    #[error("invalid relator symbol {0}")]
    InvalidSymbol(String),

    #[error("element is not a syzygy: delta_K does not vanish")]
    NotASyzygy,

    #[error("syzygy has a nonzero component in degree {degree}, below degree 3")]
    LowDegreeComponent { degree: usize },

    #[error("element does not decompose over the relator basis: {0}")]
    NotInRelatorSpan(String),

    #[error("unimplemented: {0}")]
    Unimplemented(&'static str),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
