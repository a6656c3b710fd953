use thiserror::Error;

/// Errors raised by space construction, operation dispatch and the checkers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("non-finite coordinate at index {0}")]
    NonFinite(usize),

    #[error("cone not pointed/generating: rank {rank} < {dim}")]
    NotPointed { rank: usize, dim: usize },

    #[error("direction not interior: facet {facet} has a_i.x = {value:e} below margin {margin:e}")]
    NotInterior {
        facet: usize,
        value: f64,
        margin: f64,
    },

    #[error("not on specific ray: residual {residual:e} exceeds {bound:e}")]
    OffRay { residual: f64, bound: f64 },

    #[error("unknown law id `{0}`")]
    UnknownLaw(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("operation requires a {expected} space, got {got}")]
    WrongSpace {
        expected: &'static str,
        got: &'static str,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
