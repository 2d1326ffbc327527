use thiserror::Error;

/// Errors raised by tilekit operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a tile must have at least one element")]
    EmptySet,
    #[error("duplicate element {0} in set")]
    DuplicateElement(String),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("element {element} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        element: String,
        expected: usize,
        found: usize,
    },
    #[error("diameter {diameter} exceeds the state-graph cap {cap}")]
    DiameterTooLarge { diameter: u64, cap: u64 },
    #[error("|A| = {tile} does not divide the group order {order}")]
    CardinalityMismatch { tile: u64, order: u64 },
    #[error("certificate does not verify: {0}")]
    InvalidCertificate(String),
    #[error("brick pair is not tileable")]
    NotTileable,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
