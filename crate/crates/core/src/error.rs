use thiserror::Error;

use crate::grid::GridId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("node count {0} is even; grids need N = 2n + 1 nodes")]
    EvenNodeCount(usize),
    #[error("node count {0} is too small; at least 3 nodes are required")]
    TooFewNodes(usize),
    #[error("expected {expected} sample values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("sample {index} is not finite ({value})")]
    NonFiniteSample { index: usize, value: f64 },
    #[error("samples live on grid {found} but grid {expected} is required")]
    GridMismatch { expected: GridId, found: GridId },
    #[error("samples have {found} nodes but the configuration uses N = {expected}")]
    NodeCountMismatch { expected: usize, found: usize },
    #[error("truncation order must be at least 1")]
    EmptyTruncation,
    #[error("interpolation multiplier H_{k} = {value:e} is too close to zero to invert")]
    DegenerateMultiplier { k: usize, value: f64 },
    #[error("quadrature needs at least {required} points, got {given}")]
    InsufficientQuadraturePoints { required: usize, given: usize },
    #[error("periodic spline system is singular")]
    SingularSystem,
    #[error("order r = {order} is outside the range of this construction ({reason})")]
    UnsupportedOrder { order: u32, reason: &'static str },
    #[error("grid index {0} is out of range; expected 0 or 1")]
    InvalidGridId(u8),
}
