use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// An argument that must be >= 1 (arccosh) or similar fell outside its
    /// domain by more than the rounding tolerance.
    #[error("numerical domain error: {0}")]
    NumericalDomain(String),

    #[error("degenerate plane: <u,u> = {0:e}")]
    DegeneratePlane(f64),

    #[error("frame does not span the space: {0}")]
    Rank(String),

    #[error("invalid tiling parameters (q, r) = ({q}, {r}): {reason}")]
    InvalidParams { q: u32, r: u32, reason: String },

    #[error("inadmissible parameters: {0}")]
    InadmissibleParameter(String),

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("geometric degeneracy: {0}")]
    GeometricDegeneracy(String),

    #[error("geometric inconsistency: {0}")]
    GeometricInconsistency(String),

    #[error("horoball too large: {0}")]
    HoroballTooLarge(String),

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("no valid packing: {0}")]
    NoValidPacking(String),

    /// A horoball crosses a face of the cell.
    #[error("horoball at A{vertex} crosses face u{face} (clearance {clearance:e})")]
    ConstraintViolation {
        vertex: usize,
        face: usize,
        clearance: f64,
    },
}
