use thiserror::Error;

/// Errors shared by every module. Maps are total on the regular locus;
/// anything off it is reported structurally rather than extended by
/// continuity.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid shape: k = {k}, n = {n} (need 2 <= k <= n)")]
    InvalidShape { k: i64, n: i64 },
    #[error("unstable range: n = {n} < 2k - 1 for k = {k}")]
    UnstableRange { k: usize, n: usize },
    #[error("singular state: {0}")]
    SingularState(String),
    #[error("singular configuration: {0}")]
    SingularConfiguration(String),
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),
    #[error("degenerate quadruple: repeated point in cross-ratio denominator")]
    DegenerateQuadruple,
    #[error("pole at evaluation point")]
    Pole,
    #[error("non-square matrix: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix size {0} exceeds supported determinant size 32")]
    MatrixTooLarge(usize),
    #[error("exact division failure: {0}")]
    ExactDivisionFailure(String),
    #[error("branch unavailable: {0}")]
    BranchUnavailable(String),
    #[error("tolerance exceeded: {0}")]
    ToleranceExceeded(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
