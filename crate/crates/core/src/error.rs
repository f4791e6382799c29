use thiserror::Error;

/// Errors produced by constructors, generators and the matching pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate {0} exceeds the ±2^30 bound")]
    CoordinateOutOfRange(i64),
    #[error("point set contains duplicate points")]
    DuplicatePoints,
    #[error("point set is not in general position (collinear triple)")]
    NotGeneralPosition,
    #[error("coloring is not a balanced {0}-coloring")]
    UnbalancedColoring(usize),
    #[error("color id {0} out of range for {1} colors")]
    ColorOutOfRange(usize, usize),
    #[error("rank {k} out of range for {len} items")]
    RankOutOfRange { k: usize, len: usize },
    #[error("ray does not intersect the convex hull")]
    RayMissesHull,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("separator construction failed: {0}")]
    Construction(&'static str),
    #[error("no bichromatic pair is available for the greedy matching")]
    InfeasiblePairing,
    #[error("instance too large for exhaustive search (n = {0}, limit {1})")]
    SizeLimit(usize, usize),
    #[error("generator could not realize the instance within the coordinate bound")]
    Resolution,
}

pub type Result<T> = std::result::Result<T, Error>;
