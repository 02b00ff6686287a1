use std::fmt;

use thiserror::Error;

/// Which of the four component zero sets an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSetId {
    S1,
    S2,
    S3,
    S4,
}

impl fmt::Display for ZeroSetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ZeroSetId::S1 => "s1",
            ZeroSetId::S2 => "s2",
            ZeroSetId::S3 => "s3",
            ZeroSetId::S4 => "s4",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector part too small to define an imaginary unit (norm {0:e})")]
    DegenerateVector(f64),
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("not a unit quaternion (norm {0})")]
    NotUnit(f64),
    #[error("point of norm {norm} lies outside the open ball of radius {radius}")]
    OutOfDomain { norm: f64, radius: f64 },
    #[error("degree {degree} exceeds the truncation cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("invalid series: {0}")]
    InvalidSeries(String),
    #[error("path leaves the disk of radius {rho} at vertex {index}")]
    PathOutsideDomain { index: usize, rho: f64 },
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("paths do not share endpoints")]
    EndpointMismatch,
    #[error("boundary traces differ in radius or sample count")]
    TraceMismatch,
    #[error("invalid boundary trace: {0}")]
    InvalidTrace(String),
    #[error("total-space elements live over different frames")]
    FrameMismatch,
    #[error("leading coefficient vanishes")]
    DegenerateLeadingCoefficient,
    #[error("component {0} is identically zero")]
    IdenticallyZeroComponent(ZeroSetId),
    #[error("zero data is inconsistent (best residual {residual:e})")]
    InconsistentData { residual: f64 },
    #[error("zero data does not determine the polynomial uniquely")]
    AmbiguousData,
    #[error("coefficient vector parts do not span R^3")]
    NotPsrb,
    #[error("derivative is not in the spanning class")]
    NotInPbsrb,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
