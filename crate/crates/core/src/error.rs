use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("vector of norm {0} is not a root")]
    NotRoot(i64),
    #[error("residue has q0 = 0, no root lifts it")]
    NotInV1,
    #[error("residue lies in R1, no root lifts it")]
    InR1,
    #[error("element is not in the radical")]
    NotInRadical,
    #[error("unsupported for {0}")]
    Unsupported(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("elements belong to different surfaces")]
    SurfaceMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
