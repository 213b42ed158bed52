use thiserror::Error;

/// Errors surfaced by matrix, mode, and channel construction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not Hermitian")]
    NotHermitian,
    #[error("subsystem out of range")]
    SubsystemOutOfRange,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix must be 2x2")]
    NotTwoByTwo,
    #[error("frequency must be positive")]
    FrequencyNotPositive,
    #[error("temperature must be non-negative")]
    NegativeTemperature,
    #[error("damping probability out of range")]
    DampingOutOfRange,
    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),
    #[error("state not normalized")]
    NotNormalized,
    #[error("invalid mode index")]
    InvalidModeIndex,
}
