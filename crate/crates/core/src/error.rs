use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrystalError {
    #[error("operator returned 0 while computing S_{color} (crystal is not normal here)")]
    NonNormal { color: usize },

    #[error("invalid domain configuration: {0}")]
    InvalidConfig(String),

    #[error("extremality characterizations disagree: all walls equal = {walls_equal}, minimal lengths = {minimal_lengths}")]
    InternalInconsistency { walls_equal: bool, minimal_lengths: bool },

    #[error("path has no walls; the spin image is the empty tensor")]
    EmptySpin,

    #[error("could not reach an extremal vector within {steps} steps")]
    NotReached { steps: usize },

    #[error("acted position {position} touches the truncation cut")]
    MarginTooSmall { position: i64 },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CrystalError>;
