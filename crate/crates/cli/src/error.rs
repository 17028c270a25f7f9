use thiserror::Error;

/// Failures mapped onto the process exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {0}", error_code(.0))]
    Invalid(#[from] pierik_core::Error),
    #[error("cache: {0}")]
    Cache(String),
    #[error("violation: {0}")]
    Violation(String),
    #[error("disagreement: {0}")]
    Disagreement(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Cache(_) => 2,
            CliError::Violation(_) | CliError::Io(_) => 1,
            CliError::Disagreement(_) => 3,
        }
    }
}

fn error_code(e: &pierik_core::Error) -> &'static str {
    use pierik_core::Error::*;
    match e {
        Parse(_) => "parse",
        Monotonicity(_) => "monotonicity",
        Strictness(_) => "strictness",
        OutOfBounds { .. } => "out-of-bounds",
        NotContained { .. } => "not-contained",
        EmptyShape => "empty-shape",
        NotARim => "not-a-rim",
        NegativeA(_) => "negative-a",
        WrongSpace(_) => "wrong-space",
        WrongDiagramKind(_) => "wrong-diagram-kind",
        OutOfRangeP { .. } => "p-out-of-range",
        NegativeContent(_) => "negative-content",
    }
}
