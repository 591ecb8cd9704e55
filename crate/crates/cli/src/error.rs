use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CliError {
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax { position: usize, expected: String, found: String },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("{0}")]
    DomainParse(String),
    #[error("cannot divide by {0}, which is not a unit constant")]
    NonUnitDivisor(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] punctual::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "SyntaxError",
            CliError::UnknownVariable(_) => "UnknownVariable",
            CliError::DomainParse(_) => "DomainParseError",
            CliError::NonUnitDivisor(_) => "NonUnitDivisor",
            CliError::Usage(_) => "UsageError",
            CliError::Core(e) => e.kind(),
        }
    }

    /// 2 for malformed input, 1 for errors raised by the computation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) => 1,
            _ => 2,
        }
    }
}
