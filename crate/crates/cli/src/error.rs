use thiserror::Error;

/// Everything that can stop a command. Each variant has its own exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: unresolved reference `{name}`")]
    UnresolvedReference { line: usize, name: String },

    #[error("line {line}: `{name}` is invalid: {source}")]
    Validation {
        line: usize,
        name: String,
        source: xmlift::Error,
    },

    #[error("unknown command `{0}`")]
    UnknownCommand(String),

    #[error("{context}: {source}")]
    Computation {
        context: String,
        source: xmlift::Error,
    },

    #[error("malformed report, line {line}: {message}")]
    ReportFormat { line: usize, message: String },
}

impl CliError {
    /// Process exit status for this error category.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax { .. } => 3,
            CliError::UnresolvedReference { .. } => 4,
            CliError::Validation { source, .. } | CliError::Computation { source, .. }
                if matches!(source, xmlift::Error::Defect(_)) =>
            {
                70
            }
            CliError::Validation { .. } => 5,
            CliError::UnknownCommand(_) => 6,
            CliError::Computation { .. } => 7,
            CliError::Io { .. } => 8,
            CliError::ReportFormat { .. } => 9,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

pub(crate) fn computation(context: impl Into<String>) -> impl FnOnce(xmlift::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Computation { context, source }
}
