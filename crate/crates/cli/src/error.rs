//! Error type for the calculator front end.
//!
//! Exit codes: 0 success, 1 for anything wrong with the expression text
//! (lexing, parsing, unknown symbols), 2 for semantic problems (dimension,
//! metric, index or grade out of range), 3 for internal invariant failures.

use gacalc_core::Error as CoreError;

#[derive(Debug)]
pub enum CliError {
    /// The expression text could not be understood. `offset` is the 0-based
    /// byte position in the source line.
    Syntax { offset: usize, message: String },
    /// Evaluating a well-formed expression hit a kernel error; `offset`
    /// points at the operator or operand that triggered it.
    Eval { offset: usize, source: CoreError },
    /// A problem with the command-line configuration (metric spec, metric
    /// file, dimension mismatch between file and `--dim`).
    Config(String),
    /// A kernel error raised outside expression evaluation, e.g. while
    /// constructing the algebra from the requested metric.
    Kernel(CoreError),
}

impl CliError {
    pub fn syntax(offset: usize, message: String) -> Self {
        CliError::Syntax { offset, message }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Syntax { .. } => 1,
            CliError::Config(_) => 2,
            CliError::Eval { source, .. } | CliError::Kernel(source) => {
                if source.is_internal() {
                    3
                } else {
                    2
                }
            }
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Syntax { offset, message } => {
                write!(f, "syntax error at offset {offset}: {message}")
            }
            CliError::Eval { offset, source } => {
                write!(f, "error at offset {offset}: {source}")
            }
            CliError::Config(message) => write!(f, "{message}"),
            CliError::Kernel(source) => write!(f, "{source}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Kernel(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_class() {
        assert_eq!(CliError::syntax(3, "x".into()).exit_code(), 1);
        assert_eq!(CliError::Config("bad metric".into()).exit_code(), 2);
        let oob = CoreError::IndexOutOfRange { index: 5, dim: 3 };
        assert_eq!(CliError::Kernel(oob).exit_code(), 2);
        let internal = CoreError::Internal("impossible".into());
        assert_eq!(CliError::Kernel(internal).exit_code(), 3);
    }

    #[test]
    fn syntax_message_carries_offset() {
        let msg = CliError::syntax(3, "invalid operator `^^`".into()).to_string();
        assert_eq!(msg, "syntax error at offset 3: invalid operator `^^`");
    }
}
