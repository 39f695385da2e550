use thiserror::Error;

/// Input and usage errors surfaced by the CLI.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("JSON error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },

    #[error("invalid input: {0}")]
    Semantic(String),

    #[error("polynomial `{text}`, column {column}: {message}")]
    Poly { text: String, column: usize, message: String },

    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },

    #[error(transparent)]
    Core(#[from] leibniz_forge::Error),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        let text = e.to_string();
        let message = text.split(" at line ").next().unwrap_or(&text).to_string();
        CliError::Json { line: e.line(), column: e.column(), message }
    }
}
