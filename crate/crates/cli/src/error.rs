use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{}: {message}", path.display())]
    Io { path: PathBuf, message: String },

    #[error("{}:{line}:{column}: {}{message}", path.display(), field.as_ref().map(|f| format!("field `{f}`: ")).unwrap_or_default())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        field: Option<String>,
        message: String,
    },

    #[error("{}:{line}:{column}: field `{field}`: {message}", path.display())]
    Invalid {
        path: PathBuf,
        line: usize,
        column: usize,
        field: String,
        message: String,
    },

    #[error("--{flag}: {message}")]
    Flag { flag: &'static str, message: String },

    #[error("cannot serialize report: {0}")]
    Output(#[from] serde_json::Error),

    #[error("{0}")]
    Analysis(#[from] elasticity_core::Error),
}
