use thiserror::Error;

use crate::model::LoadError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),

    #[error(transparent)]
    Lib(#[from] hopfpi::Error),

    #[error("{0}")]
    Usage(String),

    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    /// Refusals on mathematical grounds are verdicts, not input errors.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            CliError::Lib(hopfpi::Error::Precondition { .. } | hopfpi::Error::NotContained { .. })
        )
    }
}
