use std::path::PathBuf;

use thiserror::Error;

use crate::cfn::CfnError;
use crate::distance::ParamError;
use crate::pain::PainError;
use crate::perturbation::PerturbationError;
use crate::score::ScoreError;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Cfn(#[from] CfnError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Score(#[from] ScoreError),
    #[error(transparent)]
    Perturbation(#[from] PerturbationError),
    #[error(transparent)]
    Pain(#[from] PainError),
}

impl Error {
    /// Stable machine-readable category.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Usage(_) => "usage",
            Error::Io { .. } => "io",
            Error::Csv(_) => "csv",
            Error::Json(_) => "json",
            Error::Cfn(_) => "cfn",
            Error::Params(_) => "params",
            Error::Score(_) => "score",
            Error::Perturbation(_) => "perturbation",
            Error::Pain(_) => "pain",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::Io { .. } => 3,
            _ => 1,
        }
    }
}
