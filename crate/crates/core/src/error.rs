//! Error and diagnostic types shared across the crate.

use thiserror::Error;

/// A single model-validation finding, tied to the node or branch it concerns.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Diagnostic {
    pub subject: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(subject: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic {
            subject: subject.into(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.subject, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("coordinate {index} must be an integer (discrete factor), got {value}")]
    IntegerCoordRequired { index: usize, value: String },

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("invalid model:\n{}", format_diagnostics(.0))]
    InvalidModel(Vec<Diagnostic>),

    #[error("unknown node id {0:?}")]
    UnknownNode(String),

    #[error("unknown branch id {0:?}")]
    UnknownBranch(String),

    #[error("invalid operation spec: {0}")]
    InvalidOp(String),

    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),

    #[error("the zero module is not admitted here")]
    ZeroModule,

    #[error("colon by the zero module is undefined")]
    ZeroDivisor,

    #[error("product of the zero module with the full quotient field is undefined")]
    UndefinedProduct,

    #[error("the zero prime is excluded from this computation")]
    ZeroPrime,

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

fn format_diagnostics(found: &[Diagnostic]) -> String {
    found
        .iter()
        .map(|d| format!("  {d}"))
        .collect::<Vec<_>>()
        .join("\n")
}

pub type Result<T> = std::result::Result<T, Error>;
