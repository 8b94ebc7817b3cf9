use linstat_core::Error;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FailureKind {
    Validation,
    Numerical,
}

/// The single structured error object written to stderr.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub code: &'static str,
    pub message: String,
}

impl Failure {
    pub fn validation(code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind: FailureKind::Validation,
            code,
            message: message.into(),
        }
    }

    pub fn numerical(code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind: FailureKind::Numerical,
            code,
            message: message.into(),
        }
    }

    pub fn from_core(e: Error) -> Self {
        let code = match e {
            Error::InvalidInterval { .. } | Error::NonPositiveWeight { .. } => "interval",
            Error::OutsideInterval { .. } | Error::InvalidIndex { .. } | Error::WeightMismatch => {
                "malformed-input"
            }
            Error::DegreeCap { .. } => "degree-cap",
            Error::NonFinite => "non-finite",
            Error::IndefiniteKernel { .. } => "indefinite-kernel",
            Error::PathMismatch { .. } => "path-mismatch",
        };
        match e {
            Error::IndefiniteKernel { .. } | Error::PathMismatch { .. } => {
                Failure::numerical(code, e.to_string())
            }
            _ => Failure::validation(code, e.to_string()),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.kind {
            FailureKind::Validation => 2,
            FailureKind::Numerical => 3,
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wrapper<'a> {
            error: &'a Failure,
        }
        serde_json::to_string(&Wrapper { error: self }).expect("error object serializes")
    }
}
