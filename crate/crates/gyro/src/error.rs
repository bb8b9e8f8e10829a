use std::fmt;

use gyro_core::GyroError;
use serde_json::json;

/// Exit status for a run that verified everything it checked.
pub const EXIT_PASS: i32 = 0;
/// Some check failed.
pub const EXIT_FAIL: i32 = 1;
/// Bad arguments or configuration.
pub const EXIT_USAGE: i32 = 2;
/// A file could not be read, written or parsed.
pub const EXIT_IO: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io { path: String, message: String },
    Parse { path: String, message: String },
    Gyro(GyroError),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Gyro(e) => match e {
                GyroError::Domain { .. } => "domain",
                GyroError::Sampling(_) => "sampling",
                GyroError::Shape(_) => "shape",
                GyroError::Axiom { .. } => "axiom",
                GyroError::Precondition(_) => "precondition",
                GyroError::Chain { .. } => "chain",
                GyroError::ResourceLimit(_) => "resource_limit",
                GyroError::Tolerance(_) => "tolerance",
            },
        }
    }

    /// An input that is not a gyrogroup, or a chain that breaks its own
    /// condition, is a verification failure; a malformed file is an IO error;
    /// everything else is a configuration error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } | CliError::Parse { .. } => EXIT_IO,
            CliError::Gyro(GyroError::Shape(_)) => EXIT_IO,
            CliError::Gyro(GyroError::Axiom { .. } | GyroError::Chain { .. }) => EXIT_FAIL,
            CliError::Gyro(_) => EXIT_USAGE,
        }
    }

    /// The single-line JSON written to stderr.
    pub fn to_json(&self) -> serde_json::Value {
        let mut body = json!({
            "kind": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        });
        match self {
            CliError::Io { path, .. } | CliError::Parse { path, .. } => {
                body["path"] = json!(path);
            }
            CliError::Gyro(GyroError::Axiom { axiom, witness }) => {
                body["axiom"] = json!(axiom);
                body["witness"] = json!(witness);
            }
            CliError::Gyro(GyroError::Chain { level, .. }) => {
                body["level"] = json!(level);
            }
            _ => {}
        }
        json!({ "error": body })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io { path, message } => write!(f, "{path}: {message}"),
            CliError::Parse { path, message } => write!(f, "{path}: {message}"),
            CliError::Gyro(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<GyroError> for CliError {
    fn from(e: GyroError) -> Self {
        CliError::Gyro(e)
    }
}
