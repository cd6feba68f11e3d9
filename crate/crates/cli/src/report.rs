//! What a command hands back to `main`: an exit code and the two output streams.

use arbor_core::graph::{EdgeId, Partition};
use arbor_core::Error;
use serde_json::{json, Map, Value};

/// Process result: exit code, stdout and stderr text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Emission {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit codes.
pub const HOLDS: i32 = 0;
pub const USAGE: i32 = 1;
pub const FAILS: i32 = 2;
pub const TOO_LARGE: i32 = 3;

/// Errors that abort a command before any certificate exists.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Core(Error::TooLarge { .. }) => TOO_LARGE,
            _ => USAGE,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Usage(s) => s.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

/// A JSON document plus a one-line human summary.
#[derive(Clone, Debug)]
pub struct Report {
    pub code: i32,
    pub body: Map<String, Value>,
    pub summary: String,
}

impl Report {
    pub fn new(code: i32, summary: impl Into<String>) -> Self {
        Self {
            code,
            body: Map::new(),
            summary: summary.into(),
        }
    }

    /// Report whose first key is `result`.
    pub fn result(code: i32, result: &str, summary: impl Into<String>) -> Self {
        Self::new(code, summary).with("result", result)
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.body.insert(key.to_string(), value.into());
        self
    }
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.blocks())
}

pub fn sorted(mut ids: Vec<EdgeId>) -> Vec<EdgeId> {
    ids.sort_unstable();
    ids
}

pub fn pairs_json(pairs: &[(usize, usize)]) -> Value {
    Value::Array(pairs.iter().map(|&(u, v)| json!([u, v])).collect())
}
