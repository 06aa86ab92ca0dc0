//! Machine-readable output and exit status.

use serde::Serialize;
use serde_json::Value;

use pgl_spectra::Error;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    VerificationFailed = 1,
    Usage = 2,
    Exhausted = 3,
}

impl Status {
    pub fn worst(self, other: Status) -> Status {
        self.max(other)
    }

    pub fn for_error(e: &Error) -> Status {
        match e {
            Error::CapExceeded { .. } | Error::FactorizationIncomplete { .. } => Status::Exhausted,
            _ => Status::Usage,
        }
    }
}

/// What one command produced: a payload for `--json`, the text rendering and
/// any warnings.
#[derive(Debug)]
pub struct Outcome {
    pub result: Value,
    pub text: String,
    pub diagnostics: Vec<String>,
    pub status: Status,
}

impl Outcome {
    pub fn new(result: impl Serialize, text: String) -> Outcome {
        Outcome {
            result: serde_json::to_value(result).expect("payload serializes"),
            text,
            diagnostics: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn warn(&mut self, msg: impl Into<String>, status: Status) {
        self.diagnostics.push(msg.into());
        self.status = self.status.worst(status);
    }

    pub fn fail_if(&mut self, failed: bool) {
        if failed {
            self.status = self.status.worst(Status::VerificationFailed);
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutputDocument<'a> {
    pub schema_version: &'a str,
    pub command: &'a str,
    pub inputs: &'a Value,
    pub result: &'a Value,
    pub diagnostics: &'a [String],
}

/// Pretty JSON with keys sorted at every level, newline terminated.
pub fn render(doc: &OutputDocument) -> String {
    // going through Value sorts object keys, so re-rendering a parsed
    // document reproduces it byte for byte
    let value = serde_json::to_value(doc).expect("document serializes");
    render_value(&value)
}

pub fn render_value(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}
