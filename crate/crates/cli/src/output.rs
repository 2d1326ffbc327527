//! JSON shaping, exit codes and run manifests.

use std::path::Path;
use std::time::Duration;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_UNKNOWN: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_INTERNAL: u8 = 70;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::Unknown => "UNKNOWN",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Yes => EXIT_YES,
            Verdict::No => EXIT_NO,
            Verdict::Unknown => EXIT_UNKNOWN,
        }
    }
}

pub struct Report {
    pub verdict: Verdict,
    pub body: Value,
    pub summary: String,
}

impl Report {
    pub fn new(verdict: Verdict, body: Value, summary: impl Into<String>) -> Self {
        Report { verdict, body, summary: summary.into() }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<tilekit::Error> for CliError {
    fn from(e: tilekit::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// The emitted document: `command`, `verdict`, the body's fields and the
/// normalized arguments. Integers become decimal strings.
pub fn document(command: &str, argv: &[String], report: &Report) -> Value {
    let mut obj = Map::new();
    obj.insert("command".into(), json!(command));
    obj.insert("verdict".into(), json!(report.verdict.as_str()));
    if let Value::Object(body) = &report.body {
        for (k, v) in body {
            if k != "verdict" {
                obj.insert(k.clone(), v.clone());
            }
        }
    }
    obj.insert("argv".into(), json!(argv));
    stringify_integers(Value::Object(obj))
}

pub fn stringify_integers(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Value::String(n.to_string()),
        Value::Array(a) => Value::Array(a.into_iter().map(stringify_integers).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, stringify_integers(v))).collect()),
        other => other,
    }
}

pub fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub struct ManifestInfo<'a> {
    pub command: &'a str,
    pub argv: &'a [String],
    pub threads: usize,
    pub max_states: Option<u64>,
    pub wall_time: Duration,
    pub output: &'a str,
}

pub fn write_manifest(path: &Path, info: &ManifestInfo<'_>) -> CliResult<()> {
    let manifest = json!({
        "command": info.command,
        "parameters": info.argv,
        "library_version": env!("CARGO_PKG_VERSION"),
        "resource_caps": { "threads": info.threads, "max_states": info.max_states },
        "wall_time_ms": info.wall_time.as_millis() as u64,
        "result_digest": format!("sha256:{}", digest(info.output)),
    });
    std::fs::write(path, render(&stringify_integers(manifest)))
        .map_err(|e| CliError::Usage(format!("cannot write manifest {}: {e}", path.display())))
}
