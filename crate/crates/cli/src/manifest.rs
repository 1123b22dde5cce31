use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};
use totalcolor::graph::to_graph6;
use totalcolor::solver::SearchBudget;
use totalcolor::Graph;

#[derive(Serialize)]
struct Budget {
    max_nodes: u64,
    max_seconds: f64,
}

/// The reproducible part of a run, hashed into `digest`.
#[derive(Serialize)]
struct Identity<'a> {
    command: &'a str,
    arguments: &'a [String],
    input_digest: &'a str,
    budget: &'a Budget,
    tool_version: &'a str,
}

#[derive(Serialize)]
pub struct RunManifest {
    pub command: String,
    pub arguments: Vec<String>,
    pub input_digest: String,
    budget: Budget,
    pub tool_version: String,
    pub started_unix_ms: u128,
    pub finished_unix_ms: u128,
    /// SHA-256 over every field except the timestamps.
    pub digest: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<String>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

fn now_ms() -> u128 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0)
}

/// Digest of the input graphs: their graph6 lines in order.
pub fn input_digest<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> String {
    let mut text = String::new();
    for g in graphs {
        text.push_str(&to_graph6(g).unwrap_or_default());
        text.push('\n');
    }
    sha256_hex(text.as_bytes())
}

impl RunManifest {
    pub fn start(command: &str, input_digest: String, budget: SearchBudget) -> Self {
        let arguments: Vec<String> = std::env::args().skip(1).collect();
        let budget = Budget {
            max_nodes: budget.max_nodes,
            max_seconds: budget.max_time.as_secs_f64(),
        };
        let tool_version = env!("CARGO_PKG_VERSION").to_string();
        let identity = Identity {
            command,
            arguments: &arguments,
            input_digest: &input_digest,
            budget: &budget,
            tool_version: &tool_version,
        };
        let digest = sha256_hex(&serde_json::to_vec(&identity).expect("plain data"));
        RunManifest {
            command: command.to_string(),
            arguments,
            input_digest,
            budget,
            tool_version,
            started_unix_ms: now_ms(),
            finished_unix_ms: 0,
            digest,
            outputs: Vec::new(),
        }
    }

    pub fn finish(&mut self) {
        self.finished_unix_ms = now_ms();
    }
}

/// A JSON body tagged with the digest of the run that produced it.
#[derive(Serialize)]
pub struct Tagged<'a, T: Serialize> {
    pub manifest_digest: &'a str,
    #[serde(flatten)]
    pub body: T,
}
