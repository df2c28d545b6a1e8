use std::fs;
use std::io::{self, Write};

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::config::{Destination, Format, RunConfig};

/// One named check with its outcome; failures carry a counterexample.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Self { name: name.into(), passed, counterexample: None }
    }

    pub fn with_counterexample(mut self, x: impl Serialize) -> Self {
        if !self.passed {
            self.counterexample = Some(serde_json::to_value(x).expect("counterexample serializes"));
        }
        self
    }
}

/// Result of one command: conventions header, payload, checks and a CSV view.
#[derive(Debug, Clone)]
pub struct Artifact {
    pub conventions: Map<String, Value>,
    pub payload: Value,
    pub checks: Vec<Check>,
    /// Header line and rows for `--format csv`.
    pub csv: Vec<String>,
    /// Human-readable lines for `--format pretty`.
    pub pretty: Vec<String>,
}

impl Artifact {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, cfg: &RunConfig) -> String {
        match cfg.format {
            Format::Json => {
                let doc = json!({
                    "command": cfg.command,
                    "conventions": self.conventions,
                    "passed": self.passed(),
                    "checks": self.checks,
                    "data": self.payload,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("artifact serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut out = String::new();
                for (k, v) in &self.conventions {
                    out.push_str(&format!("# {k}: {}\n", plain(v)));
                }
                for line in &self.csv {
                    out.push_str(line);
                    out.push('\n');
                }
                out
            }
            Format::Pretty => {
                let mut out = String::new();
                for (k, v) in &self.conventions {
                    out.push_str(&format!("{k:>16}  {}\n", plain(v)));
                }
                out.push('\n');
                for line in &self.pretty {
                    out.push_str(line);
                    out.push('\n');
                }
                out
            }
        }
    }

    pub fn summary(&self, cfg: &RunConfig) -> Vec<String> {
        let mut lines: Vec<String> = self
            .checks
            .iter()
            .map(|c| format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name))
            .collect();
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        lines.push(format!(
            "{} {} level {}: {} checks, {} failed",
            cfg.command,
            cfg.type_label(),
            cfg.level,
            self.checks.len(),
            failed
        ));
        if let Destination::File(p) = &cfg.destination {
            lines.push(format!("wrote {}", p.display()));
        }
        lines
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Writes the artifact; the summary goes to standard error when the
/// artifact itself occupies standard output.
pub fn emit(cfg: &RunConfig, art: &Artifact) -> io::Result<()> {
    let body = art.render(cfg);
    let summary = art.summary(cfg).join("\n");
    match &cfg.destination {
        Destination::Stdout => {
            io::stdout().write_all(body.as_bytes())?;
            eprintln!("{summary}");
        }
        Destination::File(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            fs::write(p, body)?;
            println!("{summary}");
        }
    }
    Ok(())
}
