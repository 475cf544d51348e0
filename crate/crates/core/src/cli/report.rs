//! Report envelopes and atomic persistence.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

/// Everything a run wrote. `payload` depends only on the configuration;
/// wall-clock data lives in `timing`.
#[derive(Debug, Clone, Serialize)]
pub struct Envelope {
    pub subcommand: &'static str,
    pub seed: u64,
    pub config: Value,
    pub payload: Value,
    pub pass: bool,
    pub timing: Timing,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub generated_at_unix_ms: u128,
    pub elapsed_ms: u128,
    /// Per-item wall time where the subcommand has items (trials).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub item_elapsed_ms: Vec<u128>,
}

impl Timing {
    pub fn new(elapsed_ms: u128, item_elapsed_ms: Vec<u128>) -> Self {
        Timing { generated_at_unix_ms: now_ms(), elapsed_ms, item_elapsed_ms }
    }
}

fn now_ms() -> u128 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis()).unwrap_or(0)
}

/// Writes `contents` to `path` through a temporary sibling and a rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> io::Result<()> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("report");
    let tmp = dir.join(format!(".{name}.tmp-{}", std::process::id()));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)
}

/// Persists the envelope as `<subcommand>-<seed>-<timestamp>.json` in `dir`
/// and points `<subcommand>-latest` at it. Returns the report path.
pub fn persist(dir: &Path, envelope: &Envelope) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let stamp = envelope.timing.generated_at_unix_ms;
    let mut path = dir.join(format!("{}-{}-{stamp}.json", envelope.subcommand, envelope.seed));
    let mut bump = 1;
    while path.exists() {
        path = dir.join(format!("{}-{}-{stamp}-{bump}.json", envelope.subcommand, envelope.seed));
        bump += 1;
    }
    let body = serde_json::to_vec_pretty(envelope).map_err(io::Error::other)?;
    write_atomic(&path, &body)?;
    let file_name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
    write_atomic(&dir.join(format!("{}-latest", envelope.subcommand)), format!("{file_name}\n").as_bytes())?;
    Ok(path)
}

/// A fixed-width two-column table.
#[derive(Debug, Default)]
pub struct Table {
    rows: Vec<(String, String)>,
}

impl Table {
    pub fn row(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    pub fn render(&self) -> String {
        let width = self.rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        self.rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn persist_writes_report_and_pointer() {
        let dir = tempfile::tempdir().unwrap();
        let env = Envelope {
            subcommand: "demo",
            seed: 4,
            config: Value::Null,
            payload: serde_json::json!({"x": 1}),
            pass: true,
            timing: Timing::new(0, vec![]),
        };
        let a = persist(dir.path(), &env).unwrap();
        let b = persist(dir.path(), &env).unwrap();
        assert_ne!(a, b);
        let latest = fs::read_to_string(dir.path().join("demo-latest")).unwrap();
        assert_eq!(latest.trim(), b.file_name().unwrap().to_str().unwrap());
        let back: Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
        assert_eq!(back["payload"]["x"], 1);
        assert!(fs::read_dir(dir.path()).unwrap().all(|e| !e.unwrap().file_name().to_string_lossy().contains(".tmp")));
    }

    #[test]
    fn table_aligns_values() {
        let mut t = Table::default();
        t.row("a", 1).row("longer", "x");
        assert_eq!(t.render(), "a       1\nlonger  x\n");
    }
}
