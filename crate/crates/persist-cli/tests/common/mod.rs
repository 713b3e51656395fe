//! Helpers shared by the binary integration tests.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use persist_core::TimeSeries;

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_persist"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Minimal self-cleaning temp directory.
pub struct TempDir(PathBuf);

impl TempDir {
    pub fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!(
            "persist-{tag}-{}-{:?}",
            std::process::id(),
            std::thread::current().id()
        ));
        std::fs::create_dir_all(&dir).unwrap();
        Self(dir)
    }

    pub fn path(&self) -> &Path {
        &self.0
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

/// Writes series as UCR-style TSV with full float precision.
pub fn write_ucr(path: &Path, dataset: &[TimeSeries]) {
    let mut text = String::new();
    for ts in dataset {
        text.push_str(ts.label.as_deref().unwrap_or("0"));
        for v in &ts.values {
            text.push('\t');
            text.push_str(&format!("{v:.16e}"));
        }
        text.push('\n');
    }
    std::fs::write(path, text).unwrap();
}
