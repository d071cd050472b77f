//! Line-delimited JSON store of extremal records keyed by `(n, h_key)`.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::{validate_record, ExtremalRecord};

#[derive(Debug, Error)]
pub enum LedgerError {
    #[error("ledger i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("ledger line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("ledger disagrees for n = {n}, h = {h_key}: stored {stored}, computed {computed}")]
    Mismatch { n: usize, h_key: String, stored: usize, computed: usize },
    #[error("stored record for n = {n}, h = {h_key} does not validate: {reason}")]
    InvalidRecord { n: usize, h_key: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LedgerOutcome {
    Appended,
    Verified,
}

#[derive(Debug, Clone)]
pub struct Ledger {
    path: PathBuf,
}

impl Ledger {
    pub fn new(path: impl Into<PathBuf>) -> Ledger {
        Ledger { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All records; a missing file is an empty ledger.
    pub fn load(&self) -> Result<Vec<ExtremalRecord>, LedgerError> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec = serde_json::from_str(&line).map_err(|e| LedgerError::Parse { line: i + 1, msg: e.to_string() })?;
            out.push(rec);
        }
        Ok(out)
    }

    /// Compares `rec` with the stored record for its key, or appends it.
    pub fn record(&self, rec: &ExtremalRecord) -> Result<LedgerOutcome, LedgerError> {
        let stored = self.load()?.into_iter().find(|r| r.n == rec.n && r.h_key == rec.h_key);
        if let Some(old) = stored {
            if old.ex_value != rec.ex_value {
                return Err(LedgerError::Mismatch {
                    n: rec.n,
                    h_key: rec.h_key.clone(),
                    stored: old.ex_value,
                    computed: rec.ex_value,
                });
            }
            validate_record(&old).map_err(|reason| LedgerError::InvalidRecord {
                n: old.n,
                h_key: old.h_key.clone(),
                reason,
            })?;
            return Ok(LedgerOutcome::Verified);
        }
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let line = serde_json::to_string(rec).expect("records serialize");
        writeln!(file, "{line}")?;
        Ok(LedgerOutcome::Appended)
    }
}
