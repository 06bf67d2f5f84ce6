//! Append-only JSONL scan records with resume by `(kind, params)` key.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::GaussianRational;
use crate::bridge::bridge_probe_point;
use crate::error::{Error, Result};
use crate::expr::PolyExpr;
use crate::functional::in_fn;
use crate::inversion::rigidity_scan_point;
use crate::two_monomials::{rpc_scan_pair, ExponentPair};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    Rpc,
    Rigidity,
    Membership,
    Bridge,
}

/// Field order is the on-disk order.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ScanRecord {
    pub schema_version: u32,
    pub kind: RecordKind,
    pub params: Value,
    pub result: Value,
    pub timestamp: String,
}

impl ScanRecord {
    pub fn new(kind: RecordKind, params: Value, result: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            kind,
            params,
            result,
            timestamp: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
        }
    }

    pub fn key(&self) -> String {
        record_key(self.kind, &self.params)
    }
}

// serde_json maps keep keys sorted, so this is canonical
fn record_key(kind: RecordKind, params: &Value) -> String {
    format!("{kind:?}:{params}")
}

pub fn rpc_params(pair: &ExponentPair, n_max: usize) -> Value {
    json!({ "a": pair.a, "b": pair.b, "n_max": n_max })
}

pub fn rigidity_params(alpha: &[GaussianRational], n_max: u32) -> Value {
    json!({ "m": alpha.len(), "alpha": alpha, "n_max": n_max })
}

pub fn membership_params(poly: &str, n: u32) -> Value {
    json!({ "poly": poly, "n": n })
}

pub fn bridge_params(mu: &[GaussianRational], n: u32) -> Value {
    json!({ "mu": mu, "n": n })
}

fn field<T: serde::de::DeserializeOwned>(params: &Value, name: &str) -> Result<T> {
    let v = params
        .get(name)
        .ok_or_else(|| Error::InvalidArgument(format!("record params lack '{name}'")))?;
    serde_json::from_value(v.clone()).map_err(|e| Error::InvalidArgument(format!("record param '{name}': {e}")))
}

/// Recomputes a record's result from its kind and parameters alone.
pub fn rerun(kind: RecordKind, params: &Value) -> Result<Value> {
    let v = match kind {
        RecordKind::Rpc => {
            let pair = ExponentPair::new(field(params, "a")?, field(params, "b")?)?;
            serde_json::to_value(rpc_scan_pair(&pair, field(params, "n_max")?))
        }
        RecordKind::Rigidity => {
            let alpha: Vec<GaussianRational> = field(params, "alpha")?;
            serde_json::to_value(rigidity_scan_point(&alpha, field(params, "n_max")?)?)
        }
        RecordKind::Membership => {
            let src: String = field(params, "poly")?;
            let poly = src.parse::<PolyExpr>()?;
            serde_json::to_value(in_fn(poly.poly(), field(params, "n")?)?)
        }
        RecordKind::Bridge => {
            let mu: Vec<GaussianRational> = field(params, "mu")?;
            serde_json::to_value(bridge_probe_point(&mu, field(params, "n")?))
        }
    };
    Ok(v.expect("scan results serialize"))
}

pub fn read_records(path: &Path) -> io::Result<Vec<ScanRecord>> {
    let file = File::open(path)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(&line).map_err(|e| {
            io::Error::new(io::ErrorKind::InvalidData, format!("{}:{}: {e}", path.display(), i + 1))
        })?;
        out.push(rec);
    }
    Ok(out)
}

/// Single writer for one JSONL file. Keys already on disk are skipped.
pub struct JsonlStore {
    path: PathBuf,
    seen: HashMap<String, Value>,
    writer: BufWriter<File>,
    resumed: usize,
}

impl JsonlStore {
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let existing = match read_records(&path) {
            Ok(r) => r,
            Err(e) if e.kind() == io::ErrorKind::NotFound => Vec::new(),
            Err(e) => return Err(e),
        };
        let seen: HashMap<String, Value> = existing.into_iter().map(|r| (r.key(), r.result)).collect();
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Self { path, resumed: seen.len(), seen, writer: BufWriter::new(file) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Number of distinct keys found on disk when the store was opened.
    pub fn resumed(&self) -> usize {
        self.resumed
    }

    pub fn contains(&self, kind: RecordKind, params: &Value) -> bool {
        self.seen.contains_key(&record_key(kind, params))
    }

    /// The stored result for a key, from disk or from this session.
    pub fn recorded(&self, kind: RecordKind, params: &Value) -> Option<&Value> {
        self.seen.get(&record_key(kind, params))
    }

    /// Writes the record unless its key is already present. Returns whether it was written.
    pub fn append(&mut self, rec: &ScanRecord) -> io::Result<bool> {
        let key = rec.key();
        if self.seen.contains_key(&key) {
            return Ok(false);
        }
        self.seen.insert(key, rec.result.clone());
        serde_json::to_writer(&mut self.writer, rec)?;
        self.writer.write_all(b"\n")?;
        Ok(true)
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.writer.flush()
    }
}

impl Drop for JsonlStore {
    fn drop(&mut self) {
        let _ = self.writer.flush();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_order_and_timestamp() {
        let r = ScanRecord::new(RecordKind::Rpc, json!({"a": [1, 0]}), json!({}));
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"schema_version":1,"kind":"rpc","params":{"a":[1,0]},"result":{},"timestamp":""#), "{s}");
        assert!(r.timestamp.ends_with('Z'));
        assert!(chrono::DateTime::parse_from_rfc3339(&r.timestamp).is_ok());
    }

    #[test]
    fn resume_skips_known_keys() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("scan.jsonl");
        let pair = ExponentPair::new([1, 0], [0, 1]).unwrap();
        let params = rpc_params(&pair, 3);
        let result = rerun(RecordKind::Rpc, &params).unwrap();
        {
            let mut st = JsonlStore::open(&path).unwrap();
            assert!(st.append(&ScanRecord::new(RecordKind::Rpc, params.clone(), result.clone())).unwrap());
            assert!(!st.append(&ScanRecord::new(RecordKind::Rpc, params.clone(), result.clone())).unwrap());
        }
        let mut st = JsonlStore::open(&path).unwrap();
        assert_eq!(st.resumed(), 1);
        assert!(st.contains(RecordKind::Rpc, &params));
        assert!(!st.append(&ScanRecord::new(RecordKind::Rpc, params.clone(), result)).unwrap());
        drop(st);
        let recs = read_records(&path).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(rerun(recs[0].kind, &recs[0].params).unwrap(), recs[0].result);
    }
}
