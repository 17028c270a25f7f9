//! On-disk coefficient cache: one JSON Lines file per space.
//!
//! The cache is advisory. Records that fail to parse or no longer describe a
//! valid query for the space are ignored on load.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use num_bigint::BigInt;
use pierik_core::{Engine, Partition, Space};

use crate::error::CliError;
use crate::record::CoefficientRecord;

type Key = (Partition, i64, Partition, Engine);

pub struct Cache {
    space: Space,
    path: PathBuf,
    entries: BTreeMap<Key, BigInt>,
    fresh: Mutex<Vec<CoefficientRecord>>,
}

impl Cache {
    pub fn open(dir: &Path, space: Space) -> Result<Self, CliError> {
        fs::create_dir_all(dir).map_err(|e| CliError::Cache(format!("{}: {e}", dir.display())))?;
        let path = dir.join(format!("{}.jsonl", space.to_string().replace(':', "_")));
        let mut entries = BTreeMap::new();
        if path.exists() {
            let text = fs::read_to_string(&path).map_err(|e| CliError::Cache(format!("{}: {e}", path.display())))?;
            for line in text.lines() {
                let Ok(rec) = serde_json::from_str::<CoefficientRecord>(line) else {
                    continue;
                };
                if usable(&rec, space) {
                    entries.insert((rec.lambda, rec.p, rec.nu, rec.engine), rec.coefficient);
                }
            }
        }
        Ok(Self {
            space,
            path,
            entries,
            fresh: Mutex::new(Vec::new()),
        })
    }

    pub fn get(&self, lambda: &Partition, p: i64, nu: &Partition, engine: Engine) -> Option<CoefficientRecord> {
        let key = (lambda.clone(), p, nu.clone(), engine);
        self.entries.get(&key).map(|c| CoefficientRecord {
            space: self.space,
            lambda: key.0,
            p,
            nu: key.2,
            coefficient: c.clone(),
            engine,
            elapsed_ms: None,
        })
    }

    pub fn remember(&self, rec: &CoefficientRecord) {
        let mut rec = rec.clone();
        rec.elapsed_ms = None;
        self.fresh.lock().expect("cache lock").push(rec);
    }

    /// Appends records computed during this run.
    pub fn flush(&self) -> Result<(), CliError> {
        let mut fresh = std::mem::take(&mut *self.fresh.lock().expect("cache lock"));
        if fresh.is_empty() {
            return Ok(());
        }
        fresh.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()).then(a.p.cmp(&b.p)));
        fresh.dedup();
        let mut text = String::new();
        for rec in &fresh {
            text.push_str(&rec.to_json());
            text.push('\n');
        }
        let err = |e: std::io::Error| CliError::Cache(format!("{}: {e}", self.path.display()));
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(err)?;
        file.write_all(text.as_bytes()).map_err(err)
    }
}

fn usable(rec: &CoefficientRecord, space: Space) -> bool {
    rec.space == space
        && space.fits(&rec.lambda)
        && space.fits(&rec.nu)
        && rec.nu.contains(&rec.lambda)
        && (0..=i64::from(space.max_special())).contains(&rec.p)
        && rec.engine.applies_to(space)
}
