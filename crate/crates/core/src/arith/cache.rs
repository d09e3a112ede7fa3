//! JSON-lines cache of verified counts. One record per line, appended as
//! counts are produced; rewrites go through a temp file and a rename so a
//! crash never leaves a half-written cache.

use super::{CountRecord, Method, Partition};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

#[derive(Debug)]
pub struct CountCache {
    path: PathBuf,
    records: Vec<CountRecord>,
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache io error at {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("bad cache line {line} in {path}: {source}")]
    BadLine {
        path: PathBuf,
        line: usize,
        source: serde_json::Error,
    },
}

impl CountCache {
    /// Open a cache file, loading any existing records. A missing file is an
    /// empty cache; a malformed line is an error, not a silent skip.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self, CacheError> {
        let path = path.into();
        let mut records = Vec::new();
        match fs::read_to_string(&path) {
            Ok(contents) => {
                for (idx, line) in contents.lines().enumerate() {
                    if line.trim().is_empty() {
                        continue;
                    }
                    let record: CountRecord =
                        serde_json::from_str(line).map_err(|source| CacheError::BadLine {
                            path: path.clone(),
                            line: idx + 1,
                            source,
                        })?;
                    records.push(record);
                }
            }
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(source) => return Err(CacheError::Io { path, source }),
        }
        Ok(CountCache { path, records })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn records(&self) -> &[CountRecord] {
        &self.records
    }

    /// Find a stored count for this stratum, prime, and method. The engine
    /// version is informational and does not participate in lookup.
    pub fn lookup(&self, lambda: &Partition, q: u64, method: Method) -> Option<&CountRecord> {
        self.records
            .iter()
            .find(|r| r.lambda == *lambda && r.q == q && r.method == method)
    }

    /// Append a record (skipping exact key duplicates) and persist the whole
    /// cache atomically.
    pub fn insert(&mut self, record: CountRecord) -> Result<(), CacheError> {
        if self.lookup(&record.lambda, record.q, record.method).is_some() {
            return Ok(());
        }
        self.records.push(record);
        self.save()
    }

    fn save(&self) -> Result<(), CacheError> {
        let tmp = self.path.with_extension("jsonl.tmp");
        let io_err = |source| CacheError::Io {
            path: self.path.clone(),
            source,
        };
        {
            let mut file = fs::File::create(&tmp).map_err(io_err)?;
            for record in &self.records {
                let line = serde_json::to_string(record).expect("records serialize");
                writeln!(file, "{line}").map_err(io_err)?;
            }
            file.sync_all().map_err(io_err)?;
        }
        fs::rename(&tmp, &self.path).map_err(io_err)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{count_fast, ENGINE_VERSION};

    fn lambda(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn missing_file_is_empty() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CountCache::open(dir.path().join("counts.jsonl")).unwrap();
        assert!(cache.records().is_empty());
        assert!(cache.lookup(&lambda(&[1]), 2, Method::Fast).is_none());
    }

    #[test]
    fn round_trips_records() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.jsonl");
        let mut cache = CountCache::open(&path).unwrap();
        let fast = count_fast(&lambda(&[1, 1]), 3).unwrap();
        cache.insert(fast.clone()).unwrap();
        cache.insert(CountRecord {
            method: Method::Brute,
            ..fast.clone()
        })
        .unwrap();

        let reloaded = CountCache::open(&path).unwrap();
        assert_eq!(reloaded.records().len(), 2);
        let hit = reloaded.lookup(&lambda(&[1, 1]), 3, Method::Fast).unwrap();
        assert_eq!(hit.count, 9);
        assert_eq!(hit.engine_version, ENGINE_VERSION);
        assert!(reloaded.lookup(&lambda(&[1, 1]), 3, Method::Brute).is_some());
        assert!(reloaded.lookup(&lambda(&[1, 1]), 5, Method::Fast).is_none());

        // Same key again: no growth, still one line per record.
        let mut reloaded = reloaded;
        reloaded.insert(fast).unwrap();
        assert_eq!(reloaded.records().len(), 2);
        let contents = fs::read_to_string(&path).unwrap();
        assert_eq!(contents.lines().count(), 2);
        assert!(!path.with_extension("jsonl.tmp").exists());
    }

    #[test]
    fn rejects_malformed_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.jsonl");
        fs::write(&path, "{\"lambda\":[1],\"q\":2,\"count\":3,\"method\":\"fast\",\"engine_version\":\"x\"}\nnot json\n").unwrap();
        match CountCache::open(&path) {
            Err(CacheError::BadLine { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected BadLine, got {other:?}"),
        }
    }
}
