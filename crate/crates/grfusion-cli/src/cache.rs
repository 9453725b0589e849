//! On-disk coefficient cache: one JSON entry per line, keyed by a content
//! hash of the query and invalidated by a version tag. Append-friendly: a
//! miss recomputes and appends, hits return the stored canonical JSON, so
//! output is byte-identical with and without the cache.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use sha2::{Digest, Sha256};

/// Bumped whenever the serialized schema or any algorithm output changes.
pub const CACHE_VERSION: &str = "grfusion-cache-v1";

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CacheEntry {
    pub version: String,
    /// sha256 of the canonical query string.
    pub key: String,
    /// Human-readable query, also the hash preimage.
    pub query: String,
    /// Canonical JSON of the result, kept verbatim.
    pub value: Box<RawValue>,
}

pub struct Cache {
    path: PathBuf,
}

/// Canonical query string for a product: verb, box and both operands.
pub fn product_key(verb: &str, n: usize, k: usize, lhs: &str, rhs: &str) -> String {
    format!("{verb}|n={n}|k={k}|lhs={lhs}|rhs={rhs}")
}

fn hash(query: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(query.as_bytes());
    format!("{:x}", hasher.finalize())
}

impl Cache {
    pub fn open(path: &Path) -> Self {
        Cache {
            path: path.to_path_buf(),
        }
    }

    pub fn entries(&self) -> Result<Vec<CacheEntry>> {
        if !self.path.exists() {
            return Ok(Vec::new());
        }
        let text = std::fs::read_to_string(&self.path)
            .with_context(|| format!("reading cache {}", self.path.display()))?;
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let entry: CacheEntry = serde_json::from_str(line)
                .with_context(|| format!("cache {} line {}", self.path.display(), i + 1))?;
            out.push(entry);
        }
        Ok(out)
    }

    /// Looks a query up; entries with a stale version tag are ignored.
    pub fn lookup(&self, query: &str) -> Result<Option<String>> {
        let key = hash(query);
        for entry in self.entries()? {
            if entry.version == CACHE_VERSION && entry.key == key && entry.query == query {
                return Ok(Some(entry.value.get().to_string()));
            }
        }
        Ok(None)
    }

    pub fn store(&self, query: &str, value: &str) -> Result<()> {
        let entry = CacheEntry {
            version: CACHE_VERSION.to_string(),
            key: hash(query),
            query: query.to_string(),
            value: RawValue::from_string(value.to_string())?,
        };
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening cache {}", self.path.display()))?;
        writeln!(file, "{}", serde_json::to_string(&entry)?)?;
        Ok(())
    }
}
