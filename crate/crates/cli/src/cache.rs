//! A JSON file of exact counts keyed by bound, height set, method and code
//! version. Entries from another code version are never consulted.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::Context;
use dp5_core::enumerator::Method;
use dp5_core::CODE_VERSION;
use serde::{Deserialize, Serialize};

#[derive(Debug, Default, Serialize, Deserialize)]
struct CacheFile {
    entries: BTreeMap<String, u64>,
}

#[derive(Debug)]
pub struct Cache {
    path: Option<PathBuf>,
    file: CacheFile,
    dirty: bool,
}

pub fn key(bound: u64, height_set: &str, method: Method) -> String {
    format!("{bound}|{height_set}|{method}|{CODE_VERSION}")
}

impl Cache {
    /// Opens the cache at `path` (a missing file is an empty cache), or a
    /// no-op cache for `None`.
    pub fn open(path: Option<&Path>) -> anyhow::Result<Self> {
        let file = match path {
            Some(p) if p.exists() => {
                let text = std::fs::read_to_string(p).with_context(|| format!("reading cache {}", p.display()))?;
                serde_json::from_str(&text).with_context(|| format!("parsing cache {}", p.display()))?
            }
            _ => CacheFile::default(),
        };
        Ok(Self { path: path.map(Path::to_path_buf), file, dirty: false })
    }

    pub fn get(&self, bound: u64, height_set: &str, method: Method) -> Option<u64> {
        self.path.as_ref()?;
        self.file.entries.get(&key(bound, height_set, method)).copied()
    }

    pub fn insert(&mut self, bound: u64, height_set: &str, method: Method, count: u64) {
        if self.path.is_some() {
            let old = self.file.entries.insert(key(bound, height_set, method), count);
            self.dirty |= old != Some(count);
        }
    }

    pub fn save(&self) -> anyhow::Result<()> {
        let Some(path) = &self.path else { return Ok(()) };
        if !self.dirty {
            return Ok(());
        }
        let text = serde_json::to_string_pretty(&self.file)?;
        std::fs::write(path, text + "\n").with_context(|| format!("writing cache {}", path.display()))
    }
}
