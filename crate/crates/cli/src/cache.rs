//! Write-once cache of generator sets, one file per `n`.
//!
//! A file holds the format tag, `n`, the SHA-256 of the serialized
//! generators and the generators themselves. Files with another tag or a
//! checksum mismatch are ignored and overwritten by a fresh computation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use wq_core::wgen::WGenSet;

pub const FORMAT: &str = "wq-wgen/1";
pub const ENV_VAR: &str = "WQ_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    format: String,
    n: usize,
    sha256: String,
    gens: serde_json::Value,
}

fn digest(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// `--cache-dir` wins over `WQ_CACHE_DIR`; with neither, nothing is
    /// cached.
    pub fn resolve(flag: Option<PathBuf>) -> Self {
        let dir = flag.or_else(|| std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(PathBuf::from));
        Cache { dir }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path(&self, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("wgen-v1-n{n}.json")))
    }

    /// The cached set when the file is present, current and intact.
    pub fn load(&self, n: usize) -> Option<WGenSet> {
        let text = fs::read_to_string(self.path(n)?).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        if entry.format != FORMAT || entry.n != n {
            return None;
        }
        let body = serde_json::to_string(&entry.gens).ok()?;
        if digest(&body) != entry.sha256 {
            return None;
        }
        let gens: WGenSet = serde_json::from_value(entry.gens).ok()?;
        (gens.n() == n).then_some(gens)
    }

    /// Writes through a temporary file in the cache directory and renames
    /// it into place.
    pub fn store(&self, gens: &WGenSet) -> std::io::Result<()> {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path(gens.n())) else {
            return Ok(());
        };
        fs::create_dir_all(dir)?;
        let value = serde_json::to_value(gens).map_err(std::io::Error::other)?;
        let body = serde_json::to_string(&value).map_err(std::io::Error::other)?;
        let entry = Entry {
            format: FORMAT.to_string(),
            n: gens.n(),
            sha256: digest(&body),
            gens: value,
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        tmp.write_all(serde_json::to_string(&entry).map_err(std::io::Error::other)?.as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }

    /// Cached or freshly computed; fresh sets are stored best-effort.
    pub fn gens(&self, n: usize) -> WGenSet {
        if let Some(g) = self.load(n) {
            return g;
        }
        let g = WGenSet::new(n);
        let _ = self.store(&g);
        g
    }

    /// Whether the cached set (if any) equals a fresh computation.
    pub fn verify(&self, n: usize) -> Option<bool> {
        self.load(n).map(|cached| cached == WGenSet::new(n))
    }
}
