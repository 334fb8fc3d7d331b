//! File-backed cache of computed Bessel zeros.
//!
//! Plain CSV with header `nu,k,value`, 17 significant digits, sorted by
//! `(nu, k)`, rewritten atomically via a temp file + rename.

use rotwave::{Error, Result};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Cache key ordered by (order bits as value, index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Key {
    nu_bits: u64,
    k: u32,
}

impl Key {
    fn new(nu: f64, k: u32) -> Key {
        Key {
            nu_bits: nu.to_bits(),
            k,
        }
    }
    fn nu(&self) -> f64 {
        f64::from_bits(self.nu_bits)
    }
}

/// In-memory view of the cache file.
pub struct ZeroCache {
    path: Option<PathBuf>,
    entries: BTreeMap<Key, f64>,
    dirty: bool,
}

impl ZeroCache {
    /// Cache rooted in `dir` (file `zeros.csv`), or a no-op cache without.
    pub fn open(dir: Option<&Path>) -> Result<ZeroCache> {
        let Some(dir) = dir else {
            return Ok(ZeroCache {
                path: None,
                entries: BTreeMap::new(),
                dirty: false,
            });
        };
        std::fs::create_dir_all(dir)
            .map_err(|e| Error::Config(format!("cache dir {dir:?}: {e}")))?;
        let path = dir.join("zeros.csv");
        let mut entries = BTreeMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Config(format!("cache read {path:?}: {e}")))?;
            for (i, line) in text.lines().enumerate() {
                if i == 0 && line.starts_with("nu,") {
                    continue;
                }
                if line.trim().is_empty() {
                    continue;
                }
                let mut parts = line.split(',');
                let parse = |s: Option<&str>| -> Result<f64> {
                    s.ok_or_else(|| Error::Config(format!("bad cache line {i}")))?
                        .trim()
                        .parse::<f64>()
                        .map_err(|e| Error::Config(format!("bad cache line {i}: {e}")))
                };
                let nu = parse(parts.next())?;
                let k = parse(parts.next())? as u32;
                let value = parse(parts.next())?;
                entries.insert(Key::new(nu, k), value);
            }
        }
        Ok(ZeroCache {
            path: Some(path),
            entries,
            dirty: false,
        })
    }

    pub fn get(&self, nu: f64, k: u32) -> Option<f64> {
        self.entries.get(&Key::new(nu, k)).copied()
    }

    pub fn insert(&mut self, nu: f64, k: u32, value: f64) {
        if self.entries.insert(Key::new(nu, k), value) != Some(value) {
            self.dirty = true;
        }
    }

    /// Rewrite the backing file (sorted, atomic) if anything changed.
    pub fn flush(&mut self) -> Result<()> {
        let (Some(path), true) = (self.path.as_ref(), self.dirty) else {
            return Ok(());
        };
        let mut rows: Vec<(f64, u32, f64)> = self
            .entries
            .iter()
            .map(|(key, &v)| (key.nu(), key.k, v))
            .collect();
        rows.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let mut text = String::from("nu,k,value\n");
        for (nu, k, v) in rows {
            text.push_str(&format!("{:.16e},{},{:.16e}\n", nu, k, v));
        }
        let tmp = path.with_extension("csv.tmp");
        std::fs::write(&tmp, text)
            .map_err(|e| Error::Config(format!("cache write {tmp:?}: {e}")))?;
        std::fs::rename(&tmp, path)
            .map_err(|e| Error::Config(format!("cache rename {path:?}: {e}")))?;
        self.dirty = false;
        Ok(())
    }
}
