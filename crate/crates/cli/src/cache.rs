//! On-disk cache of built tables in the exchange format. Each entry
//! `<key>.json` has a `<key>.json.sha256` sidecar; an entry whose content no
//! longer matches its digest is rebuilt. Writers hold `.lock`.

use std::fs::{self, OpenOptions};
use std::io::ErrorKind;
use std::path::{Path, PathBuf};
use std::thread::sleep;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use mckay_core::chartable::{export_table, import_table, CharacterTable};
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "MCKAY_CACHE";
const DEFAULT_DIR: &str = ".mckay-cache";
const LOCK_WAIT: Duration = Duration::from_secs(30);

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Debug, Clone)]
pub struct CacheEntry {
    pub key: String,
    pub path: PathBuf,
    pub digest: String,
}

pub struct Cache {
    dir: PathBuf,
}

/// How a lookup was served, reported on stderr.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Hit,
    Built,
    Rebuilt,
}

struct Lock(PathBuf);

impl Drop for Lock {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

impl Cache {
    pub fn from_env() -> Self {
        let dir = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR));
        Cache { dir }
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    fn sidecar(path: &Path) -> PathBuf {
        let mut s = path.as_os_str().to_owned();
        s.push(".sha256");
        PathBuf::from(s)
    }

    fn lock(&self) -> Result<Lock> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        let path = self.dir.join(".lock");
        let start = Instant::now();
        loop {
            match OpenOptions::new().write(true).create_new(true).open(&path) {
                Ok(_) => return Ok(Lock(path)),
                Err(e) if e.kind() == ErrorKind::AlreadyExists => {
                    if start.elapsed() > LOCK_WAIT {
                        bail!(
                            "cache lock {} held for over {}s; remove it if no other writer is running",
                            path.display(),
                            LOCK_WAIT.as_secs()
                        );
                    }
                    sleep(Duration::from_millis(50));
                }
                Err(e) => return Err(e).with_context(|| format!("locking {}", path.display())),
            }
        }
    }

    /// The stored entry if its digest checks out and it imports cleanly.
    fn read_valid(&self, key: &str) -> Option<CharacterTable> {
        let path = self.entry_path(key);
        let text = fs::read_to_string(&path).ok()?;
        let recorded = fs::read_to_string(Self::sidecar(&path)).ok()?;
        if recorded.trim() != digest(text.as_bytes()) {
            return None;
        }
        import_table(&text).ok()
    }

    pub fn store(&self, key: &str, t: &CharacterTable) -> Result<CacheEntry> {
        let _lock = self.lock()?;
        self.write_entry(key, t)
    }

    fn write_entry(&self, key: &str, t: &CharacterTable) -> Result<CacheEntry> {
        let path = self.entry_path(key);
        let text = export_table(t);
        let d = digest(text.as_bytes());
        fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
        fs::write(Self::sidecar(&path), format!("{d}\n"))?;
        Ok(CacheEntry {
            key: key.to_string(),
            path,
            digest: d,
        })
    }

    /// Cached table for `key`, building and storing it when absent or tampered.
    pub fn get_or_build(
        &self,
        key: &str,
        build: impl FnOnce() -> Result<CharacterTable>,
    ) -> Result<(CharacterTable, Origin)> {
        if let Some(t) = self.read_valid(key) {
            return Ok((t, Origin::Hit));
        }
        let _lock = self.lock()?;
        // another writer may have filled it while we waited
        if let Some(t) = self.read_valid(key) {
            return Ok((t, Origin::Hit));
        }
        let existed = self.entry_path(key).exists();
        let t = build()?;
        self.write_entry(key, &t)?;
        Ok((t, if existed { Origin::Rebuilt } else { Origin::Built }))
    }
}
