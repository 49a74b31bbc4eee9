//! Group-data caching: load a serialized group when a valid cache file
//! exists, otherwise enumerate and write one. Stale or corrupt files are
//! regenerated, never trusted.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use reflekt_core::group::CacheFile;
use reflekt_core::{Budget, Error, GroupData, GroupKey};

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// The flag wins over the environment variable; without either, caching
    /// is off and every group is enumerated in memory.
    pub fn resolve(flag: Option<PathBuf>) -> Cache {
        let dir = flag.or_else(|| std::env::var_os("REFLEKT_CACHE").map(PathBuf::from));
        Cache { dir }
    }

    fn file_for(&self, key: GroupKey) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("g{}-{}-{}.json", key.r, key.p, key.n)))
    }

    /// Loads the group from cache when possible, else enumerates it. A budget
    /// overrun propagates as the core size error so callers can skip; any
    /// other load problem falls back to enumeration and a rewritten file.
    pub fn group(&self, key: GroupKey, budget: &Budget) -> Result<GroupData, Error> {
        let Some(path) = self.file_for(key) else {
            return GroupData::enumerate(key, budget);
        };
        match load(&path, key, budget) {
            Ok(group) => return Ok(group),
            Err(LoadFailure::Size(e)) => return Err(e),
            Err(LoadFailure::Absent) => {}
            Err(LoadFailure::Invalid(reason)) => {
                eprintln!("note: regenerating cache {}: {reason}", path.display());
            }
        }
        let group = GroupData::enumerate(key, budget)?;
        if let Err(e) = store(&path, &group) {
            eprintln!("warning: could not write cache {}: {e:#}", path.display());
        }
        Ok(group)
    }
}

enum LoadFailure {
    Absent,
    Invalid(String),
    Size(Error),
}

fn load(path: &Path, key: GroupKey, budget: &Budget) -> Result<GroupData, LoadFailure> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(LoadFailure::Absent),
        Err(e) => return Err(LoadFailure::Invalid(e.to_string())),
    };
    let cache: CacheFile =
        serde_json::from_slice(&bytes).map_err(|e| LoadFailure::Invalid(e.to_string()))?;
    if cache.key != key {
        return Err(LoadFailure::Invalid(format!(
            "file holds {:?}, expected {:?}",
            cache.key, key
        )));
    }
    match GroupData::from_cache(&cache, budget) {
        Ok(group) => Ok(group),
        Err(e @ Error::SizeExceeded { .. }) => Err(LoadFailure::Size(e)),
        Err(e) => Err(LoadFailure::Invalid(e.to_string())),
    }
}

fn store(path: &Path, group: &GroupData) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)
            .with_context(|| format!("creating cache directory {}", parent.display()))?;
    }
    let json = serde_json::to_string(&group.to_cache())
        .context("serializing group data")?;
    fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}
