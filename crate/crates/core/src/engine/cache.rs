//! Persistent cache: one JSON file per (expression, p, N).

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::Result;

pub const CACHE_ENV: &str = "TVSAT_CACHE";

/// `$TVSAT_CACHE`, or `./.tvsat-cache`.
pub fn default_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".tvsat-cache"))
}

pub fn key(expr: &str, p: u32, n: u32) -> String {
    format!("{expr}|p={p}|N={n}")
}

pub fn file_for(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{}.json", hex::encode(Sha256::digest(key.as_bytes()))))
}

pub(crate) fn read(dir: &Path, key: &str) -> Option<String> {
    fs::read_to_string(file_for(dir, key)).ok()
}

/// Writes through a temporary file and a rename, so readers never see a partial file.
pub(crate) fn write(dir: &Path, key: &str, body: &str) -> Result<()> {
    fs::create_dir_all(dir)?;
    let target = file_for(dir, key);
    let tmp = target.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, body)?;
    fs::rename(&tmp, &target)?;
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct CacheStat {
    pub entries: usize,
    pub bytes: u64,
}

fn entries(dir: &Path) -> Result<Vec<PathBuf>> {
    if !dir.exists() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for e in fs::read_dir(dir)? {
        let path = e?.path();
        if path.extension().is_some_and(|x| x == "json") {
            out.push(path);
        }
    }
    Ok(out)
}

pub fn stat(dir: &Path) -> Result<CacheStat> {
    let mut s = CacheStat::default();
    for path in entries(dir)? {
        s.entries += 1;
        s.bytes += fs::metadata(path)?.len();
    }
    Ok(s)
}

/// Removes every cache entry; returns how many were removed.
pub fn clear(dir: &Path) -> Result<usize> {
    let all = entries(dir)?;
    for path in &all {
        fs::remove_file(path)?;
    }
    Ok(all.len())
}
