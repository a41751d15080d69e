//! On-disk memo of action matrices, one file per λ named by the SHA-256 of λ.

use crate::error::CliError;
use gt_core::Weight;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub const CACHE_ENV: &str = "GTREP_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub from: String,
    pub to: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    pub i: usize,
    pub j: usize,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub lambda: Weight,
    pub matrices: Vec<Matrix>,
}

pub fn key(lambda: &Weight) -> String {
    let mut h = Sha256::new();
    h.update(format!("gtrep-action-v1:{lambda}").as_bytes());
    hex::encode(h.finalize())
}

pub fn path(dir: &Path, lambda: &Weight) -> PathBuf {
    dir.join(format!("{}.json", key(lambda)))
}

/// A readable file whose λ matches; anything else counts as a miss.
pub fn load(dir: &Path, lambda: &Weight) -> Option<CacheFile> {
    let text = std::fs::read_to_string(path(dir, lambda)).ok()?;
    let f: CacheFile = serde_json::from_str(&text).ok()?;
    let n = lambda.len();
    (f.lambda == *lambda && f.matrices.len() == n * n).then_some(f)
}

pub fn store(dir: &Path, f: &CacheFile) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("cache {}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let target = path(dir, &f.lambda);
    let tmp = target.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, serde_json::to_string(f).expect("serialisable")).map_err(io)?;
    std::fs::rename(&tmp, &target).map_err(io)
}
