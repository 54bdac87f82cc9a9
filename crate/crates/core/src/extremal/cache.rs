//! Append-only JSON-lines store of certificates.
//!
//! A hit is reused only after its witness is checked free again, and its exhaustion is
//! trusted only when it was produced by the same engine version.

use super::{Certificate, ExtremalProblem, Status};
use crate::error::{Error, Result};
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

/// Environment variable that overrides the cache directory.
pub const CACHE_DIR_ENV: &str = "DOWLING_CACHE_DIR";
const FILE_NAME: &str = "certificates.jsonl";

#[derive(Clone, Debug)]
pub struct Cache {
    path: PathBuf,
}

fn io(e: std::io::Error) -> Error {
    Error::Cache(e.to_string())
}

impl Cache {
    /// Opens (creating if needed) the cache in `dir`.
    pub fn open(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).map_err(io)?;
        Ok(Cache { path: dir.join(FILE_NAME) })
    }

    /// The directory named by [`CACHE_DIR_ENV`], else `fallback`.
    pub fn from_env_or(fallback: Option<&Path>) -> Result<Option<Self>> {
        match std::env::var_os(CACHE_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::open(Path::new(&dir)).map(Some),
            _ => fallback.map(Self::open).transpose(),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn store(&self, cert: &Certificate) -> Result<()> {
        let line = serde_json::to_string(cert).map_err(|e| Error::Cache(e.to_string()))?;
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path).map_err(io)?;
        writeln!(f, "{line}").map_err(io)
    }

    /// All stored certificates, skipping lines that do not parse.
    pub fn entries(&self) -> Result<Vec<Certificate>> {
        let f = match fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(io(e)),
        };
        let mut out = Vec::new();
        for line in BufReader::new(f).lines() {
            if let Ok(c) = serde_json::from_str::<Certificate>(&line.map_err(io)?) {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// The latest certified entry for `p` from this engine version whose witness is still free.
    pub fn lookup(&self, p: &ExtremalProblem) -> Result<Option<Certificate>> {
        let key = p.key();
        for c in self.entries()?.into_iter().rev() {
            if c.problem != key || c.status != Status::Certified || c.engine_version != crate::ENGINE_VERSION {
                continue;
            }
            if c.witness_ids.len() != c.value {
                continue;
            }
            if super::find_forbidden(&c.host, &c.forbidden, c.witness_set())?.is_none() {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::MatroidDescriptor;
    use crate::extremal::{ex_exhaustive, SearchOptions};

    #[test]
    fn store_and_lookup() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let p = ExtremalProblem::new(
            MatroidDescriptor::Dowling { n: 3, group: "Z2".into() },
            MatroidDescriptor::Clique { vertices: 3 },
        );
        assert!(cache.lookup(&p).unwrap().is_none());
        let c = ex_exhaustive(&p, &SearchOptions::default()).unwrap();
        cache.store(&c).unwrap();
        assert_eq!(cache.lookup(&p).unwrap(), Some(c));
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let p = ExtremalProblem::new(
            MatroidDescriptor::Dowling { n: 3, group: "Z2".into() },
            MatroidDescriptor::Clique { vertices: 3 },
        );
        let mut c = ex_exhaustive(&p, &SearchOptions::default()).unwrap();
        // the pair line 12 with both joints holds a triangle
        c.witness_ids = vec![0, 1, 6, 7];
        cache.store(&c).unwrap();
        fs::write(dir.path().join("other.txt"), "x").unwrap();
        assert!(cache.lookup(&p).unwrap().is_none());
    }
}
