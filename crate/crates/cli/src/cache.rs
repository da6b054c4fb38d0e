//! On-disk cache of KL and parabolic tables, one JSON file per `n`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use specht_core::{Composition, KlTable, LaurentPoly, ParabolicKlTable, SymmetricGroup, Tables};

pub const SCHEMA_VERSION: u32 = 1;

type Rows = Vec<Vec<(u32, LaurentPoly)>>;

#[derive(Serialize, Deserialize)]
pub struct CacheFile {
    pub schema_version: u32,
    pub n: usize,
    pub kl_rows: Rows,
    /// Keyed by the composition written as `a,b,c`.
    pub pkl_tables: BTreeMap<String, Rows>,
}

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache i/o failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("cache schema mismatch: {0}")]
    SchemaMismatch(String),
}

fn key(mu: &Composition) -> String {
    mu.parts().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

pub fn default_dir() -> PathBuf {
    std::env::var_os("SPECHT_CACHE").map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("specht-cache"))
}

pub fn file_for(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("tables-n{n}.json"))
}

pub fn to_cache_file(tables: &Tables) -> CacheFile {
    CacheFile {
        schema_version: SCHEMA_VERSION,
        n: tables.n(),
        kl_rows: tables.kl.rows().to_vec(),
        pkl_tables: tables.parabolic_tables().iter().map(|(mu, t)| (key(mu), t.rows().to_vec())).collect(),
    }
}

pub fn save(path: &Path, tables: &Tables) -> Result<(), CacheError> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let json = serde_json::to_string(&to_cache_file(tables)).expect("tables serialize");
    // write then rename so a concurrent reader never sees a partial file
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, json)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load(path: &Path, n: usize) -> Result<Tables, CacheError> {
    let bytes = fs::read(path)?;
    let mismatch = |msg: String| CacheError::SchemaMismatch(msg);
    let file: CacheFile = serde_json::from_slice(&bytes).map_err(|e| mismatch(e.to_string()))?;
    if file.schema_version != SCHEMA_VERSION {
        return Err(mismatch(format!("version {} != {SCHEMA_VERSION}", file.schema_version)));
    }
    if file.n != n {
        return Err(mismatch(format!("file is for n = {}, wanted {n}", file.n)));
    }
    let group = Arc::new(SymmetricGroup::new(n).map_err(|e| mismatch(e.to_string()))?);
    let kl = KlTable::from_rows(group, file.kl_rows).map_err(|e| mismatch(e.to_string()))?;
    let tables = Tables::from_kl(kl);
    for (k, rows) in file.pkl_tables {
        let mu: Composition = k.parse().map_err(|e: specht_core::Error| mismatch(e.to_string()))?;
        let t = ParabolicKlTable::from_rows(&mu, rows).map_err(|e| mismatch(e.to_string()))?;
        tables.insert_parabolic(t).map_err(|e| mismatch(e.to_string()))?;
    }
    Ok(tables)
}

/// Loads the tables for `n` from `dir`, rebuilding and rewriting the file when it
/// is missing or unusable.
pub fn load_or_build(dir: Option<&Path>, n: usize) -> specht_core::Result<Tables> {
    let Some(dir) = dir else {
        return Tables::build(n);
    };
    let path = file_for(dir, n);
    match load(&path, n) {
        Ok(t) => return Ok(t),
        Err(CacheError::Io(e)) if e.kind() == std::io::ErrorKind::NotFound => {}
        Err(e) => eprintln!("warning: ignoring cache {}: {e}", path.display()),
    }
    let tables = Tables::build(n)?;
    for mu in Composition::all(n) {
        tables.parabolic(&mu)?;
    }
    if let Err(e) = save(&path, &tables) {
        eprintln!("warning: could not write cache {}: {e}", path.display());
    }
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canonical(t: &Tables) -> String {
        serde_json::to_string(&to_cache_file(t)).unwrap()
    }

    #[test]
    fn roundtrip_is_bitwise_identical() {
        let dir = tempfile::tempdir().unwrap();
        let path = file_for(dir.path(), 4);
        let built = load_or_build(Some(dir.path()), 4).unwrap();
        let loaded = load(&path, 4).unwrap();
        assert_eq!(canonical(&built), canonical(&loaded));
        assert_eq!(canonical(&loaded), std::fs::read_to_string(&path).unwrap());
    }

    #[test]
    fn mismatches_are_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = file_for(dir.path(), 3);
        std::fs::write(&path, "{not json").unwrap();
        assert!(matches!(load(&path, 3), Err(CacheError::SchemaMismatch(_))));
        let t = Tables::build(3).unwrap();
        let mut file = to_cache_file(&t);
        file.schema_version = SCHEMA_VERSION + 1;
        std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        assert!(matches!(load(&path, 3), Err(CacheError::SchemaMismatch(_))));
        save(&path, &t).unwrap();
        assert!(matches!(load(&path, 4), Err(CacheError::SchemaMismatch(_))));
        // a tampered table fails validation
        let mut file = to_cache_file(&t);
        file.kl_rows[3].clear();
        std::fs::write(&path, serde_json::to_string(&file).unwrap()).unwrap();
        assert!(matches!(load(&path, 3), Err(CacheError::SchemaMismatch(_))));
        // and is replaced by a fresh build
        let rebuilt = load_or_build(Some(dir.path()), 3).unwrap();
        assert_eq!(rebuilt.kl.rows(), t.kl.rows());
        assert!(load(&path, 3).is_ok());
    }
}
