//! On-disk memo of the symbolic coefficient table, one JSON file per type.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::rootsys::RootSystem;

use super::{CoeffAlgebra, LkModel, Z0Coeffs};

#[derive(Serialize, Deserialize)]
struct CacheFile {
    #[serde(rename = "type")]
    ty: String,
    table: Vec<Vec<serde_json::Value>>,
}

pub fn cache_path(dir: &Path, rs: &RootSystem) -> PathBuf {
    dir.join(format!("tcoeff-{}.json", rs.ty()))
}

fn load(path: &Path, alg: &Z0Coeffs) -> Result<Vec<Vec<HeckeElement>>> {
    let file: CacheFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    let rs = alg.root_system();
    if file.ty != rs.ty().to_string() || file.table.len() != rs.rank() {
        return Err(Error::Dimension(format!("cache file {} does not match {}", path.display(), rs.ty())));
    }
    file.table
        .iter()
        .map(|row| {
            if row.len() != rs.num_positive() {
                return Err(Error::Dimension(format!("cache file {} has a short row", path.display())));
            }
            row.iter().map(|v| alg.z0().element_from_json(v)).collect()
        })
        .collect()
}

fn save(path: &Path, lk: &LkModel<Z0Coeffs>) -> Result<()> {
    let table = lk
        .t_table()
        .iter()
        .map(|row| row.iter().map(serde_json::to_value).collect::<std::result::Result<Vec<_>, _>>())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let body = serde_json::to_string(&CacheFile { ty: lk.root_system().ty().to_string(), table })?;
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    // write then rename, so readers never see a partial file
    let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
    fs::write(&tmp, body)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Builds the symbolic model, reusing a cached coefficient table from `dir`
/// when present and storing a fresh one otherwise.
pub fn build_z0_cached(rs: Arc<RootSystem>, dir: Option<&Path>) -> Result<LkModel<Z0Coeffs>> {
    let alg = Z0Coeffs::new(rs.clone());
    let Some(dir) = dir else {
        return LkModel::build(alg);
    };
    let path = cache_path(dir, &rs);
    if path.exists() {
        let table = load(&path, &alg)?;
        return LkModel::from_table(alg, table);
    }
    let lk = LkModel::build(alg)?;
    save(&path, &lk)?;
    Ok(lk)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cached_table_round_trips() {
        let dir = std::env::temp_dir().join(format!("bmw-cache-test-{}", std::process::id()));
        let rs = Arc::new(RootSystem::from_name("D4").unwrap());
        let a = build_z0_cached(rs.clone(), Some(&dir)).unwrap();
        assert!(cache_path(&dir, &rs).exists());
        let b = build_z0_cached(rs, Some(&dir)).unwrap();
        assert!(a.t_table() == b.t_table());
        fs::remove_dir_all(&dir).unwrap();
    }
}
