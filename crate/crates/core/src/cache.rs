//! On-disk JSON cache of computed tables, keyed by kind, `n` and method.
//!
//! A file that cannot be parsed is treated as corrupt, which is a
//! verification failure rather than bad user input.

use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::table::{IntegerTable, TableKind};

#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(TableCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// `<dir>/<kind>-n<n>[-<method>].json`
    pub fn path_for(&self, kind: TableKind, n: usize, method: Option<&str>) -> PathBuf {
        let name = match method {
            Some(m) => format!("{kind}-n{n}-{m}.json"),
            None => format!("{kind}-n{n}.json"),
        };
        self.dir.join(name)
    }

    pub fn load(&self, kind: TableKind, n: usize, method: Option<&str>) -> Result<Option<IntegerTable>> {
        let path = self.path_for(kind, n, method);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let table = IntegerTable::from_json(&text)
            .map_err(|e| Error::verification(format!("corrupt cache file {}: {e}", path.display())))?;
        if table.kind() != kind || table.n() != n {
            return Err(Error::verification(format!(
                "cache file {} holds a {} table for n = {}",
                path.display(),
                table.kind(),
                table.n()
            )));
        }
        Ok(Some(table))
    }

    pub fn store(&self, table: &IntegerTable, method: Option<&str>) -> Result<PathBuf> {
        let path = self.path_for(table.kind(), table.n(), method);
        fs::write(&path, table.to_json())?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::frobenius_table;
    use crate::partitions::SymmetricGroupContext;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TableCache::new(dir.path()).unwrap();
        assert!(cache.load(TableKind::Frobenius, 3, None).unwrap().is_none());
        let t = frobenius_table(&SymmetricGroupContext::new(3).unwrap()).unwrap();
        let path = cache.store(&t, None).unwrap();
        assert_eq!(cache.load(TableKind::Frobenius, 3, None).unwrap(), Some(t));
        fs::write(&path, "{ not json").unwrap();
        assert!(matches!(cache.load(TableKind::Frobenius, 3, None), Err(Error::Verification(_))));
    }
}
