//! On-disk term cache: `<root>/<name>-<hash>.bfile`, where the hash is taken
//! over the definition's canonical text.

use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::{bfile, extend_by_recurrence, generate, SequenceDef, TermStore};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct TermCache {
    root: PathBuf,
}

impl TermCache {
    pub fn new(root: impl Into<PathBuf>) -> Self {
        TermCache { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn key(def: &SequenceDef) -> String {
        let digest = Sha256::digest(def.canonical_string().as_bytes());
        format!("{}-{}", def.name, &hex::encode(digest)[..16])
    }

    pub fn path_for(&self, def: &SequenceDef) -> PathBuf {
        self.root.join(format!("{}.bfile", Self::key(def)))
    }

    pub fn load(&self, def: &SequenceDef) -> Result<Option<TermStore>> {
        let path = self.path_for(def);
        if !path.exists() {
            return Ok(None);
        }
        let file = fs::File::open(&path).map_err(|source| Error::Cache {
            path: path.clone(),
            source,
        })?;
        Ok(Some(bfile::read_bfile(&def.name, file)?))
    }

    pub fn save(&self, def: &SequenceDef, store: &TermStore) -> Result<()> {
        let cache_err = |path: &Path| {
            let path = path.to_path_buf();
            move |source| Error::Cache { path, source }
        };
        fs::create_dir_all(&self.root).map_err(cache_err(&self.root))?;
        let path = self.path_for(def);
        let mut buf = Vec::new();
        bfile::write_bfile(store, &mut buf)?;
        // write-then-rename so readers never see a partial file
        let tmp = path.with_extension("bfile.tmp");
        fs::write(&tmp, buf).map_err(cache_err(&tmp))?;
        fs::rename(&tmp, &path).map_err(cache_err(&path))?;
        Ok(())
    }

    /// Terms `0..=upto`, reusing and growing the cached prefix.
    pub fn get_or_generate(&self, def: &SequenceDef, upto: u64) -> Result<TermStore> {
        let cached = self.load(def)?.filter(|s| s.first_index() == 0);
        if let Some(store) = &cached {
            if store.last_index() >= upto as i64 {
                return store.slice(0, upto);
            }
        }
        let store = match cached {
            Some(prefix) if def.recurrence.is_some() && prefix.len() >= def.initial_terms.len() => {
                extend_by_recurrence(def, &prefix, upto)?
            }
            _ => generate(def, upto)?,
        };
        self.save(def, &store)?;
        Ok(store)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::builtin;

    #[test]
    fn cache_round_trip_and_growth() {
        let dir = tempfile::tempdir().unwrap();
        let cache = TermCache::new(dir.path().join("terms"));
        let r = builtin::r_sequence();
        let a = cache.get_or_generate(&r, 20).unwrap();
        let path = cache.path_for(&r);
        assert!(path
            .file_name()
            .unwrap()
            .to_string_lossy()
            .starts_with("R-"));
        assert_eq!(cache.load(&r).unwrap().unwrap(), a);
        let b = cache.get_or_generate(&r, 40).unwrap();
        assert_eq!(b.slice(0, 20).unwrap(), a);
        assert_eq!(
            cache.get_or_generate(&r, 10).unwrap(),
            a.slice(0, 10).unwrap()
        );
        assert_eq!(b, generate(&r, 40).unwrap());
    }

    #[test]
    fn distinct_definitions_get_distinct_keys() {
        assert_ne!(
            TermCache::key(&builtin::r_sequence()),
            TermCache::key(&builtin::s_sequence())
        );
        assert_eq!(
            TermCache::key(&builtin::r_sequence()).len(),
            "R-".len() + 16
        );
    }
}
