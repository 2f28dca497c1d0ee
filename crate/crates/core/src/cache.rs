//! Read-mostly memo tables, optionally mirrored to JSON files on disk.

use std::collections::HashMap;
use std::hash::Hash;
use std::path::PathBuf;

use parking_lot::RwLock;
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Environment variable naming a directory for persisted basis memos.
pub const CACHE_DIR_ENV: &str = "MACD_CACHE_DIR";

/// A memo table; values are computed outside the lock and the first insert wins,
/// so every reader of a key observes the same value.
pub struct Memo<K, V> {
    map: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }
}

impl<K: Eq + Hash + Clone, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.map.read().get(key).cloned()
    }

    pub fn insert(&self, key: K, value: V) -> V {
        self.map.write().entry(key).or_insert(value).clone()
    }

    pub fn get_or_try_insert_with<E, F: FnOnce() -> Result<V, E>>(&self, key: &K, f: F) -> Result<V, E> {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = f()?;
        Ok(self.insert(key.clone(), v))
    }

    pub fn get_or_insert_with<F: FnOnce() -> V>(&self, key: &K, f: F) -> V {
        match self.get_or_try_insert_with::<std::convert::Infallible, _>(key, || Ok(f())) {
            Ok(v) => v,
            Err(e) => match e {},
        }
    }

    pub fn len(&self) -> usize {
        self.map.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().clear();
    }
}

fn disk_path(name: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_DIR_ENV)?;
    let safe: String = name
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect();
    Some(PathBuf::from(dir).join(format!("{safe}.json")))
}

/// Load a persisted value, if the cache directory is configured and holds one.
pub fn disk_load<V: DeserializeOwned>(name: &str) -> Option<V> {
    let path = disk_path(name)?;
    let text = std::fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

/// Persist a value; failures are ignored since the disk copy is only an accelerator.
pub fn disk_store<V: Serialize>(name: &str, value: &V) {
    let Some(path) = disk_path(name) else { return };
    if let Some(parent) = path.parent() {
        let _ = std::fs::create_dir_all(parent);
    }
    if let Ok(text) = serde_json::to_string(value) {
        let tmp = path.with_extension("json.tmp");
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(tmp, path);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_insert_wins() {
        let m: Memo<u32, String> = Memo::new();
        assert_eq!(m.insert(1, "a".into()), "a");
        assert_eq!(m.insert(1, "b".into()), "a");
        assert_eq!(m.get_or_insert_with(&2, || "c".into()), "c");
        assert_eq!(m.len(), 2);
        let r: Result<String, ()> = m.get_or_try_insert_with(&3, || Err(()));
        assert!(r.is_err());
        assert!(m.get(&3).is_none());
    }
}
