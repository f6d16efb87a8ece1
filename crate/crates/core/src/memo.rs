use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{OnceLock, RwLock};

use crate::error::Result;

/// Process-wide memo table for pure computations.
pub(crate) struct Memo<K, V> {
    map: OnceLock<RwLock<HashMap<K, V>>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo {
            map: OnceLock::new(),
        }
    }

    pub(crate) fn get_or_try(&self, key: K, f: impl FnOnce() -> Result<V>) -> Result<V> {
        let map = self.map.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(v) = map.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let v = f()?;
        map.write()
            .expect("memo lock")
            .entry(key)
            .or_insert(v.clone());
        Ok(v)
    }
}
