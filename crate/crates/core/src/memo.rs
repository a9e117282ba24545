use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// Append-only memo table shared between threads.
///
/// Values are computed outside the lock; two threads racing on the same key
/// may both compute it, and whichever inserts first wins. Entries are
/// idempotent so the loser's work is simply discarded.
pub(crate) struct Memo<K, V> {
    table: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            table: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, compute: impl FnOnce() -> V) -> Arc<V> {
        if let Some(hit) = self.table.read().unwrap().get(key) {
            return Arc::clone(hit);
        }
        let value = Arc::new(compute());
        let mut table = self.table.write().unwrap();
        Arc::clone(table.entry(key.clone()).or_insert(value))
    }

    pub(crate) fn try_get_or_insert_with<E>(
        &self,
        key: &K,
        compute: impl FnOnce() -> Result<V, E>,
    ) -> Result<Arc<V>, E> {
        if let Some(hit) = self.table.read().unwrap().get(key) {
            return Ok(Arc::clone(hit));
        }
        let value = Arc::new(compute()?);
        let mut table = self.table.write().unwrap();
        Ok(Arc::clone(table.entry(key.clone()).or_insert(value)))
    }
}
