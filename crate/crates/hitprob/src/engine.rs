//! Quotients computed once per process, backed by the disk cache.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use hitprob_core::{admissible_basis, weight_quotient, QuotientBasis, Result, WeightVector};

use crate::cache::{Cache, CacheKey};

#[derive(Debug, Default)]
pub struct Engine {
    cache: Option<Cache>,
    memo: Mutex<HashMap<CacheKey, Arc<QuotientBasis>>>,
}

impl Engine {
    pub fn new(cache: Option<Cache>) -> Self {
        Engine {
            cache,
            memo: Mutex::default(),
        }
    }

    pub fn cache(&self) -> Option<&Cache> {
        self.cache.as_ref()
    }

    /// `(QP_k)_n`.
    pub fn basis(&self, k: usize, n: u32) -> Result<Arc<QuotientBasis>> {
        self.get(CacheKey::degree(k, n), || admissible_basis(k, n))
    }

    /// `QP_k(w)`, computed on its own rather than cut out of the full degree.
    pub fn block(&self, k: usize, w: &WeightVector) -> Result<Arc<QuotientBasis>> {
        self.get(CacheKey::block(k, w), || weight_quotient(k, w))
    }

    fn get(&self, key: CacheKey, compute: impl FnOnce() -> Result<QuotientBasis>) -> Result<Arc<QuotientBasis>> {
        if let Some(q) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(q.clone());
        }
        let q = match self.cache.as_ref().and_then(|c| c.get(&key)) {
            Some(q) => q,
            None => {
                let q = compute()?;
                if let Some(c) = &self.cache {
                    if let Err(e) = c.put(&key, &q) {
                        eprintln!("warning: could not write {}: {e}", c.path(&key).display());
                    }
                }
                q
            }
        };
        let q = Arc::new(q);
        self.memo.lock().expect("memo lock").insert(key, q.clone());
        Ok(q)
    }
}
