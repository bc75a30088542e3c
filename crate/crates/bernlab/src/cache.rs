//! Process-wide De Moivre cache shared by the numeric checks.

use std::sync::{Mutex, OnceLock};

use bernlab_core::exact::ExactRational;
use bernlab_core::generators::{BernoulliCache, Convention};

fn shared() -> &'static Mutex<BernoulliCache> {
    static CACHE: OnceLock<Mutex<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BernoulliCache::new()))
}

/// `B_k` in the given convention, extending the shared prefix as needed.
pub fn bernoulli(k: usize, conv: Convention) -> ExactRational {
    let mut cache = shared().lock().unwrap_or_else(|e| e.into_inner());
    cache.value(k, conv)
}
