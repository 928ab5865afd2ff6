#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use xmlift::fixtures;
use xmlift::group::DEFAULT_SIZE_BOUND;
use xmlift::CrossedModule;

/// Every crossed module on pairs of small groups, built once per binary.
pub fn pool() -> &'static [Arc<CrossedModule>] {
    static POOL: OnceLock<Vec<Arc<CrossedModule>>> = OnceLock::new();
    POOL.get_or_init(|| {
        fixtures::all_crossed_modules(&fixtures::small_groups(), DEFAULT_SIZE_BOUND).unwrap()
    })
}

pub fn transitive_pool() -> Vec<Arc<CrossedModule>> {
    pool()
        .iter()
        .filter(|x| x.is_transitive())
        .cloned()
        .collect()
}

pub fn standard() -> Vec<Arc<CrossedModule>> {
    fixtures::crossed_modules(DEFAULT_SIZE_BOUND)
        .unwrap()
        .into_iter()
        .map(|(_, x)| x)
        .collect()
}
