//! Runtime configuration, read once from the environment.
//!
//! `FQG_MAX_CONDUCTOR` bounds the cyclotomic conductor reachable through
//! automatic lcm lifting (default 10^6). `FQG_THREADS` caps the rayon worker
//! pool used by the verifiers and scans.

use std::sync::OnceLock;

const DEFAULT_MAX_CONDUCTOR: u64 = 1_000_000;

pub fn max_conductor() -> u64 {
    static BOUND: OnceLock<u64> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var("FQG_MAX_CONDUCTOR")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_CONDUCTOR)
    })
}

/// Builds the global rayon pool honoring `FQG_THREADS`. Safe to call more
/// than once; only the first call configures the pool.
pub fn init_thread_pool() {
    static DONE: OnceLock<()> = OnceLock::new();
    DONE.get_or_init(|| {
        if let Some(n) = std::env::var("FQG_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            // Ignore the error if another component already built the pool.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    });
}
