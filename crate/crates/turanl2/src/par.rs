//! Thread pools and parallel versions of the heavy core routines.
//!
//! Every reduction collects results in input order, so outputs do not depend
//! on the worker count.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use turanl2_core::census::{census_k43_with, CensusReport};
use turanl2_core::inequality::{merge_rows, simplex_row, SimplexReport};
use turanl2_core::{Error, Result};

pub const WORKERS_ENV: &str = "TURANL2_WORKERS";

/// `--workers`, then `TURANL2_WORKERS`, then the number of cores.
pub fn resolve_workers(flag: Option<usize>) -> usize {
    flag.filter(|&w| w > 0)
        .or_else(|| std::env::var(WORKERS_ENV).ok().and_then(|s| s.trim().parse().ok()).filter(|&w| w > 0))
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

pub fn pool(workers: usize) -> ThreadPool {
    ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

pub fn census_k43(n: usize, pool: &ThreadPool) -> Result<CensusReport> {
    pool.install(|| census_k43_with(n, |s, level, best| level.par_iter().map(|&g| s.expand(g, best)).collect()))
}

pub fn simplex(d: usize, pool: &ThreadPool) -> Result<SimplexReport> {
    if d == 0 {
        return Err(Error::InvalidParameter("resolution must be at least 1".into()));
    }
    let rows: Vec<_> = pool.install(|| (0..=d).into_par_iter().map(|a| simplex_row(d, a)).collect());
    Ok(merge_rows(d, rows))
}

/// Runs `f(i)` for `i in 0..count` and returns results in index order.
pub fn trials<T, F>(count: usize, pool: &ThreadPool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    pool.install(|| (0..count).into_par_iter().map(f).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use turanl2_core::census;
    use turanl2_core::inequality::verify_simplex_inequality;

    #[test]
    fn parallel_matches_sequential() {
        let p = pool(3);
        assert_eq!(census_k43(5, &p).unwrap(), census::census_k43(5).unwrap());
        assert_eq!(simplex(37, &p).unwrap(), verify_simplex_inequality(37).unwrap());
        assert!(simplex(0, &p).is_err());
        assert_eq!(trials(5, &p, |i| i * i), [0, 1, 4, 9, 16]);
    }

    #[test]
    fn worker_flag_wins() {
        assert_eq!(resolve_workers(Some(3)), 3);
        assert!(resolve_workers(None) >= 1);
    }
}
