//! Data-parallel helpers over index ranges.
//!
//! With the `parallel` feature these dispatch to rayon; without it they are
//! plain sequential iterators. Every helper preserves input order, so sweep
//! results do not depend on the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Ordered map over `lo..hi`.
pub fn map_range<R, F>(lo: u64, hi: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (lo..hi).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..hi).map(f).collect()
    }
}

/// Ordered filter over `lo..hi`.
pub fn filter_range<F>(lo: u64, hi: u64, pred: F) -> Vec<u64>
where
    F: Fn(u64) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (lo..hi).into_par_iter().filter(|&x| pred(x)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..hi).filter(|&x| pred(x)).collect()
    }
}

/// Exact integer sum of `f` over `lo..hi`.
pub fn sum_range<F>(lo: u64, hi: u64, f: F) -> i64
where
    F: Fn(u64) -> i64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (lo..hi).into_par_iter().map(f).sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..hi).map(f).sum()
    }
}

/// Ordered map over a slice.
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Runs `f` on a pool of `jobs` threads (`None` keeps the global pool).
/// Without the `parallel` feature the job count is ignored.
pub fn with_jobs<R, F>(jobs: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        match jobs {
            Some(k) => rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        f()
    }
}

/// Whether sweeps run on rayon in this build.
pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
