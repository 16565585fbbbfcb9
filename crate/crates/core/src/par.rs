//! Order-preserving data-parallel helpers.
//!
//! With the `parallel` feature (on by default) these run on the rayon global
//! pool; without it they fall back to plain sequential iteration. Either way
//! results come back in input order, so every caller stays deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, collecting results in index order.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Maps `f` over a slice, collecting results in slice order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
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

/// Like [`map_range`] but concatenates the per-index vectors.
pub fn flat_map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> Vec<R> + Sync + Send,
{
    map_range(n, f).into_iter().flatten().collect()
}

/// Like [`map`] but concatenates the per-item vectors.
pub fn flat_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    map(items, f).into_iter().flatten().collect()
}

/// True iff `pred` holds for every index in `0..n`.
pub fn all_range<F>(n: usize, pred: F) -> bool
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().all(pred)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).all(pred)
    }
}

/// Sizes the global worker pool. Only the first call has an effect, and
/// without the `parallel` feature it does nothing.
pub fn set_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
    }
}

/// Whether the crate was built with the rayon backend.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let out = map_range(1000, |i| i * 2);
        assert!(out.iter().enumerate().all(|(i, &v)| v == 2 * i));
        let flat = flat_map(&[1usize, 2, 3], |&k| vec![k; k]);
        assert_eq!(flat, vec![1, 2, 2, 3, 3, 3]);
        assert!(all_range(50, |i| i < 50));
        assert!(!all_range(50, |i| i != 17));
    }
}
