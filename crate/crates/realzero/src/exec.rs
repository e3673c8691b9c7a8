//! Execution helpers: data-parallel inner loops with a sequential fallback.
//!
//! With the `parallel` feature (default) the probe loops run on rayon.
//! Results are independent of thread count: searches report the match with
//! the smallest index and maps collect in index order. The `*_seq` variants
//! are always available and serve as the reference path for benchmarks.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Smallest index `i < n` for which `f(i)` returns `Some`, with its payload.
pub fn first_hit<T, F>(n: usize, f: F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n)
            .into_par_iter()
            .filter_map(|i| f(i).map(|w| (i, w)))
            .find_first(|_| true)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_hit_seq(n, f)
    }
}

/// Sequential reference implementation of [`first_hit`].
pub fn first_hit_seq<T, F>(n: usize, f: F) -> Option<(usize, T)>
where
    F: Fn(usize) -> Option<T>,
{
    (0..n).find_map(|i| f(i).map(|w| (i, w)))
}

/// Applies `f` to `0..n` and collects results in index order.
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_collect_seq(n, f)
    }
}

/// Sequential reference implementation of [`map_collect`].
pub fn map_collect_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_smallest_matching_index() {
        let hit = first_hit(1000, |i| if i >= 17 && i % 3 == 2 { Some(i * 2) } else { None });
        assert_eq!(hit, Some((17, 34)));
        let seq = first_hit_seq(1000, |i| if i >= 17 && i % 3 == 2 { Some(i * 2) } else { None });
        assert_eq!(hit, seq);
    }

    #[test]
    fn collects_in_index_order() {
        assert_eq!(map_collect(5, |i| i * i), vec![0, 1, 4, 9, 16]);
        assert_eq!(map_collect(5, |i| i * i), map_collect_seq(5, |i| i * i));
    }
}
