//! Deterministic data-parallel primitives.
//!
//! Reductions are computed as ordered per-chunk partials combined
//! sequentially, so floating-point results are bit-identical across thread
//! counts and identical to the sequential fallback built with
//! `--no-default-features`.

/// Chunk length shared by the parallel and sequential reduction trees.
pub const CHUNK: usize = 4096;

/// Maps `0..n` through `f`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

/// Maps `0..n` through `f`, collecting results in index order.
#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).map(f).collect()
}

/// Sum of `f(i)` over `i < n` with a fixed chunk tree.
///
/// Each chunk of [`CHUNK`] consecutive indices is summed left to right and
/// the chunk totals are added left to right, so the rounding pattern does
/// not depend on how chunks were scheduled.
pub fn sum_indexed<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    let chunks = n.div_ceil(CHUNK);
    let partials = map_collect(chunks, |c| {
        let lo = c * CHUNK;
        let hi = ((c + 1) * CHUNK).min(n);
        let mut acc = 0.0;
        for i in lo..hi {
            acc += f(i);
        }
        acc
    });
    partials.into_iter().sum()
}

/// Sum of `f(x)` over a slice with the same fixed chunk tree as
/// [`sum_indexed`].
pub fn sum_slice<T, F>(items: &[T], f: F) -> f64
where
    T: Sync,
    F: Fn(&T) -> f64 + Sync + Send,
{
    sum_indexed(items.len(), |i| f(&items[i]))
}
