//! Parallel/sequential execution of partitioned scans.
//!
//! Scans split their index space into disjoint chunks, evaluate chunks
//! independently, and merge with an associative, commutative operation, so
//! the result is identical whichever path runs.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `eval` over the chunks and fold with `merge`, in parallel when the
/// `parallel` feature is enabled.
pub(crate) fn map_reduce<C, T, E, M>(chunks: Vec<C>, eval: E, identity: T, merge: M) -> T
where
    C: Send,
    T: Send + Sync + Clone,
    E: Fn(C) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        chunks
            .into_par_iter()
            .map(eval)
            .reduce(|| identity.clone(), &merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        chunks.into_iter().map(eval).fold(identity, merge)
    }
}

/// Always-sequential twin of [`map_reduce`], kept for the benchmark suite
/// and for parallel-vs-sequential equality tests.
pub(crate) fn map_reduce_seq<C, T, E, M>(chunks: Vec<C>, eval: E, identity: T, merge: M) -> T
where
    E: Fn(C) -> T,
    M: Fn(T, T) -> T,
{
    chunks.into_iter().map(eval).fold(identity, merge)
}
