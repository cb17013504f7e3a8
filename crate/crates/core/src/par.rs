//! Execution policy for the data-parallel loops (sampling, scans, sweeps,
//! random ensembles).
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] dispatches to
//! rayon; without it every policy runs sequentially. Only element-wise maps
//! are parallelised. Floating-point reductions over the mapped values always
//! run sequentially in index order, so results are bit-identical across
//! policies and thread counts.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many items a parallel map is not worth the scheduling cost.
const PARALLEL_THRESHOLD: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// True when this policy actually runs on the rayon pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// `(0..n).map(f)` collected in index order.
    pub fn map<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.map_with_threshold(n, PARALLEL_THRESHOLD, f)
    }

    /// Like [`Execution::map`] but parallelises any non-empty batch. Use this
    /// when each item is expensive (one random trial, one sweep row).
    pub fn map_coarse<T, F>(self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.map_with_threshold(n, 2, f)
    }

    fn map_with_threshold<T, F>(self, n: usize, threshold: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel && n >= threshold {
            return (0..n).into_par_iter().map(f).collect();
        }
        let _ = threshold;
        (0..n).map(f).collect()
    }
}
