//! Execution mode switch for the data-parallel loops.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs on
//! the rayon global pool. Without it every call runs sequentially, so callers
//! never need their own `cfg` guards.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when work will actually fan out across threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Order-preserving map over a slice.
pub fn map_collect<T, U, F>(exec: Execution, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Map every item and combine the results with an associative `reduce`.
pub fn map_reduce<T, U, F, I, R>(exec: Execution, items: &[T], f: F, identity: I, reduce: R) -> U
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
    I: Fn() -> U + Sync + Send,
    R: Fn(U, U) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).reduce(identity, reduce);
    }
    let _ = exec;
    items.iter().map(f).fold(identity(), reduce)
}
