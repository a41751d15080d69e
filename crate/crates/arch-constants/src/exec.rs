//! Sequential or data-parallel evaluation of independent exact sums.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Exec {
    #[default]
    Sequential,
    /// `jobs = 0` uses every available core. Without the `parallel` feature
    /// this runs sequentially.
    Parallel { jobs: usize },
}

/// Maps `f` over `items` and folds the results with `merge`; the fold order
/// does not affect the result because `merge` is exact and associative.
pub(crate) fn map_reduce<T, R, F, M>(exec: Exec, items: &[T], init: impl Fn() -> R + Sync + Send, f: F, merge: M) -> R
where
    T: Sync,
    R: Send,
    F: Fn(&mut R, &T) + Sync + Send,
    M: Fn(R, R) -> R + Sync + Send,
{
    match exec {
        Exec::Sequential => seq(items, init, f),
        Exec::Parallel { jobs } => par(jobs, items, init, f, merge),
    }
}

fn seq<T, R>(items: &[T], init: impl Fn() -> R, f: impl Fn(&mut R, &T)) -> R {
    let mut acc = init();
    for x in items {
        f(&mut acc, x);
    }
    acc
}

#[cfg(feature = "parallel")]
fn par<T, R, F, M>(jobs: usize, items: &[T], init: impl Fn() -> R + Sync + Send, f: F, merge: M) -> R
where
    T: Sync,
    R: Send,
    F: Fn(&mut R, &T) + Sync + Send,
    M: Fn(R, R) -> R + Sync + Send,
{
    use rayon::prelude::*;
    let run = || {
        items
            .par_iter()
            .fold(&init, |mut acc, x| {
                f(&mut acc, x);
                acc
            })
            .reduce(&init, &merge)
    };
    if jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(run)
    }
}

#[cfg(not(feature = "parallel"))]
fn par<T, R, F, M>(_jobs: usize, items: &[T], init: impl Fn() -> R + Sync + Send, f: F, _merge: M) -> R
where
    F: Fn(&mut R, &T),
{
    seq(items, init, f)
}
