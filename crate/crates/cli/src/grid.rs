//! The fixed verification grid and an order-preserving parallel map.

use arch_constants::{critical_tuples, Tuple};
use gt_core::Weight;

/// Rank two: λ = (a, a − s) with a ∈ [−1, 2], spread s ≤ 3, w, w′ ∈ [−1, 2] and
/// every critical (μ, m). Rank three: a fixed list of admissible tuples.
pub fn verification_grid() -> Vec<Tuple> {
    let mut out = Vec::new();
    for a in -1..=2i64 {
        for s in 0..=3 {
            let l = Weight(vec![a, a - s]);
            for w in -1..=2 {
                for wp in -1..=2 {
                    out.extend(critical_tuples(&l, w, wp));
                }
            }
        }
    }
    out.extend(rank_three_tuples());
    out
}

pub fn rank_three_tuples() -> Vec<Tuple> {
    let mut out = vec![
        Tuple::new(Weight(vec![1, 0, -1]), 0, Weight(vec![1, 0]), 0, 0),
        Tuple::new(Weight(vec![1, 0, -1]), 0, Weight(vec![0, 0]), 0, 0),
    ];
    for (l, w, wp) in [
        (vec![0, -1, -2], 0, 0),
        (vec![0, -1, -1], 1, -1),
        (vec![0, 0, -2], -1, 1),
        (vec![0, 0, -1], 2, 0),
    ] {
        out.extend(critical_tuples(&Weight(l), w, wp).into_iter().take(2));
    }
    out
}

/// `f` over `items` in input order. `jobs = None` or `Some(1)` runs inline.
#[cfg(feature = "parallel")]
pub fn par_map<T: Sync, R: Send>(jobs: Option<usize>, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    match jobs {
        None | Some(1) => items.iter().map(f).collect(),
        Some(0) => items.par_iter().map(f).collect(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(|| items.par_iter().map(&f).collect()),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T: Sync, R: Send>(_jobs: Option<usize>, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}
