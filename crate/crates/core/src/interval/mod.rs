//! Interval graphs given by representations, and the three-stage reduction
//! to an induced path: successor-adjacent subgraph, simplicial pruning, and
//! a zigzag through a stable set.

mod rep;
mod stages;

pub use rep::{parse_intervals, IntervalRep, LeftOrdering};
pub use stages::{
    build_scaffold, interval_pipeline, stage_f1, stage_f2, stage_f3, PipelineRun, StableScaffold, ZigzagRun,
};

/// Interval `i` is `[2i, 2i + 2k - 1]`: each vertex meets the next `k - 1`,
/// so the clique number is `k` and `0..n` is a Hamiltonian path.
pub fn staircase(n: usize, k: usize) -> IntervalRep {
    let span = 2 * k as i64 - 1;
    let iv: Vec<(i64, i64)> = (0..n as i64).map(|i| (2 * i, 2 * i + span)).collect();
    IntervalRep::new(&iv).expect("lefts even, rights odd")
}

/// Random intervals in which each vertex meets its successor in left
/// order, so `0..n` (the left order) is a Hamiltonian path. `reach` bounds
/// how many successors an interval may stretch over.
pub fn random_successor_adjacent<R: rand::Rng>(n: usize, reach: usize, rng: &mut R) -> IntervalRep {
    let lefts: Vec<i64> = (0..n as i64).map(|i| 4 * i).collect();
    let iv: Vec<(i64, i64)> = (0..n)
        .map(|i| {
            let extra = rng.gen_range(1..=reach.max(1));
            let last = (i + extra).min(n - 1).max(i + 1);
            let r = if i + 1 >= n {
                lefts[i] + 1
            } else {
                lefts[last] + rng.gen_range(0..3)
            };
            (lefts[i], r)
        })
        .collect();
    IntervalRep::normalized(&iv).expect("lefts increase and rights exceed them")
}
