//! Assignment enumeration shared by the law checker, the magma predicates and
//! the ring laws.
//!
//! Exhaustive scans visit assignments in lexicographic index order and report
//! the first failure. With the `parallel` feature the scan is split on the
//! first coordinate and reduced with `find_map_first`, which returns the same
//! witness as the sequential walk.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Evaluation count performed by scans unless configured otherwise.
pub const DEFAULT_EVALUATION_BUDGET: u64 = 100_000_000;

/// How an exhaustive scan may use threads.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    /// Split large scans across the rayon pool when the `parallel` feature is on.
    #[default]
    Auto,
}

#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: u64 = 1 << 14;

/// `n^arity`, or `None` on overflow.
pub fn assignment_count(n: usize, arity: usize) -> Option<u64> {
    (n as u64).checked_pow(arity as u32)
}

/// Position of `assignment` in lexicographic order (0-based).
pub fn lex_rank(assignment: &[u32], n: usize) -> u64 {
    assignment.iter().fold(0u64, |acc, &v| acc * n as u64 + v as u64)
}

/// Returns the lexicographically smallest assignment in `[0, n)^arity` for which
/// `holds` is false.
pub fn first_failure<S, I, P>(n: usize, arity: usize, parallelism: Parallelism, init: I, holds: P) -> Option<Vec<u32>>
where
    I: Fn() -> S + Sync,
    P: Fn(&mut S, &[u32]) -> bool + Sync,
{
    if arity == 0 {
        let mut state = init();
        return (!holds(&mut state, &[])).then(Vec::new);
    }
    if n == 0 {
        return None;
    }
    #[cfg(feature = "parallel")]
    if parallelism == Parallelism::Auto
        && n > 1
        && assignment_count(n, arity).is_none_or(|total| total >= PARALLEL_THRESHOLD)
    {
        use rayon::prelude::*;
        return (0..n as u32).into_par_iter().find_map_first(|head| {
            let mut state = init();
            scan_suffix(n, arity, head, &mut state, &holds)
        });
    }
    let _ = parallelism;
    let mut state = init();
    (0..n as u32).find_map(|head| scan_suffix(n, arity, head, &mut state, &holds))
}

fn scan_suffix<S, P>(n: usize, arity: usize, head: u32, state: &mut S, holds: &P) -> Option<Vec<u32>>
where
    P: Fn(&mut S, &[u32]) -> bool,
{
    let mut asg = vec![0u32; arity];
    asg[0] = head;
    loop {
        if !holds(state, &asg) {
            return Some(asg);
        }
        // odometer over positions 1..arity
        let mut pos = arity;
        loop {
            pos -= 1;
            if pos == 0 {
                return None;
            }
            asg[pos] += 1;
            if (asg[pos] as usize) < n {
                break;
            }
            asg[pos] = 0;
        }
    }
}

/// Draws `count` uniform assignments from a ChaCha8 stream seeded with `seed`
/// and returns the first failing one together with the number evaluated.
pub fn sampled_failure<S, P>(
    n: usize,
    arity: usize,
    count: u64,
    seed: u64,
    mut state: S,
    holds: P,
) -> (Option<Vec<u32>>, u64)
where
    P: Fn(&mut S, &[u32]) -> bool,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut asg = vec![0u32; arity];
    if n == 0 {
        return (None, 0);
    }
    for done in 1..=count {
        for slot in asg.iter_mut() {
            *slot = rng.gen_range(0..n as u32);
        }
        if !holds(&mut state, &asg) {
            return (Some(asg), done);
        }
    }
    (None, count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_lexicographic_minimum() {
        // fails when the coordinates sum to 5
        let w = first_failure(4, 3, Parallelism::Sequential, || (), |_, a| a.iter().sum::<u32>() != 5);
        assert_eq!(w, Some(vec![0, 2, 3]));
        let w = first_failure(40, 3, Parallelism::Auto, || (), |_, a| a.iter().sum::<u32>() != 70);
        assert_eq!(w, Some(vec![0, 31, 39]));
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(first_failure(3, 0, Parallelism::Auto, || (), |_, _| true), None);
        assert_eq!(first_failure(3, 0, Parallelism::Auto, || (), |_, _| false), Some(vec![]));
        assert_eq!(first_failure(1, 4, Parallelism::Auto, || (), |_, a| a != [0, 0, 0, 0]), Some(vec![0, 0, 0, 0]));
        assert_eq!(first_failure(5, 1, Parallelism::Auto, || (), |_, a| a[0] != 3), Some(vec![3]));
    }

    #[test]
    fn rank_and_count() {
        assert_eq!(lex_rank(&[0, 2, 3], 4), 11);
        assert_eq!(assignment_count(16, 4), Some(65_536));
        assert_eq!(assignment_count(1 << 20, 4), None);
    }

    #[test]
    fn sampling_is_seeded() {
        let run = |seed| sampled_failure(10, 2, 1000, seed, (), |_, a| a != [3, 4]);
        assert_eq!(run(7), run(7));
        let (none, evals) = sampled_failure(10, 2, 50, 1, (), |_, _| true);
        assert_eq!((none, evals), (None, 50));
    }
}
