//! Replicate fan-out with index-ordered merging.
//!
//! Each replicate derives its own random stream from `(seed, index)`, so the
//! merged output is identical for any thread count.

use std::num::NonZeroUsize;
use std::thread;

use folkdyn_core::urn::{limit_fraction_replicate, UrnState};

use crate::Result;

pub fn default_threads() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// `(0..n).map(f)` split into contiguous chunks over `threads` workers.
pub fn par_map_indexed<T, F>(n: u64, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync,
{
    let threads = threads.max(1).min(n.max(1) as usize);
    if threads == 1 {
        return (0..n).map(f).collect();
    }
    let chunk = n.div_ceil(threads as u64);
    let f = &f;
    thread::scope(|scope| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|t| {
                let lo = (t * chunk).min(n);
                let hi = ((t + 1) * chunk).min(n);
                scope.spawn(move || (lo..hi).map(f).collect::<Vec<T>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Parallel form of `folkdyn_core::urn::limit_fraction_samples`.
pub fn par_limit_fraction_samples(
    init: &UrnState<usize>,
    steps: u64,
    replicates: u64,
    seed: u64,
    color: usize,
    threads: usize,
) -> Result<Vec<f64>> {
    par_map_indexed(replicates, threads, |r| limit_fraction_replicate(init, steps, seed, r, &color))
        .into_iter()
        .map(|x| x.map_err(Into::into))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use folkdyn_core::urn::{limit_fraction_samples, two_color};

    #[test]
    fn thread_count_does_not_change_output() {
        let init = two_color(1, 2).unwrap();
        let serial = limit_fraction_samples(&init, 200, 37, 5, &0).unwrap();
        for threads in [1, 2, 3, 8] {
            assert_eq!(par_limit_fraction_samples(&init, 200, 37, 5, 0, threads).unwrap(), serial);
        }
    }

    #[test]
    fn empty_and_small() {
        assert!(par_map_indexed(0, 4, |i| i).is_empty());
        assert_eq!(par_map_indexed(3, 8, |i| i * 2), [0, 2, 4]);
    }
}
