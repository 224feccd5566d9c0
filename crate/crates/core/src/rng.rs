//! Deterministic random streams.
//!
//! Every random quantity in the toolkit comes from ChaCha8 (as implemented
//! by `rand_chacha` 0.9). A [`Seed`] is a pair `(root, replicate)`; the
//! 256-bit ChaCha key is `root.to_le_bytes() || replicate.to_le_bytes() ||
//! [0; 16]`, and the 64-bit ChaCha stream id selects a purpose within one
//! replicate (see the `STREAM_*` constants). Distinct `(root, replicate)`
//! pairs therefore produce distinct keys, and a replicate's output does not
//! depend on which other replicates ran or in what order.

pub use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Stream used for urn draws and tag selection.
pub const STREAM_TAGS: u64 = 0;
/// Stream used for arrival times.
pub const STREAM_ARRIVALS: u64 = 1;
/// Stream used by fixture generators for layout decisions.
pub const STREAM_LAYOUT: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed {
    pub root: u64,
    pub replicate: u64,
}

impl Seed {
    pub const fn new(root: u64) -> Self {
        Seed { root, replicate: 0 }
    }

    /// Seed of replicate `r` under `root`. `sub_seed(s, 0) == Seed::new(s)`.
    pub const fn sub_seed(root: u64, replicate: u64) -> Self {
        Seed { root, replicate }
    }

    pub fn rng(self, stream: u64) -> ChaCha8Rng {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&self.root.to_le_bytes());
        key[8..16].copy_from_slice(&self.replicate.to_le_bytes());
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(stream);
        rng
    }
}

impl From<u64> for Seed {
    fn from(root: u64) -> Self {
        Seed::new(root)
    }
}

/// Uniform in `[0, 1)` with 53 bits of precision; consumes one `u64`.
#[inline]
pub fn uniform<R: RngCore + ?Sized>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform integer in `0..bound` from one `u64` by widening multiply.
/// The bias is at most `bound / 2^64`.
#[inline]
pub fn below<R: RngCore + ?Sized>(rng: &mut R, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    ((rng.next_u64() as u128 * bound as u128) >> 64) as u64
}

/// Index `i` with probability `weights[i] / sum(weights)`; consumes one `u64`.
/// Returns `None` when every weight is zero.
pub fn weighted_index<R: RngCore + ?Sized>(rng: &mut R, weights: &[u64]) -> Option<usize> {
    let total: u64 = weights.iter().sum();
    if total == 0 {
        return None;
    }
    let mut target = below(rng, total);
    for (i, &w) in weights.iter().enumerate() {
        if target < w {
            return Some(i);
        }
        target -= w;
    }
    unreachable!("target below total")
}

/// Index `i` with probability proportional to real `weights[i]`; consumes one `u64`.
pub fn weighted_index_f64<R: RngCore + ?Sized>(rng: &mut R, weights: &[f64]) -> Option<usize> {
    let total: f64 = weights.iter().sum();
    if total.is_nan() || total <= 0.0 {
        return None;
    }
    let target = uniform(rng) * total;
    let mut acc = 0.0;
    let mut last = None;
    for (i, &w) in weights.iter().enumerate() {
        if w <= 0.0 {
            continue;
        }
        acc += w;
        last = Some(i);
        if target < acc {
            return Some(i);
        }
    }
    last
}
