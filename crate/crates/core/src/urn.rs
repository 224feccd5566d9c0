//! Eggenberger–Polya urn.
//!
//! A ball is drawn with probability proportional to its color's count and
//! returned together with one more ball of the same color. Colors are opaque
//! labels, so the same kernel drives tag reinforcement in [`crate::tagsim`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_core::RngCore;

use crate::rng::{self, Seed, STREAM_TAGS};
use crate::{Error, Result};

/// Largest step count accepted by [`exact_fraction_distribution`].
pub const MAX_EXACT_STEPS: u64 = 16;
/// Largest number of draw sequences [`exact_fraction_distribution`] will walk.
pub const MAX_EXACT_PATHS: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UrnState<C> {
    colors: Vec<C>,
    counts: Vec<u64>,
    initial_total: u64,
    step: u64,
}

impl<C: Clone + PartialEq> UrnState<C> {
    /// Builds an urn from `(color, balls)` pairs. Every color needs at least
    /// one ball and colors must be distinct.
    pub fn new(balls: impl IntoIterator<Item = (C, u64)>) -> Result<Self> {
        let mut colors: Vec<C> = Vec::new();
        let mut counts = Vec::new();
        for (c, n) in balls {
            if n == 0 {
                return Err(Error::InvalidArgument(format!("color {} has no balls", colors.len())));
            }
            if colors.contains(&c) {
                return Err(Error::InvalidArgument(format!("color {} repeated", colors.len())));
            }
            colors.push(c);
            counts.push(n);
        }
        if colors.is_empty() {
            return Err(Error::EmptyInput("urn"));
        }
        let initial_total = counts.iter().sum();
        Ok(UrnState { colors, counts, initial_total, step: 0 })
    }

    pub fn index_of(&self, color: &C) -> Option<usize> {
        self.colors.iter().position(|c| c == color)
    }

    pub fn count(&self, color: &C) -> Option<u64> {
        self.index_of(color).map(|i| self.counts[i])
    }

    pub fn fraction(&self, color: &C) -> Option<f64> {
        self.count(color).map(|n| n as f64 / self.total() as f64)
    }

    /// Adds one ball of color `index` in place.
    pub fn add_ball(&mut self, index: usize) {
        self.counts[index] += 1;
        self.step += 1;
    }
}

impl<C> UrnState<C> {
    pub fn colors(&self) -> &[C] {
        &self.colors
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.initial_total + self.step
    }

    pub fn initial_total(&self) -> u64 {
        self.initial_total
    }

    /// Number of reinforcement steps performed.
    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn fractions(&self) -> Vec<f64> {
        let total = self.total() as f64;
        self.counts.iter().map(|&n| n as f64 / total).collect()
    }
}

/// The state after adding one ball of color `drawn`.
pub fn urn_step<C: Clone + PartialEq>(state: &UrnState<C>, drawn: &C) -> Result<UrnState<C>> {
    let i = state.index_of(drawn).ok_or(Error::UnknownColor)?;
    let mut next = state.clone();
    next.add_ball(i);
    Ok(next)
}

/// Index of the drawn color; consumes exactly one `u64` from `rng`.
pub fn draw_index<C, R: RngCore + ?Sized>(state: &UrnState<C>, rng: &mut R) -> usize {
    rng::weighted_index(rng, &state.counts).expect("urn holds at least one ball")
}

pub fn urn_draw<'a, C, R: RngCore + ?Sized>(state: &'a UrnState<C>, rng: &mut R) -> &'a C {
    &state.colors[draw_index(state, rng)]
}

/// Draw-and-reinforce loop over raw counts. Consumes one `u64` per step.
fn run_counts<R: RngCore + ?Sized>(counts: &mut [u64], steps: u64, rng: &mut R) {
    let mut total: u64 = counts.iter().sum();
    if let [first, second] = counts {
        for _ in 0..steps {
            if rng::below(rng, total) < *first {
                *first += 1;
            } else {
                *second += 1;
            }
            total += 1;
        }
        return;
    }
    for _ in 0..steps {
        let mut target = rng::below(rng, total);
        let mut i = 0;
        while target >= counts[i] {
            target -= counts[i];
            i += 1;
        }
        counts[i] += 1;
        total += 1;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UrnTrajectory<C> {
    colors: Vec<C>,
    /// Ball counts at steps `0..=steps`.
    counts: Vec<Vec<u64>>,
    seed: Seed,
}

impl<C> UrnTrajectory<C> {
    pub fn colors(&self) -> &[C] {
        &self.colors
    }

    pub fn seed(&self) -> Seed {
        self.seed
    }

    /// Number of recorded states (`steps + 1`).
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn counts_at(&self, step: usize) -> &[u64] {
        &self.counts[step]
    }

    pub fn fractions_at(&self, step: usize) -> Vec<f64> {
        let c = &self.counts[step];
        let total: u64 = c.iter().sum();
        c.iter().map(|&n| n as f64 / total as f64).collect()
    }

    pub fn terminal_fractions(&self) -> Vec<f64> {
        self.fractions_at(self.counts.len() - 1)
    }
}

/// Runs `steps` draw/reinforce rounds from `init`.
pub fn simulate_urn<C: Clone>(init: &UrnState<C>, steps: u64, seed: Seed) -> UrnTrajectory<C> {
    let mut rng = seed.rng(STREAM_TAGS);
    let mut current = init.counts.clone();
    let mut counts = Vec::with_capacity(steps as usize + 1);
    counts.push(current.clone());
    for _ in 0..steps {
        run_counts(&mut current, 1, &mut rng);
        counts.push(current.clone());
    }
    UrnTrajectory { colors: init.colors.clone(), counts, seed }
}

/// Terminal fraction of `color` for each of `replicates` independent runs.
/// Replicate `r` uses `Seed::sub_seed(seed, r)`, so replicate 0 matches
/// `simulate_urn(init, steps, Seed::new(seed))`.
pub fn limit_fraction_samples<C: Clone + PartialEq>(
    init: &UrnState<C>,
    steps: u64,
    replicates: u64,
    seed: u64,
    color: &C,
) -> Result<Vec<f64>> {
    (0..replicates)
        .map(|r| limit_fraction_replicate(init, steps, seed, r, color))
        .collect()
}

/// One replicate of [`limit_fraction_samples`].
pub fn limit_fraction_replicate<C: Clone + PartialEq>(
    init: &UrnState<C>,
    steps: u64,
    seed: u64,
    replicate: u64,
    color: &C,
) -> Result<f64> {
    let idx = init.index_of(color).ok_or(Error::UnknownColor)?;
    let mut counts = init.counts.clone();
    let mut rng = Seed::sub_seed(seed, replicate).rng(STREAM_TAGS);
    run_counts(&mut counts, steps, &mut rng);
    Ok(counts[idx] as f64 / (init.total() + steps) as f64)
}

/// Non-negative reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u128,
    den: u128,
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ratio {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Ratio { num: num / g, den: den / g }
    }

    pub fn numer(&self) -> u128 {
        self.num
    }

    pub fn denom(&self) -> u128 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        // Values stay far below 2^64 in practice; fall back to floats otherwise.
        match (self.num.checked_mul(other.den), other.num.checked_mul(self.den)) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Exact law of one color's fraction after a fixed number of steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionDistribution {
    total: u64,
    /// terminal ball count of the designated color -> probability
    atoms: BTreeMap<u64, Ratio>,
}

impl FractionDistribution {
    /// Balls in the urn after the enumerated steps.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// `(terminal fraction, probability)` in increasing fraction order.
    pub fn atoms(&self) -> impl Iterator<Item = (Ratio, Ratio)> + '_ {
        self.atoms
            .iter()
            .map(move |(&k, &p)| (Ratio::new(k as u128, self.total as u128), p))
    }

    /// Probability that the designated color ends with `count` balls.
    pub fn probability_of_count(&self, count: u64) -> Option<Ratio> {
        self.atoms.get(&count).copied()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }
}

/// Enumerates every draw sequence of length `steps` and groups the path
/// probabilities by the terminal fraction of `color`.
///
/// Every path shares the denominator `T (T+1) ... (T+steps-1)` where `T` is
/// the initial total, so the law is accumulated exactly as integer
/// numerators over that common denominator.
pub fn exact_fraction_distribution<C: Clone + PartialEq>(
    init: &UrnState<C>,
    steps: u64,
    color: &C,
) -> Result<FractionDistribution> {
    let idx = init.index_of(color).ok_or(Error::UnknownColor)?;
    if steps > MAX_EXACT_STEPS {
        return Err(Error::ResourceLimit(format!("{steps} steps exceeds {MAX_EXACT_STEPS}")));
    }
    let colors = init.counts.len() as u128;
    let paths = (0..steps).try_fold(1u128, |acc, _| acc.checked_mul(colors));
    if !matches!(paths, Some(p) if p <= MAX_EXACT_PATHS) {
        return Err(Error::ResourceLimit(format!(
            "{} colors over {steps} steps exceeds {MAX_EXACT_PATHS} paths",
            init.counts.len()
        )));
    }
    let start = init.total() as u128;
    let denominator = (0..steps as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(start + k))
        .ok_or_else(|| Error::ResourceLimit(format!("path weights overflow for total {start}")))?;

    let mut numerators: BTreeMap<u64, u128> = BTreeMap::new();
    let mut counts = init.counts.clone();
    enumerate(&mut counts, steps, 1, idx, &mut numerators);
    let atoms = numerators
        .into_iter()
        .map(|(k, n)| (k, Ratio::new(n, denominator)))
        .collect();
    Ok(FractionDistribution { total: init.total() + steps, atoms })
}

fn enumerate(counts: &mut [u64], remaining: u64, weight: u128, idx: usize, out: &mut BTreeMap<u64, u128>) {
    if remaining == 0 {
        *out.entry(counts[idx]).or_insert(0) += weight;
        return;
    }
    for c in 0..counts.len() {
        let w = weight * counts[c] as u128;
        counts[c] += 1;
        enumerate(counts, remaining - 1, w, idx, out);
        counts[c] -= 1;
    }
}

/// Red/black urn helper used throughout the tests and the CLI.
pub fn two_color(red: u64, black: u64) -> Result<UrnState<usize>> {
    UrnState::new(vec![(0usize, red), (1usize, black)])
}
