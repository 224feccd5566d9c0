//! Generative model of one URL's bookmark stream.
//!
//! Each bookmark fills a random number of tag slots. A slot mints a fresh
//! tag with probability `innovation_prob`; otherwise it imitates the
//! displayed `top_k` tags (drawn in proportion to their counts, the urn
//! kernel) with probability `imitation_prob`, and falls back to the shared
//! vocabulary. Arrival times come from a piecewise-constant Poisson rate
//! with an optional exogenous burst.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;

use crate::model::{Bookmark, History, Timestamp, UrlHistory, SECONDS_PER_DAY};
use crate::rng::{self, Seed, STREAM_ARRIVALS, STREAM_TAGS};
use crate::{Error, Result};

/// Redraw budget for a slot whose draw duplicates a tag already chosen.
pub const MAX_SLOT_ATTEMPTS: usize = 100;

/// 2005-01-01T00:00:00Z.
pub const DEFAULT_ORIGIN: Timestamp = Timestamp(1_104_537_600);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Burst {
    pub start_day: f64,
    pub multiplier: f64,
    pub duration_days: f64,
}

/// Piecewise-constant bookmark rate (per day). The last segment extends
/// indefinitely; a burst multiplies the rate inside its window.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrivalSchedule {
    pub segments: Vec<(f64, f64)>,
    pub burst: Option<Burst>,
}

impl ArrivalSchedule {
    pub fn constant(rate: f64) -> Self {
        ArrivalSchedule { segments: vec![(1.0, rate)], burst: None }
    }

    pub fn validate(&self) -> Result<()> {
        if self.segments.is_empty() {
            return Err(Error::InvalidConfig("arrival schedule has no segments".to_string()));
        }
        for &(d, r) in &self.segments {
            if !(d > 0.0 && d.is_finite()) {
                return Err(Error::InvalidConfig(format!("segment duration {d} must be positive")));
            }
            if !(r >= 0.0 && r.is_finite()) {
                return Err(Error::InvalidConfig(format!("segment rate {r} must be non-negative")));
            }
        }
        if let Some(b) = &self.burst {
            if !(b.start_day >= 0.0 && b.start_day.is_finite()) {
                return Err(Error::InvalidConfig("burst start must be non-negative".to_string()));
            }
            if !(b.duration_days > 0.0 && b.duration_days.is_finite()) {
                return Err(Error::InvalidConfig("burst duration must be positive".to_string()));
            }
            if !(b.multiplier >= 0.0 && b.multiplier.is_finite()) {
                return Err(Error::InvalidConfig("burst multiplier must be non-negative".to_string()));
            }
        }
        if self.segments.iter().all(|&(_, r)| r == 0.0) {
            return Err(Error::InvalidConfig("all arrival rates are zero".to_string()));
        }
        if self.segments.last().map(|s| s.1) == Some(0.0) {
            return Err(Error::InvalidConfig("final arrival segment must have a positive rate".to_string()));
        }
        Ok(())
    }

    /// Rate in bookmarks/day at `day` days after the origin.
    pub fn rate_at(&self, day: f64) -> f64 {
        let mut start = 0.0;
        let mut base = self.segments.last().map_or(0.0, |s| s.1);
        for &(d, r) in &self.segments {
            if day < start + d {
                base = r;
                break;
            }
            start += d;
        }
        match &self.burst {
            Some(b) if day >= b.start_day && day < b.start_day + b.duration_days => base * b.multiplier,
            _ => base,
        }
    }

    fn rate_bound(&self) -> f64 {
        let peak = self.segments.iter().map(|s| s.1).fold(0.0, f64::max);
        let m = self.burst.map_or(1.0, |b| b.multiplier.max(1.0));
        peak * m
    }
}

/// `count` arrival times starting at `origin`.
///
/// The first bookmark is the resource's arrival and sits at `origin`; the
/// remaining `count - 1` follow the inhomogeneous Poisson process, sampled
/// by thinning against the schedule's maximum rate.
pub fn arrival_times<R: RngCore + ?Sized>(
    schedule: &ArrivalSchedule,
    count: usize,
    origin: Timestamp,
    rng: &mut R,
) -> Result<Vec<Timestamp>> {
    schedule.validate()?;
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(origin);
    let bound = schedule.rate_bound();
    let mut day = 0.0f64;
    while out.len() < count {
        day += -libm::log(1.0 - rng::uniform(rng)) / bound;
        if rng::uniform(rng) * bound < schedule.rate_at(day) {
            let secs = libm::floor(day * SECONDS_PER_DAY as f64) as i64;
            out.push(origin.plus_seconds(secs));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub imitation_prob: f64,
    pub top_k: usize,
    pub shared_vocab: BTreeMap<String, f64>,
    pub innovation_prob: f64,
    /// `(tag count, weight)` pairs; weights need not be normalized.
    pub tags_per_bookmark: Vec<(usize, f64)>,
    pub total_bookmarks: usize,
    pub arrival: ArrivalSchedule,
    /// Balls already in the urn before the first bookmark. Empty by default.
    pub initial_counts: BTreeMap<String, u64>,
    pub origin: Timestamp,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            imitation_prob: 0.8,
            top_k: 5,
            shared_vocab: (1..=5).map(|i| (format!("tag{i}"), 0.2)).collect(),
            innovation_prob: 0.0,
            tags_per_bookmark: vec![(1, 1.0), (2, 1.0), (3, 1.0)],
            total_bookmarks: 2000,
            arrival: ArrivalSchedule::constant(10.0),
            initial_counts: BTreeMap::new(),
            origin: DEFAULT_ORIGIN,
        }
    }
}

impl SimConfig {
    /// Single-tag bookmarks, pure imitation, two seed balls `red`/`black`:
    /// the induced tag process is the classic Polya urn.
    pub fn urn_pure(steps: usize) -> Self {
        SimConfig {
            imitation_prob: 1.0,
            top_k: 2,
            shared_vocab: [("black".to_string(), 0.5), ("red".to_string(), 0.5)].into_iter().collect(),
            innovation_prob: 0.0,
            tags_per_bookmark: vec![(1, 1.0)],
            total_bookmarks: steps,
            initial_counts: [("black".to_string(), 1), ("red".to_string(), 1)].into_iter().collect(),
            ..SimConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |name: &str, v: f64| {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::InvalidConfig(format!("{name} = {v} outside [0, 1]")))
            }
        };
        unit("imitation_prob", self.imitation_prob)?;
        unit("innovation_prob", self.innovation_prob)?;
        if self.top_k == 0 {
            return Err(Error::InvalidConfig("top_k must be at least 1".to_string()));
        }
        if self.shared_vocab.is_empty() {
            return Err(Error::InvalidConfig("shared_vocab is empty".to_string()));
        }
        if let Some((t, p)) = self.shared_vocab.iter().find(|(t, p)| t.is_empty() || p.is_nan() || **p < 0.0) {
            return Err(Error::InvalidConfig(format!("bad shared_vocab entry `{t}` = {p}")));
        }
        let sum: f64 = self.shared_vocab.values().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidConfig(format!("shared_vocab sums to {sum}, expected 1")));
        }
        if self.tags_per_bookmark.is_empty()
            || self.tags_per_bookmark.iter().any(|&(_, w)| !(w >= 0.0 && w.is_finite()))
            || self.tags_per_bookmark.iter().map(|p| p.1).sum::<f64>() <= 0.0
        {
            return Err(Error::InvalidConfig("tags_per_bookmark needs non-negative weights with a positive sum".to_string()));
        }
        if let Some(t) = self.initial_counts.iter().find(|(t, c)| t.is_empty() || **c == 0) {
            return Err(Error::InvalidConfig(format!("initial count for `{}` must be positive", t.0)));
        }
        self.arrival.validate()
    }
}

/// Cumulative tag counts of one URL, seed balls included.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TagCountState {
    counts: BTreeMap<String, u64>,
    total: u64,
    minted: u64,
}

impl TagCountState {
    pub fn new(initial: &BTreeMap<String, u64>) -> Self {
        let counts: BTreeMap<_, _> = initial.iter().filter(|(_, c)| **c > 0).map(|(t, c)| (t.clone(), *c)).collect();
        let total = counts.values().sum();
        TagCountState { counts, total, minted: 0 }
    }

    pub fn count(&self, tag: &str) -> u64 {
        self.counts.get(tag).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Fresh tags minted so far.
    pub fn minted(&self) -> u64 {
        self.minted
    }

    /// The `k` most used tags, by count descending then tag ascending.
    pub fn top_k(&self, k: usize) -> Vec<(&str, u64)> {
        let mut all: Vec<(&str, u64)> = self.counts.iter().map(|(t, c)| (t.as_str(), *c)).collect();
        all.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        all.truncate(k);
        all
    }

    /// Adds one token per tag of an emitted bookmark.
    pub fn record(&mut self, selection: &Selection) {
        for t in &selection.tags {
            *self.counts.entry(t.clone()).or_insert(0) += 1;
            self.total += 1;
        }
        self.minted = selection.next_mint;
    }
}

/// Outcome of [`select_tags`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    pub tags: Vec<String>,
    next_mint: u64,
}

enum Source {
    Fresh,
    Imitation,
    Background,
}

/// Chooses the ordered tag list for the next bookmark given the URL's state.
///
/// Randomness per bookmark: one `u64` for the slot count, then per attempt
/// one `u64` for the source and, unless a fresh tag is minted, one `u64` for
/// the tag itself.
pub fn select_tags<R: RngCore + ?Sized>(state: &TagCountState, config: &SimConfig, rng: &mut R) -> Selection {
    let weights: Vec<f64> = config.tags_per_bookmark.iter().map(|p| p.1).collect();
    let slots = rng::weighted_index_f64(rng, &weights).map_or(0, |i| config.tags_per_bookmark[i].0);

    let top = state.top_k(config.top_k);
    let top_weights: Vec<u64> = top.iter().map(|t| t.1).collect();
    let vocab: Vec<(&String, f64)> = config.shared_vocab.iter().map(|(t, p)| (t, *p)).collect();
    let vocab_weights: Vec<f64> = vocab.iter().map(|v| v.1).collect();

    let mut next_mint = state.minted;
    let mut chosen: Vec<String> = Vec::with_capacity(slots);
    for _ in 0..slots {
        for _ in 0..MAX_SLOT_ATTEMPTS {
            let u = rng::uniform(rng);
            let source = if u < config.innovation_prob {
                Source::Fresh
            } else if config.innovation_prob < 1.0
                && (u - config.innovation_prob) / (1.0 - config.innovation_prob) < config.imitation_prob
                && !top.is_empty()
            {
                Source::Imitation
            } else {
                Source::Background
            };
            let candidate = match source {
                Source::Fresh => {
                    let tag = loop {
                        let name = format!("g{next_mint}");
                        next_mint += 1;
                        if !config.shared_vocab.contains_key(&name) && state.count(&name) == 0 {
                            break name;
                        }
                    };
                    tag
                }
                Source::Imitation => {
                    let i = rng::weighted_index(rng, &top_weights).expect("top tags have positive counts");
                    top[i].0.to_string()
                }
                Source::Background => match rng::weighted_index_f64(rng, &vocab_weights) {
                    Some(i) => vocab[i].0.clone(),
                    None => continue,
                },
            };
            if !chosen.contains(&candidate) {
                chosen.push(candidate);
                break;
            }
        }
    }
    // general tags first: stable sort keeps draw order among equal counts
    chosen.sort_by_key(|t| core::cmp::Reverse(state.count(t)));
    Selection { tags: chosen, next_mint }
}

/// One synthetic URL history with user ids `u1, u2, ...`.
pub fn simulate_url_stream(config: &SimConfig, url: &str, seed: Seed) -> Result<UrlHistory> {
    simulate_url_stream_with_state(config, url, seed).map(|(h, _)| h)
}

/// [`simulate_url_stream`] plus the final tag-count state (seed balls included).
pub fn simulate_url_stream_with_state(config: &SimConfig, url: &str, seed: Seed) -> Result<(UrlHistory, TagCountState)> {
    config.validate()?;
    if config.total_bookmarks == 0 {
        return Err(Error::InvalidConfig("total_bookmarks must be at least 1".to_string()));
    }
    let times = arrival_times(&config.arrival, config.total_bookmarks, config.origin, &mut seed.rng(STREAM_ARRIVALS))?;
    let mut rng = seed.rng(STREAM_TAGS);
    let mut state = TagCountState::new(&config.initial_counts);
    let mut entries = Vec::with_capacity(times.len());
    for (i, ts) in times.into_iter().enumerate() {
        let selection = select_tags(&state, config, &mut rng);
        debug_assert!(selection.tags.windows(2).all(|w| state.count(&w[0]) >= state.count(&w[1])));
        state.record(&selection);
        entries.push(Bookmark::new(format!("u{}", i + 1), url, ts, selection.tags)?);
    }
    Ok((History::new(url, entries)?, state))
}
