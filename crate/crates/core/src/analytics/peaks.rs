use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{Dataset, UrlHistory};
use crate::{Error, Result};

/// Six months, in days.
pub const SIX_MONTHS_DAYS: u64 = 183;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PeakBucket {
    /// Peak on day 0.
    FirstDay,
    /// Peak on days 1 through 9.
    Within10Days,
    /// Peak on day 183 or later.
    After6Months,
    /// Peak on days 10 through 182.
    Other,
}

impl PeakBucket {
    pub const ALL: [PeakBucket; 4] = [
        PeakBucket::FirstDay,
        PeakBucket::Within10Days,
        PeakBucket::After6Months,
        PeakBucket::Other,
    ];

    pub fn for_day(day: u64) -> Self {
        match day {
            0 => PeakBucket::FirstDay,
            1..=9 => PeakBucket::Within10Days,
            d if d >= SIX_MONTHS_DAYS => PeakBucket::After6Months,
            _ => PeakBucket::Other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PeakBucket::FirstDay => "FIRST_DAY",
            PeakBucket::Within10Days => "WITHIN_10_DAYS",
            PeakBucket::After6Months => "AFTER_6_MONTHS",
            PeakBucket::Other => "OTHER",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        PeakBucket::ALL.into_iter().find(|b| b.as_str() == s)
    }
}

impl fmt::Display for PeakBucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakReport {
    /// Whole days since the first bookmark.
    pub peak_day: u64,
    pub bucket: PeakBucket,
    /// Bookmarks per day, index = days since the first bookmark.
    pub daily_counts: Vec<u64>,
}

/// Bins a URL's bookmarks by whole elapsed days since its first bookmark and
/// reports the busiest day (earliest on ties).
pub fn detect_peak(history: &UrlHistory) -> Result<PeakReport> {
    let first = history.entries().first().ok_or(Error::EmptyInput("history"))?.timestamp();
    let last = history.entries().last().expect("non-empty").timestamp();
    let mut daily_counts = vec![0u64; last.days_since(first) as usize + 1];
    for b in history.entries() {
        daily_counts[b.timestamp().days_since(first) as usize] += 1;
    }
    let mut peak_day = 0;
    for (d, &c) in daily_counts.iter().enumerate() {
        if c > daily_counts[peak_day] {
            peak_day = d;
        }
    }
    let peak_day = peak_day as u64;
    Ok(PeakReport { peak_day, bucket: PeakBucket::for_day(peak_day), daily_counts })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BucketShare {
    pub count: usize,
    pub fraction: f64,
}

/// Peak bucket mix over every URL. All four buckets are present in the map.
pub fn classify_peak_buckets(dataset: &Dataset) -> Result<BTreeMap<PeakBucket, BucketShare>> {
    if dataset.is_empty() {
        return Err(Error::EmptyInput("dataset"));
    }
    let mut counts: BTreeMap<PeakBucket, usize> = PeakBucket::ALL.into_iter().map(|b| (b, 0)).collect();
    for h in dataset.by_url().values() {
        *counts.get_mut(&detect_peak(h)?.bucket).expect("all buckets present") += 1;
    }
    let n = dataset.by_url().len() as f64;
    Ok(counts
        .into_iter()
        .map(|(b, count)| (b, BucketShare { count, fraction: count as f64 / n }))
        .collect())
}
