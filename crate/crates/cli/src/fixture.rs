//! Synthetic bookmark logs with known ground truth.
//!
//! * `popular-mix`: URLs whose popularity peaks are planted in the four peak
//!   buckets in the ratio 37 : 105 : 37 : 33 (first day, days 1-9, after six
//!   months, other), which is 17/50/17/16 for 100 URLs.
//! * `people-mix`: users with planted account age, active days, bookmark
//!   count and vocabulary size; the sidecar carries the planted regression
//!   lines.
//! * `urn-pure`: single-tag pure-imitation streams seeded with one `red` and
//!   one `black` ball, i.e. classic Polya urns.
//!
//! The sidecar is a line-delimited JSON file of [`TruthRecord`]s.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use folkdyn_core::analytics::PeakBucket;
use folkdyn_core::model::SECONDS_PER_DAY;
use folkdyn_core::rng::{below, uniform, ChaCha8Rng, STREAM_LAYOUT, STREAM_TAGS};
use folkdyn_core::tagsim::{select_tags, simulate_url_stream_with_state, SimConfig, TagCountState, DEFAULT_ORIGIN};
use folkdyn_core::{Bookmark, History, Seed, Timestamp};
use serde::{Deserialize, Serialize};

use crate::logfile::{bookmark_log_bytes, format_timestamp};
use crate::{Error, Result};

/// Peak bucket weights out of 212 URLs: first day, days 1-9, after six months, other.
pub const PEAK_MIX: [(PeakBucket, u64); 4] = [
    (PeakBucket::FirstDay, 37),
    (PeakBucket::Within10Days, 105),
    (PeakBucket::After6Months, 37),
    (PeakBucket::Other, 33),
];

/// Longest planted time to peak (about 33 months).
pub const LATEST_PEAK_DAY: u64 = 1004;

/// End of 2005-06-30, the `as_of` instant of `people-mix`.
pub const PEOPLE_AS_OF: Timestamp = Timestamp(12_964 * SECONDS_PER_DAY + SECONDS_PER_DAY - 1);

pub const REGRESSION_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    PopularMix,
    PeopleMix,
    UrnPure,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::PopularMix, Profile::PeopleMix, Profile::UrnPure];

    pub fn name(self) -> &'static str {
        match self {
            Profile::PopularMix => "popular-mix",
            Profile::PeopleMix => "people-mix",
            Profile::UrnPure => "urn-pure",
        }
    }

    /// URLs, users or streams generated when no count is given.
    pub fn default_count(self) -> usize {
        match self {
            Profile::PopularMix => 100,
            Profile::PeopleMix => 229,
            Profile::UrnPure => 50,
        }
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown profile `{s}` (expected popular-mix, people-mix or urn-pure)")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum TruthRecord {
    Profile {
        profile: String,
        seed: u64,
        count: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        as_of: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        steps: Option<u64>,
    },
    Peak {
        url: String,
        peak_day: u64,
        bucket: String,
    },
    BucketMix {
        bucket: String,
        count: usize,
        fraction: f64,
    },
    User {
        user: String,
        account_age_days: u64,
        active_days: u64,
        bookmark_count: u64,
        distinct_tag_count: u64,
    },
    Regression {
        name: String,
        n: usize,
        slope: f64,
        intercept: f64,
        r2: f64,
        tolerance: f64,
    },
    Urn {
        url: String,
        steps: u64,
        initial: BTreeMap<String, u64>,
        final_counts: BTreeMap<String, u64>,
        terminal_fraction: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub bookmarks: Vec<Bookmark>,
    pub truth: Vec<TruthRecord>,
}

impl Fixture {
    pub fn log_bytes(&self) -> Vec<u8> {
        bookmark_log_bytes(&self.bookmarks)
    }

    pub fn truth_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for r in &self.truth {
            out.extend(serde_json::to_vec(r).expect("truth records serialize"));
            out.push(b'\n');
        }
        out
    }
}

pub fn parse_truth(text: &str) -> Result<Vec<TruthRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Parse { line: i + 1, message: e.to_string() }))
        .collect()
}

pub fn generate_fixture(profile: Profile, seed: u64, count: Option<usize>) -> Result<Fixture> {
    let count = count.unwrap_or_else(|| profile.default_count());
    if count == 0 {
        return Err(Error::Usage("fixture count must be at least 1".into()));
    }
    let mut fixture = match profile {
        Profile::PopularMix => popular_mix(seed, count)?,
        Profile::PeopleMix => people_mix(seed, count)?,
        Profile::UrnPure => urn_pure(seed, count, 100)?,
    };
    fixture.bookmarks.sort_by_key(|b| b.timestamp());
    Ok(fixture)
}

/// Largest-remainder apportionment of `n` items to `weights`.
pub fn apportion(n: usize, weights: &[u64]) -> Vec<usize> {
    let total: u64 = weights.iter().sum();
    let mut counts: Vec<usize> = weights.iter().map(|&w| (n as u64 * w / total) as usize).collect();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    // remainder n*w mod total, larger first; earlier bucket wins ties
    order.sort_by_key(|&i| std::cmp::Reverse(n as u64 * weights[i] % total));
    let missing = n - counts.iter().sum::<usize>();
    for &i in order.iter().take(missing) {
        counts[i] += 1;
    }
    counts
}

fn planted_peak_day(bucket: PeakBucket, rng: &mut ChaCha8Rng) -> u64 {
    match bucket {
        PeakBucket::FirstDay => 0,
        PeakBucket::Within10Days => 1 + below(rng, 9),
        PeakBucket::Other => 10 + below(rng, 173),
        PeakBucket::After6Months => 183 + below(rng, LATEST_PEAK_DAY - 183 + 1),
    }
}

/// Bookmarks per day for a URL peaking on `peak_day`. The peak is strict:
/// background days carry at most 2 bookmarks, the post-peak decay at most
/// half the peak, and the peak at least 6.
fn planted_daily_counts(peak_day: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let peak = 6 + below(rng, 10);
    let end = peak_day + 20 + below(rng, 60);
    (0..=end)
        .map(|d| {
            let u = uniform(rng);
            let mut c = if u < 0.03 { 2 } else if u < 0.18 { 1 } else { 0 };
            if d == 0 {
                c = c.max(1);
            }
            if d == peak_day {
                return peak;
            }
            if d > peak_day && d - peak_day <= 5 {
                c = c.max(peak / (d - peak_day + 1));
            }
            c
        })
        .collect()
}

/// Second offsets for `daily` bookmarks; the first bookmark sits at offset 0.
fn day_offsets(daily: &[u64], rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut out = Vec::new();
    for (d, &c) in daily.iter().enumerate() {
        let mut secs: Vec<i64> = (0..c).map(|_| below(rng, SECONDS_PER_DAY as u64) as i64).collect();
        if d == 0 {
            secs[0] = 0;
        }
        secs.sort_unstable();
        out.extend(secs.into_iter().map(|s| d as i64 * SECONDS_PER_DAY + s));
    }
    out
}

fn popular_mix(seed: u64, n: usize) -> Result<Fixture> {
    let weights: Vec<u64> = PEAK_MIX.iter().map(|p| p.1).collect();
    let counts = apportion(n, &weights);
    let mut buckets: Vec<PeakBucket> = PEAK_MIX
        .iter()
        .zip(&counts)
        .flat_map(|(&(b, _), &c)| std::iter::repeat_n(b, c))
        .collect();
    let mut layout = Seed::new(seed).rng(STREAM_LAYOUT);
    for i in (1..buckets.len()).rev() {
        let j = below(&mut layout, i as u64 + 1) as usize;
        buckets.swap(i, j);
    }

    let sim = SimConfig::default();
    let mut bookmarks = Vec::new();
    let mut truth = vec![TruthRecord::Profile {
        profile: Profile::PopularMix.name().into(),
        seed,
        count: n,
        as_of: None,
        steps: None,
    }];
    for (i, &bucket) in buckets.iter().enumerate() {
        let url_seed = Seed::sub_seed(seed, i as u64 + 1);
        let mut rng = url_seed.rng(STREAM_LAYOUT);
        let mut tag_rng = url_seed.rng(STREAM_TAGS);
        let url = format!("http://popular.example/{i:03}");
        let peak_day = planted_peak_day(bucket, &mut rng);
        let daily = planted_daily_counts(peak_day, &mut rng);
        let start = DEFAULT_ORIGIN.plus_seconds(below(&mut rng, 365 * SECONDS_PER_DAY as u64) as i64);
        let mut state = TagCountState::new(&sim.initial_counts);
        for (k, offset) in day_offsets(&daily, &mut rng).into_iter().enumerate() {
            let selection = select_tags(&state, &sim, &mut tag_rng);
            state.record(&selection);
            bookmarks.push(Bookmark::new(format!("p{i:03}-u{}", k + 1), url.as_str(), start.plus_seconds(offset), selection.tags)?);
        }
        truth.push(TruthRecord::Peak { url, peak_day, bucket: bucket.as_str().into() });
    }
    for (&(bucket, _), &count) in PEAK_MIX.iter().zip(&counts) {
        truth.push(TruthRecord::BucketMix { bucket: bucket.as_str().into(), count, fraction: count as f64 / n as f64 });
    }
    Ok(Fixture { bookmarks, truth })
}

/// Symmetric triangular noise on `(-1, 1)`.
fn triangular(rng: &mut ChaCha8Rng) -> f64 {
    uniform(rng) + uniform(rng) - 1.0
}

#[derive(Debug, Clone, Copy)]
struct PlannedUser {
    age: u64,
    active: u64,
    bookmarks: u64,
    tags: u64,
}

/// Least-squares line and r² from exact integer sums (raw-moment form).
fn planted_line(points: &[(u64, u64)]) -> (f64, f64, f64) {
    let n = points.len() as i128;
    let (mut sx, mut sy, mut sxx, mut sxy, mut syy) = (0i128, 0i128, 0i128, 0i128, 0i128);
    for &(x, y) in points {
        let (x, y) = (x as i128, y as i128);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    let cov = n * sxy - sx * sy;
    let vx = n * sxx - sx * sx;
    let vy = n * syy - sy * sy;
    let slope = cov as f64 / vx as f64;
    let intercept = (sy * vx - sx * cov) as f64 / (n * vx) as f64;
    let r2 = (cov as f64 / vx as f64) * (cov as f64 / vy as f64);
    (slope, intercept, r2)
}

fn people_mix(seed: u64, n: usize) -> Result<Fixture> {
    if n < 3 {
        return Err(Error::Usage("people-mix needs at least 3 users".into()));
    }
    let as_of_day = PEOPLE_AS_OF.utc_day();
    let mut bookmarks = Vec::new();
    let mut planned = Vec::with_capacity(n);
    let mut truth = vec![TruthRecord::Profile {
        profile: Profile::PeopleMix.name().into(),
        seed,
        count: n,
        as_of: Some(format_timestamp(PEOPLE_AS_OF)),
        steps: None,
    }];
    for i in 0..n {
        let mut rng = Seed::sub_seed(seed, i as u64 + 1).rng(STREAM_LAYOUT);
        let age = 20 + below(&mut rng, 881);
        let active = (0.25 * age as f64 + 155.0 * triangular(&mut rng)).round().clamp(1.0, (age + 1) as f64) as u64;
        let count = active + below(&mut rng, 2 * active + 1);
        let tags = (10.0 + 0.2 * count as f64 + 125.0 * triangular(&mut rng)).round().clamp(1.0, (3 * count) as f64) as u64;
        let plan = PlannedUser { age, active, bookmarks: count, tags };
        planned.push(plan);

        // active days: the first day plus active-1 distinct days from 1..=age (Floyd)
        let mut days: BTreeSet<u64> = BTreeSet::new();
        for j in (age - (active - 1) + 1)..=age {
            let t = 1 + below(&mut rng, j);
            if !days.insert(t) {
                days.insert(j);
            }
        }
        let mut days: Vec<u64> = std::iter::once(0).chain(days).collect();
        days.sort_unstable();
        let mut per_day = vec![1u64; days.len()];
        for _ in 0..count - active {
            per_day[below(&mut rng, active) as usize] += 1;
        }
        let first_day = as_of_day - age as i64;
        let user = format!("user{i:03}");
        let mut j = 0u64;
        for (&d, &c) in days.iter().zip(&per_day) {
            let mut secs: Vec<i64> = (0..c).map(|_| below(&mut rng, SECONDS_PER_DAY as u64) as i64).collect();
            secs.sort_unstable();
            for s in secs {
                let tag_ids: Vec<u64> = if j < tags {
                    (0..).map(|k| j + k * count).take_while(|&t| t < tags).collect()
                } else {
                    vec![j % tags]
                };
                let ts = Timestamp((first_day + d as i64) * SECONDS_PER_DAY + s);
                bookmarks.push(Bookmark::new(
                    user.as_str(),
                    format!("http://people.example/{user}/{j}"),
                    ts,
                    tag_ids.into_iter().map(|t| format!("t{t}")).collect(),
                )?);
                j += 1;
            }
        }
        truth.push(TruthRecord::User {
            user,
            account_age_days: plan.age,
            active_days: plan.active,
            bookmark_count: plan.bookmarks,
            distinct_tag_count: plan.tags,
        });
    }
    let lines = [
        ("age_vs_active_days", planned.iter().map(|p| (p.age, p.active)).collect::<Vec<_>>()),
        ("bookmarks_vs_distinct_tags", planned.iter().map(|p| (p.bookmarks, p.tags)).collect()),
    ];
    for (name, points) in lines {
        let (slope, intercept, r2) = planted_line(&points);
        truth.push(TruthRecord::Regression {
            name: name.into(),
            n,
            slope,
            intercept,
            r2,
            tolerance: REGRESSION_TOLERANCE,
        });
    }
    Ok(Fixture { bookmarks, truth })
}

fn urn_pure(seed: u64, n: usize, steps: usize) -> Result<Fixture> {
    let cfg = SimConfig::urn_pure(steps);
    let mut bookmarks = Vec::new();
    let mut truth = vec![TruthRecord::Profile {
        profile: Profile::UrnPure.name().into(),
        seed,
        count: n,
        as_of: None,
        steps: Some(steps as u64),
    }];
    for i in 0..n {
        let url = format!("http://urn.example/{i:03}");
        let (history, state) = simulate_url_stream_with_state(&cfg, &url, Seed::sub_seed(seed, i as u64 + 1))?;
        bookmarks.extend(relabel_users(history, &format!("r{i:03}-"))?);
        let red = state.count("red");
        truth.push(TruthRecord::Urn {
            url,
            steps: steps as u64,
            initial: cfg.initial_counts.clone(),
            final_counts: state.counts().clone(),
            terminal_fraction: red as f64 / state.total() as f64,
        });
    }
    Ok(Fixture { bookmarks, truth })
}

/// Prefixes every user id of a simulated history, keeping the bookmarks otherwise intact.
pub fn relabel_users(history: History, prefix: &str) -> Result<Vec<Bookmark>> {
    history
        .into_entries()
        .into_iter()
        .map(|b| Bookmark::new(format!("{prefix}{}", b.user()), b.url(), b.timestamp(), b.tags().to_vec()).map_err(Error::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apportion_hundred() {
        assert_eq!(apportion(100, &[37, 105, 37, 33]), [17, 50, 17, 16]);
        assert_eq!(apportion(212, &[37, 105, 37, 33]), [37, 105, 37, 33]);
        assert_eq!(apportion(1, &[37, 105, 37, 33]), [0, 1, 0, 0]);
    }

    #[test]
    fn planted_line_hand_case() {
        let (s, i, r2) = planted_line(&[(0, 0), (1, 1), (2, 1)]);
        assert!((s - 0.5).abs() < 1e-15);
        assert!((i - 1.0 / 6.0).abs() < 1e-15);
        assert!((r2 - 0.75).abs() < 1e-15);
    }

    #[test]
    fn daily_counts_peak_is_strict() {
        let mut rng = Seed::new(1).rng(STREAM_LAYOUT);
        for peak in [0u64, 3, 50, 400] {
            for _ in 0..50 {
                let daily = planted_daily_counts(peak, &mut rng);
                assert!(daily[0] >= 1);
                let max = daily[peak as usize];
                assert!(daily.iter().enumerate().all(|(d, &c)| d as u64 == peak || c < max));
            }
        }
    }

    #[test]
    fn profiles_parse() {
        for p in Profile::ALL {
            assert_eq!(p.name().parse::<Profile>().unwrap(), p);
        }
        assert!(matches!("nope".parse::<Profile>(), Err(Error::Usage(_))));
    }

    #[test]
    fn deterministic_per_seed() {
        for p in Profile::ALL {
            let a = generate_fixture(p, 3, Some(10)).unwrap();
            let b = generate_fixture(p, 3, Some(10)).unwrap();
            assert_eq!(a.log_bytes(), b.log_bytes());
            assert_eq!(a.truth_bytes(), b.truth_bytes());
            assert_eq!(parse_truth(std::str::from_utf8(&a.truth_bytes()).unwrap()).unwrap(), a.truth);
        }
    }

    #[test]
    fn people_mix_plan_is_consistent() {
        let f = generate_fixture(Profile::PeopleMix, 9, Some(30)).unwrap();
        for r in &f.truth {
            if let TruthRecord::User { account_age_days, active_days, bookmark_count, distinct_tag_count, .. } = r {
                assert!(*active_days <= account_age_days + 1);
                assert!(active_days <= bookmark_count);
                assert!(*distinct_tag_count <= 3 * bookmark_count);
            }
        }
    }
}
