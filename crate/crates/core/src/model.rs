//! Bookmarks, per-key histories and the indexed dataset.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result};

pub const SECONDS_PER_DAY: i64 = 86_400;

/// Seconds since the Unix epoch, UTC.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Timestamp(pub i64);

impl Timestamp {
    pub const fn seconds(self) -> i64 {
        self.0
    }

    /// Whole elapsed days from `origin` to `self` (floored).
    pub fn days_since(self, origin: Timestamp) -> i64 {
        (self.0 - origin.0).div_euclid(SECONDS_PER_DAY)
    }

    /// UTC calendar day number (days since 1970-01-01).
    pub fn utc_day(self) -> i64 {
        self.0.div_euclid(SECONDS_PER_DAY)
    }

    pub fn plus_seconds(self, secs: i64) -> Timestamp {
        Timestamp(self.0 + secs)
    }
}

/// One tagging event. Tags keep entry order and are unique within the bookmark.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bookmark {
    user: String,
    url: String,
    timestamp: Timestamp,
    tags: Vec<String>,
}

impl Bookmark {
    pub fn new(
        user: impl Into<String>,
        url: impl Into<String>,
        timestamp: Timestamp,
        tags: Vec<String>,
    ) -> Result<Self> {
        let user = user.into();
        let url = url.into();
        if user.is_empty() {
            return Err(Error::InvalidBookmark(String::from("empty user")));
        }
        if url.is_empty() {
            return Err(Error::InvalidBookmark(String::from("empty url")));
        }
        let mut seen = BTreeSet::new();
        for tag in &tags {
            if tag.is_empty() {
                return Err(Error::InvalidBookmark(format!("empty tag in bookmark of {url}")));
            }
            if !seen.insert(tag.as_str()) {
                return Err(Error::InvalidBookmark(format!(
                    "duplicate tag `{tag}` in bookmark of {url} by {user}"
                )));
            }
        }
        Ok(Bookmark { user, url, timestamp, tags })
    }

    pub fn user(&self) -> &str {
        &self.user
    }

    pub fn url(&self) -> &str {
        &self.url
    }

    pub fn timestamp(&self) -> Timestamp {
        self.timestamp
    }

    pub fn tags(&self) -> &[String] {
        &self.tags
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

/// Time-ordered bookmarks sharing one key (a URL or a user).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct History {
    key: String,
    entries: Vec<Bookmark>,
}

pub type UrlHistory = History;
pub type UserHistory = History;

impl History {
    pub fn new(key: impl Into<String>, entries: Vec<Bookmark>) -> Result<Self> {
        let key = key.into();
        if let Some(index) = entries
            .windows(2)
            .position(|w| w[1].timestamp < w[0].timestamp)
        {
            return Err(Error::UnorderedHistory { key, index: index + 1 });
        }
        Ok(History { key, entries })
    }

    pub fn key(&self) -> &str {
        &self.key
    }

    pub fn entries(&self) -> &[Bookmark] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn into_entries(self) -> Vec<Bookmark> {
        self.entries
    }
}

/// Bookmarks in global `(timestamp, input position)` order, indexed by URL and user.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Dataset {
    bookmarks: Vec<Bookmark>,
    by_url: BTreeMap<String, UrlHistory>,
    by_user: BTreeMap<String, UserHistory>,
}

impl Dataset {
    pub fn bookmarks(&self) -> &[Bookmark] {
        &self.bookmarks
    }

    pub fn by_url(&self) -> &BTreeMap<String, UrlHistory> {
        &self.by_url
    }

    pub fn by_user(&self) -> &BTreeMap<String, UserHistory> {
        &self.by_user
    }

    pub fn url(&self, url: &str) -> Option<&UrlHistory> {
        self.by_url.get(url)
    }

    pub fn user(&self, user: &str) -> Option<&UserHistory> {
        self.by_user.get(user)
    }

    pub fn len(&self) -> usize {
        self.bookmarks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bookmarks.is_empty()
    }
}

/// Sorts stably by timestamp and builds the per-URL and per-user histories.
///
/// Bookmarks are validated on construction, so indexing cannot fail.
pub fn build_dataset(mut bookmarks: Vec<Bookmark>) -> Dataset {
    bookmarks.sort_by_key(|b| b.timestamp);
    let mut by_url: BTreeMap<String, Vec<Bookmark>> = BTreeMap::new();
    let mut by_user: BTreeMap<String, Vec<Bookmark>> = BTreeMap::new();
    for b in &bookmarks {
        by_url.entry(b.url.clone()).or_default().push(b.clone());
        by_user.entry(b.user.clone()).or_default().push(b.clone());
    }
    let wrap = |m: BTreeMap<String, Vec<Bookmark>>| {
        m.into_iter()
            .map(|(k, entries)| (k.clone(), History { key: k, entries }))
            .collect()
    };
    Dataset {
        by_url: wrap(by_url),
        by_user: wrap(by_user),
        bookmarks,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryMode {
    /// Intersection: every query tag must be present.
    All,
    /// Union: at least one query tag must be present.
    Any,
}

/// Tag query over the dataset, in dataset order.
pub fn query_bookmarks<'a, S: AsRef<str>>(
    dataset: &'a Dataset,
    tags: &[S],
    mode: QueryMode,
) -> Result<Vec<&'a Bookmark>> {
    if tags.is_empty() {
        return Err(Error::InvalidArgument(String::from("empty tag set")));
    }
    let matches = |b: &Bookmark| match mode {
        QueryMode::All => tags.iter().all(|t| b.has_tag(t.as_ref())),
        QueryMode::Any => tags.iter().any(|t| b.has_tag(t.as_ref())),
    };
    Ok(dataset.bookmarks.iter().filter(|b| matches(b)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn bm(user: &str, url: &str, ts: i64, tags: &[&str]) -> Bookmark {
        Bookmark::new(user, url, Timestamp(ts), tags.iter().map(|t| t.to_string()).collect()).unwrap()
    }

    #[test]
    fn rejects_duplicate_and_empty_tags() {
        let dup = Bookmark::new("u", "http://a", Timestamp(0), vec!["a".into(), "a".into()]);
        assert!(matches!(dup, Err(Error::InvalidBookmark(m)) if m.contains("duplicate tag `a`")));
        let empty = Bookmark::new("u", "http://a", Timestamp(0), vec!["".into()]);
        assert!(empty.is_err());
        assert!(Bookmark::new("u", "", Timestamp(0), vec![]).is_err());
    }

    #[test]
    fn empty_dataset() {
        let ds = build_dataset(vec![]);
        assert!(ds.is_empty());
        assert!(ds.by_url().is_empty());
        assert!(ds.by_user().is_empty());
    }

    #[test]
    fn equal_timestamps_keep_input_order() {
        let ds = build_dataset(vec![bm("u1", "x", 5, &["a"]), bm("u2", "x", 5, &["b"]), bm("u3", "x", 1, &[])]);
        let users: Vec<_> = ds.bookmarks().iter().map(|b| b.user()).collect();
        assert_eq!(users, ["u3", "u1", "u2"]);
        let hist: Vec<_> = ds.url("x").unwrap().entries().iter().map(|b| b.user()).collect();
        assert_eq!(hist, ["u3", "u1", "u2"]);
    }

    #[test]
    fn three_bookmarks_two_urls() {
        let ds = build_dataset(vec![bm("u1", "x", 1, &[]), bm("u1", "y", 2, &[]), bm("u2", "x", 3, &[])]);
        assert_eq!(ds.by_url().len(), 2);
        assert_eq!(ds.by_url().values().map(History::len).sum::<usize>(), 3);
    }

    #[test]
    fn history_rejects_unordered() {
        let err = History::new("x", vec![bm("u", "x", 5, &[]), bm("u", "x", 4, &[])]).unwrap_err();
        assert_eq!(err, Error::UnorderedHistory { key: "x".into(), index: 1 });
    }

    #[test]
    fn venn_query() {
        let ds = build_dataset(vec![bm("u1", "b1", 1, &["cats"]), bm("u2", "b2", 2, &["cats", "africa"])]);
        let urls = |v: Vec<&Bookmark>| v.iter().map(|b| b.url().to_string()).collect::<Vec<_>>();
        assert_eq!(urls(query_bookmarks(&ds, &["cats", "africa"], QueryMode::All).unwrap()), ["b2"]);
        assert_eq!(urls(query_bookmarks(&ds, &["cats", "africa"], QueryMode::Any).unwrap()), ["b1", "b2"]);
        assert!(query_bookmarks(&ds, &["cheetah"], QueryMode::All).unwrap().is_empty());
        let none: [&str; 0] = [];
        assert!(matches!(query_bookmarks(&ds, &none, QueryMode::Any), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn day_arithmetic() {
        assert_eq!(Timestamp(86_399).days_since(Timestamp(0)), 0);
        assert_eq!(Timestamp(86_400).days_since(Timestamp(0)), 1);
        assert_eq!(Timestamp(-1).utc_day(), -1);
    }

    fn arb_bookmarks() -> impl Strategy<Value = Vec<Bookmark>> {
        prop::collection::vec(
            (0u8..4, 0u8..5, 0i64..50, prop::collection::btree_set(0u8..6, 0..4)),
            0..40,
        )
        .prop_map(|rows| {
            rows.into_iter()
                .map(|(u, url, ts, tags)| {
                    Bookmark::new(
                        format!("u{u}"),
                        format!("http://{url}"),
                        Timestamp(ts),
                        tags.into_iter().map(|t| format!("t{t}")).collect(),
                    )
                    .unwrap()
                })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn partition_and_order(bookmarks in arb_bookmarks()) {
            let n = bookmarks.len();
            let ds = build_dataset(bookmarks);
            prop_assert_eq!(ds.len(), n);
            prop_assert_eq!(ds.by_url().values().map(History::len).sum::<usize>(), n);
            prop_assert_eq!(ds.by_user().values().map(History::len).sum::<usize>(), n);
            for h in ds.by_url().values() {
                let restricted: Vec<_> = ds.bookmarks().iter().filter(|b| b.url() == h.key()).collect();
                prop_assert_eq!(restricted, h.entries().iter().collect::<Vec<_>>());
            }
            for h in ds.by_user().values() {
                prop_assert!(h.entries().windows(2).all(|w| w[0].timestamp() <= w[1].timestamp()));
            }
        }

        #[test]
        fn intersection_within_union(bookmarks in arb_bookmarks(), q in prop::collection::btree_set(0u8..6, 1..3)) {
            let ds = build_dataset(bookmarks);
            let q: Vec<String> = q.into_iter().map(|t| format!("t{t}")).collect();
            let all = query_bookmarks(&ds, &q, QueryMode::All).unwrap();
            let any = query_bookmarks(&ds, &q, QueryMode::Any).unwrap();
            for b in all {
                prop_assert!(any.iter().any(|a| core::ptr::eq(*a, b)));
            }
        }
    }
}
