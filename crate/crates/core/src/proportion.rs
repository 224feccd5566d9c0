//! Cumulative tag proportions over a URL's bookmarks.
//!
//! Proportions are token based: every tag occurrence in a bookmark is one
//! token, and a tag's fraction is its token count over all tokens seen so far.
//! Untagged bookmarks add nothing.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::model::UrlHistory;
use crate::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProportionVector {
    counts: BTreeMap<String, u64>,
    token_total: u64,
}

impl ProportionVector {
    pub fn from_counts(counts: BTreeMap<String, u64>) -> Self {
        let counts: BTreeMap<_, _> = counts.into_iter().filter(|(_, c)| *c > 0).collect();
        let token_total = counts.values().sum();
        ProportionVector { counts, token_total }
    }

    pub fn token_total(&self) -> u64 {
        self.token_total
    }

    pub fn counts(&self) -> &BTreeMap<String, u64> {
        &self.counts
    }

    pub fn is_empty(&self) -> bool {
        self.token_total == 0
    }

    /// Fraction of `tag`; 0 for tags not yet seen.
    pub fn fraction(&self, tag: &str) -> f64 {
        match self.counts.get(tag) {
            Some(&c) => c as f64 / self.token_total as f64,
            None => 0.0,
        }
    }

    pub fn fractions(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        let total = self.token_total as f64;
        self.counts.iter().map(move |(t, &c)| (t.as_str(), c as f64 / total))
    }

    fn add_tags<'a>(&mut self, tags: impl IntoIterator<Item = &'a String>) {
        for tag in tags {
            *self.counts.entry(tag.clone()).or_insert(0) += 1;
            self.token_total += 1;
        }
    }
}

/// One cumulative proportion vector per bookmark index `1..=T`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ProportionTrajectory {
    steps: Vec<ProportionVector>,
}

impl ProportionTrajectory {
    pub fn new(steps: Vec<ProportionVector>) -> Self {
        ProportionTrajectory { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Element for bookmark index `t` (1-based).
    pub fn at(&self, t: usize) -> Option<&ProportionVector> {
        t.checked_sub(1).and_then(|i| self.steps.get(i))
    }

    pub fn steps(&self) -> &[ProportionVector] {
        &self.steps
    }

    pub fn last(&self) -> Option<&ProportionVector> {
        self.steps.last()
    }
}

/// Proportions over bookmarks `1..=upto` of `history`.
pub fn tag_proportions(history: &UrlHistory, upto: usize) -> Result<ProportionVector> {
    if upto == 0 || upto > history.len() {
        return Err(Error::OutOfRange { index: upto, len: history.len() });
    }
    let mut v = ProportionVector::default();
    for b in &history.entries()[..upto] {
        v.add_tags(b.tags());
    }
    Ok(v)
}

/// Incremental form of [`tag_proportions`] for every prefix of `history`.
pub fn proportion_trajectory(history: &UrlHistory) -> Result<ProportionTrajectory> {
    if history.is_empty() {
        return Err(Error::EmptyInput("history"));
    }
    let mut current = ProportionVector::default();
    let steps = history
        .entries()
        .iter()
        .map(|b| {
            current.add_tags(b.tags());
            current.clone()
        })
        .collect();
    Ok(ProportionTrajectory { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Bookmark, History, Timestamp};
    use alloc::format;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn history(tags: &[&[&str]]) -> History {
        let entries = tags
            .iter()
            .enumerate()
            .map(|(i, ts)| {
                Bookmark::new(format!("u{i}"), "http://a", Timestamp(i as i64), ts.iter().map(|t| t.to_string()).collect())
                    .unwrap()
            })
            .collect();
        History::new("http://a", entries).unwrap()
    }

    #[test]
    fn direct_count() {
        let v = tag_proportions(&history(&[&["a", "b"], &["a"]]), 2).unwrap();
        assert_eq!(v.token_total(), 3);
        assert_eq!(v.fraction("a"), 2.0 / 3.0);
        assert_eq!(v.fraction("b"), 1.0 / 3.0);
    }

    #[test]
    fn untagged_and_single_tag() {
        let v = tag_proportions(&history(&[&[], &[]]), 2).unwrap();
        assert!(v.is_empty());
        assert_eq!(v.fractions().count(), 0);
        let v = tag_proportions(&history(&[&["a"], &["a"], &["a"]]), 3).unwrap();
        assert_eq!(v.fractions().collect::<Vec<_>>(), vec![("a", 1.0)]);
    }

    #[test]
    fn bounds() {
        let h = history(&[&["a"]]);
        assert_eq!(tag_proportions(&h, 0), Err(Error::OutOfRange { index: 0, len: 1 }));
        assert_eq!(tag_proportions(&h, 2), Err(Error::OutOfRange { index: 2, len: 1 }));
        assert_eq!(proportion_trajectory(&history(&[])), Err(Error::EmptyInput("history")));
    }

    #[test]
    fn two_step_trajectory() {
        let t = proportion_trajectory(&history(&[&["a"], &["b"]])).unwrap();
        assert_eq!(t.at(1).unwrap().fraction("a"), 1.0);
        assert_eq!(t.at(2).unwrap().fraction("a"), 0.5);
        assert_eq!(t.at(2).unwrap().fraction("b"), 0.5);
        assert!(t.at(0).is_none());
    }

    // Independent recount: walk the whole history from scratch with a plain
    // association list.
    fn recount(tags: &[Vec<String>], upto: usize) -> Vec<(String, u64)> {
        let mut acc: Vec<(String, u64)> = Vec::new();
        for b in &tags[..upto] {
            for t in b {
                match acc.iter_mut().find(|(k, _)| k == t) {
                    Some((_, c)) => *c += 1,
                    None => acc.push((t.clone(), 1)),
                }
            }
        }
        acc.sort();
        acc
    }

    #[test]
    fn two_hundred_bookmark_fixture_matches_recount() {
        let tags: Vec<Vec<String>> = (0..200usize)
            .map(|i| {
                let mut v = vec![format!("t{}", i % 7)];
                if i % 3 == 0 {
                    v.push(format!("t{}", (i / 3) % 5 + 7));
                }
                v
            })
            .collect();
        let refs: Vec<Vec<&str>> = tags.iter().map(|v| v.iter().map(String::as_str).collect()).collect();
        let slices: Vec<&[&str]> = refs.iter().map(Vec::as_slice).collect();
        let traj = proportion_trajectory(&history(&slices)).unwrap();
        let last = traj.at(200).unwrap();
        let expected = recount(&tags, 200);
        assert_eq!(last.counts().iter().map(|(k, v)| (k.clone(), *v)).collect::<Vec<_>>(), expected);
        assert_eq!(last.token_total(), expected.iter().map(|(_, c)| c).sum::<u64>());
    }

    proptest! {
        #[test]
        fn incremental_equals_recount(rows in prop::collection::vec(prop::collection::btree_set(0u8..5, 0..4), 1..60)) {
            let tags: Vec<Vec<String>> = rows.iter().map(|s| s.iter().map(|t| format!("t{t}")).collect()).collect();
            let refs: Vec<Vec<&str>> = tags.iter().map(|v| v.iter().map(String::as_str).collect()).collect();
            let slices: Vec<&[&str]> = refs.iter().map(Vec::as_slice).collect();
            let h = history(&slices);
            let traj = proportion_trajectory(&h).unwrap();
            let mut prev_total = 0;
            let mut prev_tags = 0;
            for t in 1..=h.len() {
                let v = traj.at(t).unwrap();
                prop_assert_eq!(v, &tag_proportions(&h, t).unwrap());
                let rc = recount(&tags, t);
                prop_assert_eq!(v.counts().iter().map(|(k, c)| (k.clone(), *c)).collect::<Vec<_>>(), rc);
                if v.token_total() > 0 {
                    let sum: f64 = v.fractions().map(|(_, f)| f).sum();
                    prop_assert!((sum - 1.0).abs() <= 1e-9);
                }
                prop_assert!(v.token_total() >= prev_total);
                prop_assert!(v.counts().len() >= prev_tags);
                prev_total = v.token_total();
                prev_tags = v.counts().len();
            }
        }
    }
}
