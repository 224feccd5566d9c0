use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::model::{Dataset, UserHistory};
use crate::{Error, Result};

/// Element `t` is the number of bookmarks among `1..=t` that carry `tag`.
pub fn tag_growth_curve(history: &UserHistory, tag: &str) -> Result<Vec<u64>> {
    if history.is_empty() {
        return Err(Error::EmptyInput("history"));
    }
    let mut n = 0;
    Ok(history
        .entries()
        .iter()
        .map(|b| {
            n += u64::from(b.has_tag(tag));
            n
        })
        .collect())
}

/// Element `t` is the size of the user's tag vocabulary after `t` bookmarks.
pub fn distinct_tag_growth(history: &UserHistory) -> Vec<u64> {
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    history
        .entries()
        .iter()
        .map(|b| {
            seen.extend(b.tags().iter().map(String::as_str));
            seen.len() as u64
        })
        .collect()
}

/// Tag-list size per user, largest first (ties by user id).
pub fn user_tag_counts(dataset: &Dataset) -> Vec<(String, u64)> {
    let mut out: Vec<(String, u64)> = dataset
        .by_user()
        .iter()
        .map(|(u, h)| {
            let tags: BTreeSet<&str> = h.entries().iter().flat_map(|b| b.tags().iter().map(String::as_str)).collect();
            (u.clone(), tags.len() as u64)
        })
        .collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    out
}
