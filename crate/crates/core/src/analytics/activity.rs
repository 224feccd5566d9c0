use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use super::regression::{ols_r2, OlsFit};
use crate::model::{Dataset, Timestamp};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UserActivity {
    pub user: String,
    /// UTC calendar days from the user's first bookmark to `as_of`. Signup
    /// time is not in bookmark logs, so this underestimates true account age.
    pub account_age_days: u64,
    /// Distinct UTC days with at least one bookmark.
    pub active_days: u64,
    pub bookmark_count: u64,
    pub distinct_tag_count: u64,
    pub tag_tokens: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ActivityStats {
    pub as_of: Timestamp,
    pub users: Vec<UserActivity>,
    /// Account age (x) against active days (y).
    pub age_vs_active_days: Result<OlsFit>,
    /// Bookmark count (x) against distinct tags (y).
    pub bookmarks_vs_distinct_tags: Result<OlsFit>,
}

/// Per-user activity tuples and the two activity regressions. Bookmarks
/// after `as_of` are ignored.
pub fn user_activity_stats(dataset: &Dataset, as_of: Timestamp) -> Result<ActivityStats> {
    if dataset.is_empty() {
        return Err(Error::EmptyInput("dataset"));
    }
    let as_of_day = as_of.utc_day();
    let mut users = Vec::new();
    for (user, history) in dataset.by_user() {
        let entries: Vec<_> = history.entries().iter().filter(|b| b.timestamp() <= as_of).collect();
        let Some(first) = entries.first() else { continue };
        let days: BTreeSet<i64> = entries.iter().map(|b| b.timestamp().utc_day()).collect();
        let tags: BTreeSet<&str> = entries.iter().flat_map(|b| b.tags().iter().map(String::as_str)).collect();
        users.push(UserActivity {
            user: user.clone(),
            account_age_days: (as_of_day - first.timestamp().utc_day()) as u64,
            active_days: days.len() as u64,
            bookmark_count: entries.len() as u64,
            distinct_tag_count: tags.len() as u64,
            tag_tokens: entries.iter().map(|b| b.tags().len() as u64).sum(),
        });
    }
    let fit = |x: fn(&UserActivity) -> u64, y: fn(&UserActivity) -> u64| {
        if users.len() < 3 {
            return Err(Error::InsufficientData { needed: 3, got: users.len() });
        }
        let xs: Vec<f64> = users.iter().map(|u| x(u) as f64).collect();
        let ys: Vec<f64> = users.iter().map(|u| y(u) as f64).collect();
        ols_r2(&xs, &ys)
    };
    let age_vs_active_days = fit(|u| u.account_age_days, |u| u.active_days);
    let bookmarks_vs_distinct_tags = fit(|u| u.bookmark_count, |u| u.distinct_tag_count);
    Ok(ActivityStats { as_of, users, age_vs_active_days, bookmarks_vs_distinct_tags })
}
