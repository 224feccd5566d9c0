use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::lower_median;
use crate::model::UrlHistory;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositionRank {
    /// 1-based position of a tag inside its bookmark.
    pub position: usize,
    /// Lower median of the frequency ranks seen at this position (1 = most frequent).
    pub median_rank: usize,
    pub observations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionRankReport {
    pub positions: Vec<PositionRank>,
    pub ranks: BTreeMap<String, usize>,
}

impl PositionRankReport {
    pub fn medians(&self) -> Vec<usize> {
        self.positions.iter().map(|p| p.median_rank).collect()
    }

    /// True when the median rank never decreases with position.
    pub fn is_general_first(&self) -> bool {
        self.positions.windows(2).all(|w| w[0].median_rank <= w[1].median_rank)
    }
}

/// Whole-history tag ranks: descending token count, ties by tag ascending.
pub fn tag_ranks(history: &UrlHistory) -> BTreeMap<String, usize> {
    let mut freq: BTreeMap<&str, u64> = BTreeMap::new();
    for b in history.entries() {
        for t in b.tags() {
            *freq.entry(t.as_str()).or_insert(0) += 1;
        }
    }
    let mut order: Vec<(&str, u64)> = freq.into_iter().collect();
    order.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    order.into_iter().enumerate().map(|(i, (t, _))| (String::from(t), i + 1)).collect()
}

/// Median frequency rank of the tags found at each position within bookmarks.
pub fn position_rank_analysis(history: &UrlHistory) -> Result<PositionRankReport> {
    let ranks = tag_ranks(history);
    if ranks.is_empty() {
        return Err(Error::EmptyInput("no tagged bookmarks"));
    }
    let mut by_position: Vec<Vec<usize>> = Vec::new();
    for b in history.entries() {
        for (i, t) in b.tags().iter().enumerate() {
            if by_position.len() <= i {
                by_position.push(Vec::new());
            }
            by_position[i].push(ranks[t]);
        }
    }
    let positions = by_position
        .iter()
        .enumerate()
        .filter_map(|(i, rs)| {
            lower_median(rs).map(|median_rank| PositionRank { position: i + 1, median_rank, observations: rs.len() })
        })
        .collect();
    Ok(PositionRankReport { positions, ranks })
}
