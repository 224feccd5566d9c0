//! Analysis battery over bookmark datasets and simulated streams.

mod activity;
mod growth;
mod kinds;
mod ks;
mod peaks;
mod positions;
mod regression;
mod stability;

pub use activity::{user_activity_stats, ActivityStats, UserActivity};
pub use growth::{distinct_tag_growth, tag_growth_curve, user_tag_counts};
pub use kinds::{classify_tag_kind, Lexicons, TagKind};
pub use ks::{ks_critical_coefficient, ks_statistic, KsResult};
pub use peaks::{classify_peak_buckets, detect_peak, BucketShare, PeakBucket, PeakReport};
pub use positions::{position_rank_analysis, tag_ranks, PositionRank, PositionRankReport};
pub use regression::{ols_r2, OlsFit};
pub use stability::{detect_stabilization, max_window_range, StabilityReport};

/// Lower median of a non-empty slice (sorted copy).
pub(crate) fn lower_median<T: Ord + Copy>(values: &[T]) -> Option<T> {
    if values.is_empty() {
        return None;
    }
    let mut v = alloc::vec::Vec::from(values);
    v.sort_unstable();
    Some(v[(v.len() - 1) / 2])
}
