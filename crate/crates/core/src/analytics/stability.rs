use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::format;
use alloc::vec::Vec;

use crate::proportion::ProportionTrajectory;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    /// First bookmark index (1-based) whose window is stable.
    pub stabilization_index: Option<usize>,
    pub epsilon: f64,
    pub window: usize,
    pub trajectory_len: usize,
    pub final_proportions: BTreeMap<String, f64>,
}

/// Finds the smallest `t` such that, over bookmark indices
/// `t..t + window - 1`, every tag's cumulative proportion varies by at most
/// `epsilon`. A tag not yet seen counts as proportion 0.
pub fn detect_stabilization(trajectory: &ProportionTrajectory, epsilon: f64, window: usize) -> Result<StabilityReport> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidArgument(format!("epsilon must be positive, got {epsilon}")));
    }
    if window < 2 {
        return Err(Error::InvalidArgument(format!("window must be at least 2, got {window}")));
    }
    if trajectory.len() < window {
        return Err(Error::InsufficientData { needed: window, got: trajectory.len() });
    }
    let ranges = max_window_range(trajectory, window);
    let stabilization_index = ranges.iter().position(|&r| r <= epsilon).map(|i| i + 1);
    let final_proportions = trajectory
        .last()
        .map(|v| v.fractions().map(|(t, f)| (t.to_string(), f)).collect())
        .unwrap_or_default();
    Ok(StabilityReport {
        stabilization_index,
        epsilon,
        window,
        trajectory_len: trajectory.len(),
        final_proportions,
    })
}

/// For each window start `t = 1..=T - window + 1` (element `t - 1`), the
/// largest per-tag proportion range within the window.
pub fn max_window_range(trajectory: &ProportionTrajectory, window: usize) -> Vec<f64> {
    let n = trajectory.len();
    if window == 0 || n < window {
        return Vec::new();
    }
    let starts = n - window + 1;
    let mut worst = alloc::vec![0.0f64; starts];
    let tags: Vec<&String> = trajectory.last().map(|v| v.counts().keys().collect()).unwrap_or_default();
    for tag in tags {
        let series: Vec<f64> = trajectory.steps().iter().map(|v| v.fraction(tag)).collect();
        let mut hi: VecDeque<usize> = VecDeque::new();
        let mut lo: VecDeque<usize> = VecDeque::new();
        for (i, &x) in series.iter().enumerate() {
            while hi.back().is_some_and(|&j| series[j] <= x) {
                hi.pop_back();
            }
            hi.push_back(i);
            while lo.back().is_some_and(|&j| series[j] >= x) {
                lo.pop_back();
            }
            lo.push_back(i);
            if i + 1 >= window {
                let start = i + 1 - window;
                while hi.front().is_some_and(|&j| j < start) {
                    hi.pop_front();
                }
                while lo.front().is_some_and(|&j| j < start) {
                    lo.pop_front();
                }
                let range = series[hi[0]] - series[lo[0]];
                if range > worst[start] {
                    worst[start] = range;
                }
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proportion::ProportionVector;
    use alloc::vec;
    use proptest::prelude::*;

    /// Two-tag trajectory with exact fractions `a / 1000` for tag `a`.
    fn two_tag(fractions: &[f64]) -> ProportionTrajectory {
        ProportionTrajectory::new(
            fractions
                .iter()
                .map(|&f| {
                    let a = (f * 1000.0).round() as u64;
                    let mut m = BTreeMap::new();
                    m.insert("a".to_string(), a);
                    m.insert("b".to_string(), 1000 - a);
                    ProportionVector::from_counts(m)
                })
                .collect(),
        )
    }

    // Brute-force reference: check every window directly.
    fn brute(traj: &ProportionTrajectory, eps: f64, window: usize) -> Option<usize> {
        let tags: Vec<String> = traj.last().unwrap().counts().keys().cloned().collect();
        (1..=traj.len() + 1 - window).find(|&t| {
            tags.iter().all(|tag| {
                let xs: Vec<f64> = (t..t + window).map(|i| traj.at(i).unwrap().fraction(tag)).collect();
                let hi = xs.iter().cloned().fold(f64::MIN, f64::max);
                let lo = xs.iter().cloned().fold(f64::MAX, f64::min);
                hi - lo <= eps
            })
        })
    }

    #[test]
    fn constant_is_stable_at_one() {
        let r = detect_stabilization(&two_tag(&[0.3; 30]), 0.05, 10).unwrap();
        assert_eq!(r.stabilization_index, Some(1));
        assert_eq!(r.final_proportions["a"], 0.3);
    }

    #[test]
    fn alternating_never_stabilizes() {
        let eps = 0.05;
        let xs: Vec<f64> = (0..200).map(|i| if i % 2 == 0 { 0.4 } else { 0.4 + 2.0 * eps }).collect();
        assert_eq!(detect_stabilization(&two_tag(&xs), eps, 20).unwrap().stabilization_index, None);
    }

    #[test]
    fn settles_at_fifty() {
        // swings of 0.2 up to index 49, then within +-0.01 (< eps/2) from 50 on
        let xs: Vec<f64> = (1..=200)
            .map(|t| {
                if t < 50 {
                    if t % 2 == 0 { 0.3 } else { 0.5 }
                } else {
                    0.4 + if t % 2 == 0 { 0.01 } else { -0.01 }
                }
            })
            .collect();
        let idx = detect_stabilization(&two_tag(&xs), 0.05, 20).unwrap().stabilization_index.unwrap();
        assert!((50..=55).contains(&idx), "{idx}");
    }

    #[test]
    fn argument_errors() {
        let t = two_tag(&[0.5; 5]);
        assert!(detect_stabilization(&t, 0.0, 2).is_err());
        assert!(detect_stabilization(&t, 0.1, 1).is_err());
        assert_eq!(detect_stabilization(&t, 0.1, 6), Err(Error::InsufficientData { needed: 6, got: 5 }));
    }

    #[test]
    fn late_tag_counts_as_zero_before_it_appears() {
        let mut steps = vec![];
        for t in 1..=12u64 {
            let mut m = BTreeMap::new();
            m.insert("a".to_string(), 10);
            if t > 5 {
                m.insert("z".to_string(), 10);
            }
            steps.push(ProportionVector::from_counts(m));
        }
        let traj = ProportionTrajectory::new(steps);
        assert_eq!(detect_stabilization(&traj, 0.1, 6).unwrap().stabilization_index, Some(6));
    }

    proptest! {
        #[test]
        fn sliding_matches_brute_force_and_is_monotone(
            xs in prop::collection::vec(0u16..=1000, 6..80),
            window in 2usize..6,
            eps in 1u16..300,
        ) {
            let fr: Vec<f64> = xs.iter().map(|&x| x as f64 / 1000.0).collect();
            let traj = two_tag(&fr);
            let eps = eps as f64 / 1000.0;
            let got = detect_stabilization(&traj, eps, window).unwrap().stabilization_index;
            prop_assert_eq!(got, brute(&traj, eps, window));
            let tighter = detect_stabilization(&traj, eps / 2.0, window).unwrap().stabilization_index;
            match (got, tighter) {
                (None, t) => prop_assert!(t.is_none()),
                (Some(a), Some(b)) => prop_assert!(b >= a),
                (Some(_), None) => {}
            }
            if let Some(t) = got {
                prop_assert!(t + window - 1 <= traj.len());
            }
        }
    }
}
