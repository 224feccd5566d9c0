//! TOML run configuration.
//!
//! ```toml
//! seed = 7
//! urls = 1
//! normalize_case = false
//! strict = false
//!
//! [sim]
//! imitation_prob = 0.8
//! top_k = 5
//! innovation_prob = 0.0
//! total_bookmarks = 2000
//! tags_per_bookmark = [[1, 1.0], [2, 1.0], [3, 1.0]]
//! origin = "2005-01-01T00:00:00Z"
//! shared_vocab = { tag1 = 0.2, tag2 = 0.2, tag3 = 0.2, tag4 = 0.2, tag5 = 0.2 }
//!
//! [sim.arrival]
//! segments = [[1.0, 10.0]]
//! burst = { start_day = 200.0, multiplier = 20.0, duration_days = 5.0 }
//!
//! [analysis]
//! epsilon = 0.05
//! window = 100
//! alpha = 0.01
//! ```
//!
//! Every key is optional; unknown keys are rejected.

use std::collections::BTreeMap;
use std::path::Path;

use folkdyn_core::tagsim::{ArrivalSchedule, Burst, SimConfig};
use serde::Deserialize;

use crate::logfile::parse_timestamp;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub seed: u64,
    /// Number of independent URL streams `simulate` writes.
    pub urls: usize,
    pub normalize_case: bool,
    pub strict: bool,
    pub sim: SimSection,
    pub analysis: AnalysisParams,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            urls: 1,
            normalize_case: false,
            strict: false,
            sim: SimSection::default(),
            analysis: AnalysisParams::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SimSection {
    pub imitation_prob: f64,
    pub top_k: usize,
    pub shared_vocab: BTreeMap<String, f64>,
    pub innovation_prob: f64,
    pub tags_per_bookmark: Vec<(usize, f64)>,
    pub total_bookmarks: usize,
    pub initial_counts: BTreeMap<String, u64>,
    pub origin: String,
    pub arrival: ArrivalSection,
}

impl Default for SimSection {
    fn default() -> Self {
        let d = SimConfig::default();
        SimSection {
            imitation_prob: d.imitation_prob,
            top_k: d.top_k,
            shared_vocab: d.shared_vocab,
            innovation_prob: d.innovation_prob,
            tags_per_bookmark: d.tags_per_bookmark,
            total_bookmarks: d.total_bookmarks,
            initial_counts: d.initial_counts,
            origin: crate::logfile::format_timestamp(d.origin),
            arrival: ArrivalSection { segments: d.arrival.segments, burst: None },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrivalSection {
    pub segments: Vec<(f64, f64)>,
    #[serde(default)]
    pub burst: Option<BurstSection>,
}

impl Default for ArrivalSection {
    fn default() -> Self {
        SimSection::default().arrival
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BurstSection {
    pub start_day: f64,
    pub multiplier: f64,
    pub duration_days: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AnalysisParams {
    pub epsilon: f64,
    pub window: usize,
    pub alpha: f64,
}

impl Default for AnalysisParams {
    fn default() -> Self {
        AnalysisParams { epsilon: 0.05, window: 100, alpha: 0.01 }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(format!("reading {}", path.display()), e))?;
        Self::from_toml(&text)
    }

    pub fn sim_config(&self) -> Result<SimConfig> {
        let s = &self.sim;
        let origin = parse_timestamp(&s.origin).map_err(Error::Config)?;
        let cfg = SimConfig {
            imitation_prob: s.imitation_prob,
            top_k: s.top_k,
            shared_vocab: s.shared_vocab.clone(),
            innovation_prob: s.innovation_prob,
            tags_per_bookmark: s.tags_per_bookmark.clone(),
            total_bookmarks: s.total_bookmarks,
            arrival: ArrivalSchedule {
                segments: s.arrival.segments.clone(),
                burst: s.arrival.burst.map(|b| Burst {
                    start_day: b.start_day,
                    multiplier: b.multiplier,
                    duration_days: b.duration_days,
                }),
            },
            initial_counts: s.initial_counts.clone(),
            origin,
        };
        cfg.validate().map_err(|e| Error::Config(e.to_string()))?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.urls == 0 {
            return Err(Error::Config("urls must be at least 1".into()));
        }
        if self.sim.total_bookmarks == 0 {
            return Err(Error::Config("sim.total_bookmarks must be at least 1".into()));
        }
        let a = &self.analysis;
        if a.epsilon.is_nan() || a.epsilon <= 0.0 {
            return Err(Error::Config(format!("analysis.epsilon must be positive, got {}", a.epsilon)));
        }
        if a.window < 2 {
            return Err(Error::Config(format!("analysis.window must be at least 2, got {}", a.window)));
        }
        if !(a.alpha > 0.0 && a.alpha < 1.0) {
            return Err(Error::Config(format!("analysis.alpha must be in (0, 1), got {}", a.alpha)));
        }
        self.sim_config().map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_is_default() {
        let cfg = RunConfig::from_toml("").unwrap();
        assert_eq!(cfg, RunConfig::default());
        assert_eq!(cfg.sim_config().unwrap(), SimConfig::default());
    }

    #[test]
    fn full_example_parses() {
        let text = r#"
seed = 7
urls = 3
[sim]
imitation_prob = 0.5
top_k = 3
total_bookmarks = 50
tags_per_bookmark = [[1, 2.0], [2, 1.0]]
shared_vocab = { a = 0.5, b = 0.5 }
[sim.arrival]
segments = [[10.0, 0.2]]
burst = { start_day = 200.0, multiplier = 20.0, duration_days = 5.0 }
[analysis]
epsilon = 0.1
window = 20
"#;
        let cfg = RunConfig::from_toml(text).unwrap();
        assert_eq!((cfg.seed, cfg.urls), (7, 3));
        let sim = cfg.sim_config().unwrap();
        assert_eq!(sim.top_k, 3);
        assert_eq!(sim.arrival.burst.unwrap().multiplier, 20.0);
        assert_eq!(cfg.analysis.window, 20);
        assert_eq!(cfg.analysis.alpha, 0.01);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_values() {
        for text in [
            "sede = 1",
            "[sim]\nimitation = 0.5",
            "[sim]\nimitation_prob = 1.5",
            "[sim]\nshared_vocab = { a = 0.7 }",
            "[analysis]\nepsilon = 0.0",
            "[sim.arrival]\nsegments = [[1.0, 0.0]]",
            "urls = 0",
        ] {
            assert!(matches!(RunConfig::from_toml(text), Err(Error::Config(_))), "{text}");
        }
    }
}
