//! Collaborative tagging dynamics.
//!
//! The crate holds the pure parts of the toolkit: the bookmark data model,
//! a reinforcement (Polya) urn with an exact small-N oracle, a generative
//! model of a URL's bookmark stream, and the analysis battery used on
//! simulated or ingested logs. It is `no_std` and only needs `alloc`; file
//! formats and the command line live in the companion `folkdyn` crate.

#![no_std]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod analytics;
mod error;
pub mod model;
pub mod proportion;
pub mod rng;
pub mod tagsim;
pub mod urn;

pub use error::{Error, Result};
pub use model::{build_dataset, query_bookmarks, Bookmark, Dataset, History, QueryMode, Timestamp, UrlHistory, UserHistory};
pub use proportion::{proportion_trajectory, tag_proportions, ProportionTrajectory, ProportionVector};
pub use rng::Seed;
