use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use core::fmt;

use crate::{Error, Result};

/// Functions a tag can serve in a bookmark.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TagKind {
    /// What or who the item is about.
    Topic,
    /// What kind of thing the item is.
    WhatItIs,
    /// Who owns or created the item.
    Ownership,
    /// Refines another category, e.g. round numbers.
    Refinement,
    /// The tagger's opinion of the item.
    Quality,
    /// Relation of the item to the tagger ("my...").
    SelfReference,
    /// Task organization, e.g. `toread`.
    Task,
}

impl TagKind {
    pub const ALL: [TagKind; 7] = [
        TagKind::Topic,
        TagKind::WhatItIs,
        TagKind::Ownership,
        TagKind::Refinement,
        TagKind::Quality,
        TagKind::SelfReference,
        TagKind::Task,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TagKind::Topic => "TOPIC",
            TagKind::WhatItIs => "WHAT_IT_IS",
            TagKind::Ownership => "OWNERSHIP",
            TagKind::Refinement => "REFINEMENT",
            TagKind::Quality => "QUALITY",
            TagKind::SelfReference => "SELF_REFERENCE",
            TagKind::Task => "TASK",
        }
    }
}

impl fmt::Display for TagKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Word lists consulted by [`classify_tag_kind`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicons {
    pub what_it_is: BTreeSet<String>,
    pub quality: BTreeSet<String>,
    pub task: BTreeSet<String>,
    pub ownership: BTreeSet<String>,
}

fn set(words: &[&str]) -> BTreeSet<String> {
    words.iter().map(|w| w.to_string()).collect()
}

impl Default for Lexicons {
    fn default() -> Self {
        Lexicons {
            what_it_is: set(&[
                "article", "blog", "book", "video", "podcast", "tutorial", "reference", "paper", "news",
                "howto", "software", "tool", "wiki", "forum", "magazine",
            ]),
            quality: set(&[
                "scary", "funny", "stupid", "inspirational", "cool", "interesting", "useful", "awesome",
                "fun", "weird", "humor", "great",
            ]),
            task: set(&["toread", "jobsearch", "todo", "to_read", "toblog", "tobuy", "wishlist", "readlater"]),
            ownership: BTreeSet::new(),
        }
    }
}

/// First matching rule wins: `my` prefix, task word, all digits, type word,
/// quality word, ownership word or `by:` prefix; anything else is a topic.
pub fn classify_tag_kind(tag: &str, lexicons: &Lexicons) -> Result<TagKind> {
    if tag.is_empty() {
        return Err(Error::InvalidArgument("empty tag".to_string()));
    }
    let kind = if tag.starts_with("my") {
        TagKind::SelfReference
    } else if lexicons.task.contains(tag) {
        TagKind::Task
    } else if tag.bytes().all(|b| b.is_ascii_digit()) {
        TagKind::Refinement
    } else if lexicons.what_it_is.contains(tag) {
        TagKind::WhatItIs
    } else if lexicons.quality.contains(tag) {
        TagKind::Quality
    } else if lexicons.ownership.contains(tag) || tag.starts_with("by:") {
        TagKind::Ownership
    } else {
        TagKind::Topic
    };
    Ok(kind)
}
