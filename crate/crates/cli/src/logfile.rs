//! Line-delimited bookmark log.
//!
//! One JSON object per line with keys in the fixed order `ts`, `user`,
//! `url`, `tags`, e.g.
//!
//! ```text
//! {"ts":"2005-06-23T09:00:00Z","user":"u1","url":"http://a","tags":["cats","africa"]}
//! ```
//!
//! Timestamps are ISO-8601 UTC at second resolution. File order breaks
//! timestamp ties.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use chrono::{DateTime, SecondsFormat, Utc};
use folkdyn_core::{Bookmark, Timestamp};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookmarkLogRecord {
    pub ts: String,
    pub user: String,
    pub url: String,
    pub tags: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Fail on the first malformed line instead of skipping it.
    pub strict: bool,
    /// Lowercase every tag before validation.
    pub normalize_case: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedLog {
    pub bookmarks: Vec<Bookmark>,
    /// Malformed lines skipped in lenient mode.
    pub skipped: usize,
    /// Records whose duplicate or empty tags were dropped in lenient mode.
    pub repaired: usize,
}

pub fn format_timestamp(ts: Timestamp) -> String {
    DateTime::<Utc>::from_timestamp(ts.seconds(), 0)
        .expect("timestamp in chrono range")
        .to_rfc3339_opts(SecondsFormat::Secs, true)
}

pub fn parse_timestamp(s: &str) -> std::result::Result<Timestamp, String> {
    DateTime::parse_from_rfc3339(s)
        .map(|dt| Timestamp(dt.with_timezone(&Utc).timestamp()))
        .map_err(|e| format!("malformed timestamp `{s}`: {e}"))
}

fn record_to_bookmark(record: BookmarkLogRecord, opts: ParseOptions) -> std::result::Result<(Bookmark, bool), String> {
    let ts = parse_timestamp(&record.ts)?;
    if record.url.is_empty() {
        return Err("empty url".into());
    }
    if record.user.is_empty() {
        return Err("empty user".into());
    }
    let mut tags = record.tags;
    if opts.normalize_case {
        for t in &mut tags {
            *t = t.to_lowercase();
        }
    }
    let mut repaired = false;
    if !opts.strict {
        let mut seen = HashSet::new();
        let before = tags.len();
        tags.retain(|t| !t.is_empty() && seen.insert(t.clone()));
        repaired = tags.len() != before;
    }
    Bookmark::new(record.user, record.url, ts, tags)
        .map(|b| (b, repaired))
        .map_err(|e| e.to_string())
}

/// Reads a bookmark log. Blank lines are ignored.
pub fn parse_bookmark_log<R: BufRead>(reader: R, opts: ParseOptions) -> Result<ParsedLog> {
    let mut out = ParsedLog::default();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::io(format!("reading line {line_no}"), e))?;
        if line.trim().is_empty() {
            continue;
        }
        let parsed = serde_json::from_str::<BookmarkLogRecord>(&line)
            .map_err(|e| e.to_string())
            .and_then(|r| record_to_bookmark(r, opts));
        match parsed {
            Ok((b, repaired)) => {
                if repaired {
                    log::warn!("line {line_no}: dropped duplicate or empty tags");
                    out.repaired += 1;
                }
                out.bookmarks.push(b);
            }
            Err(message) if opts.strict => return Err(Error::Parse { line: line_no, message }),
            Err(message) => {
                log::warn!("line {line_no}: skipped: {message}");
                out.skipped += 1;
            }
        }
    }
    Ok(out)
}

pub fn to_record(b: &Bookmark) -> BookmarkLogRecord {
    BookmarkLogRecord {
        ts: format_timestamp(b.timestamp()),
        user: b.user().to_string(),
        url: b.url().to_string(),
        tags: b.tags().to_vec(),
    }
}

/// Canonical serialization: one compact JSON object per line, `\n` terminated.
pub fn write_bookmark_log<'a, W: Write>(mut w: W, bookmarks: impl IntoIterator<Item = &'a Bookmark>) -> Result<()> {
    for b in bookmarks {
        serde_json::to_writer(&mut w, &to_record(b)).map_err(|e| Error::io("writing log", e.into()))?;
        w.write_all(b"\n").map_err(|e| Error::io("writing log", e))?;
    }
    Ok(())
}

pub fn bookmark_log_bytes<'a>(bookmarks: impl IntoIterator<Item = &'a Bookmark>) -> Vec<u8> {
    let mut buf = Vec::new();
    write_bookmark_log(&mut buf, bookmarks).expect("writing to memory");
    buf
}
