//! Timestamped event sequences for discrete-event-system learners.
//!
//! A symbol sequence is collapsed into maximal runs: each run becomes one
//! event `(symbol, start, duration)` with timestamps in integer sample
//! indices. Events are contiguous, adjacent events carry different symbols,
//! and durations sum to the source length, so the encoding is lossless.
//!
//! The on-disk format is JSON lines, one object per series:
//!
//! ```text
//! {"id": "...", "label": "..."|null, "alphabet": k, "events": [[symbol, start, duration], ...]}
//! ```
//!
//! UTF-8, LF line endings, fields in exactly that order.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::SymbolSequence;

/// One maximal run of a symbol: starts at sample `start`, lasts `duration`
/// samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(usize, usize, usize)", into = "(usize, usize, usize)")]
pub struct Event {
    pub symbol: usize,
    pub start: usize,
    pub duration: usize,
}

impl From<(usize, usize, usize)> for Event {
    fn from((symbol, start, duration): (usize, usize, usize)) -> Self {
        Self {
            symbol,
            start,
            duration,
        }
    }
}

impl From<Event> for (usize, usize, usize) {
    fn from(e: Event) -> Self {
        (e.symbol, e.start, e.duration)
    }
}

/// Run-length encoded symbol sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventSequence {
    pub id: String,
    pub label: Option<String>,
    #[serde(rename = "alphabet")]
    pub alphabet_size: usize,
    pub events: Vec<Event>,
}

impl EventSequence {
    /// Total number of samples covered by the events.
    pub fn sample_len(&self) -> usize {
        self.events.iter().map(|e| e.duration).sum()
    }

    /// Expands the events back into the symbol sequence they encode.
    pub fn decode(&self) -> SymbolSequence {
        let mut symbols = Vec::with_capacity(self.sample_len());
        for e in &self.events {
            symbols.extend(std::iter::repeat_n(e.symbol, e.duration));
        }
        SymbolSequence {
            id: self.id.clone(),
            label: self.label.clone(),
            symbols,
            alphabet_size: self.alphabet_size,
        }
    }

    fn validate(&self, line: usize) -> Result<()> {
        let fail = |message: String| Error::InvalidEvents { line, message };
        if self.events.is_empty() {
            return Err(fail("no events".into()));
        }
        let mut expected_start = 0;
        let mut prev_symbol = None;
        for e in &self.events {
            if e.duration == 0 {
                return Err(fail(format!("zero duration at start {}", e.start)));
            }
            if e.start != expected_start {
                return Err(fail(format!(
                    "events not contiguous: expected start {expected_start}, got {}",
                    e.start
                )));
            }
            if prev_symbol == Some(e.symbol) {
                return Err(fail(format!(
                    "adjacent events share symbol {} at start {}",
                    e.symbol, e.start
                )));
            }
            if e.symbol >= self.alphabet_size {
                return Err(fail(format!(
                    "symbol {} out of alphabet {}",
                    e.symbol, self.alphabet_size
                )));
            }
            expected_start += e.duration;
            prev_symbol = Some(e.symbol);
        }
        Ok(())
    }
}

/// Collapses maximal runs of identical symbols into single events.
pub fn run_length_encode(seq: &SymbolSequence) -> EventSequence {
    assert!(!seq.symbols.is_empty(), "cannot encode an empty sequence");
    let mut events = Vec::new();
    let mut run_symbol = seq.symbols[0];
    let mut run_start = 0;
    for (i, &s) in seq.symbols.iter().enumerate().skip(1) {
        if s != run_symbol {
            events.push(Event {
                symbol: run_symbol,
                start: run_start,
                duration: i - run_start,
            });
            run_symbol = s;
            run_start = i;
        }
    }
    events.push(Event {
        symbol: run_symbol,
        start: run_start,
        duration: seq.symbols.len() - run_start,
    });
    EventSequence {
        id: seq.id.clone(),
        label: seq.label.clone(),
        alphabet_size: seq.alphabet_size,
        events,
    }
}

/// Writes one JSON object per sequence, LF-terminated.
pub fn export_events<W: Write>(seqs: &[EventSequence], mut writer: W) -> Result<()> {
    for seq in seqs {
        serde_json::to_writer(&mut writer, seq)
            .map_err(|e| Error::Io(std::io::Error::other(e)))?;
        writer.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads and validates a JSON-lines event file. The inverse of
/// [`export_events`].
pub fn import_events<R: BufRead>(reader: R) -> Result<Vec<EventSequence>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let seq: EventSequence =
            serde_json::from_str(&line).map_err(|e| Error::InvalidEvents {
                line: i + 1,
                message: e.to_string(),
            })?;
        seq.validate(i + 1)?;
        out.push(seq);
    }
    Ok(out)
}
