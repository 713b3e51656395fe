//! Greedy persistence-driven breakpoint selection.
//!
//! Starting from an empty breakpoint set (aggregate persistence 0, since an
//! undiscretized series is one perfectly self-repeating symbol), each
//! iteration scores every remaining candidate added to the already accepted
//! breakpoints and keeps the best one — but only while the aggregate score
//! strictly improves. The loop therefore terminates after at most
//! `|candidates|` iterations and the accepted scores form a strictly
//! increasing sequence.
//!
//! Ties between equally scoring candidates are broken toward the smallest
//! breakpoint value, which makes fitting bit-deterministic across runs and
//! platforms. Candidate evaluation is pure and runs in parallel; the
//! reduction preserves the sequential tie-break exactly.

use rayon::prelude::*;

use crate::binning;
use crate::error::{Error, Result};
use crate::score::persistence_aggregate;
use crate::stats::SymbolCounts;
use crate::types::{Binning, BreakpointModel, Metric, SymbolSequence, TimeSeries};

/// Fit parameters for [`fit`] and [`fit_multi`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PersistConfig {
    pub metric: Metric,
    pub binning: Binning,
    /// Candidate count: `bins - 1` interior boundaries are generated.
    pub bins: usize,
}

impl Default for PersistConfig {
    fn default() -> Self {
        Self {
            metric: Metric::Wasserstein,
            binning: Binning::EqualFrequency,
            bins: 100,
        }
    }
}

/// Maps a value to its interval index: symbol `j` covers `[b_{j-1}, b_j)`
/// with implicit sentinels `b_{-1} = -inf`, `b_k = +inf`.
#[inline]
pub(crate) fn symbol_index(value: f64, breakpoints: &[f64]) -> usize {
    breakpoints.partition_point(|b| *b <= value)
}

/// Discretizes a series against a strictly increasing breakpoint sequence.
/// Boundary values fall into the upper interval (half-open, lower-inclusive).
pub fn apply_breakpoints(ts: &TimeSeries, breakpoints: &[f64]) -> SymbolSequence {
    let symbols = ts
        .values
        .iter()
        .map(|&v| symbol_index(v, breakpoints))
        .collect();
    SymbolSequence {
        id: ts.id.clone(),
        label: ts.label.clone(),
        symbols,
        alphabet_size: breakpoints.len() + 1,
    }
}

impl BreakpointModel {
    /// Discretizes a series with this model's breakpoints.
    pub fn discretize(&self, ts: &TimeSeries) -> SymbolSequence {
        apply_breakpoints(ts, &self.breakpoints)
    }
}

/// Aggregate persistence of a breakpoint set over a dataset, counting
/// transitions within each series only.
fn pooled_score(dataset: &[TimeSeries], breakpoints: &[f64], metric: Metric) -> f64 {
    let mut counts = SymbolCounts::new(breakpoints.len() + 1);
    for ts in dataset {
        counts.add_symbols(ts.values.iter().map(|&v| symbol_index(v, breakpoints)));
    }
    persistence_aggregate(&counts.stats(), metric)
}

fn insert_sorted(sorted: &[f64], value: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(sorted.len() + 1);
    let pos = sorted.partition_point(|b| *b < value);
    out.extend_from_slice(&sorted[..pos]);
    out.push(value);
    out.extend_from_slice(&sorted[pos..]);
    out
}

/// Scores every candidate joined with the current breakpoints and returns
/// the index of the best one with its score. Ties go to the smaller
/// candidate (candidates are sorted ascending, so the smaller index).
fn best_candidate(
    dataset: &[TimeSeries],
    current: &[f64],
    candidates: &[f64],
    metric: Metric,
) -> Option<(usize, f64)> {
    candidates
        .par_iter()
        .enumerate()
        .map(|(i, &c)| {
            let trial = insert_sorted(current, c);
            (i, pooled_score(dataset, &trial, metric))
        })
        .reduce_with(|a, b| {
            if b.1 > a.1 || (b.1 == a.1 && b.0 < a.0) {
                b
            } else {
                a
            }
        })
}

/// Scores every candidate breakpoint added to `current` on one series and
/// returns the maximizer with its aggregate persistence, or `None` when no
/// candidate is given. Candidates creating empty symbols score `-inf`.
pub fn best_bp(
    ts: &TimeSeries,
    current: &[f64],
    candidates: &[f64],
    metric: Metric,
) -> Option<(f64, f64)> {
    let mut sorted = candidates.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite breakpoints"));
    best_candidate(std::slice::from_ref(ts), current, &sorted, metric)
        .map(|(i, score)| (sorted[i], score))
}

/// Fits a breakpoint model on a single series. See [`fit_multi`].
pub fn fit(ts: &TimeSeries, config: &PersistConfig) -> Result<BreakpointModel> {
    fit_multi(std::slice::from_ref(ts), config)
}

/// Fits a breakpoint model on a dataset: candidates are generated from the
/// pooled values and each candidate is scored with pooled symbol and
/// transition counts (transitions never span series boundaries).
///
/// Errors on an empty dataset and on a degenerate one (all values equal).
/// When no candidate improves on the empty-breakpoint score of 0, the
/// returned model has no breakpoints (a one-symbol alphabet).
pub fn fit_multi(dataset: &[TimeSeries], config: &PersistConfig) -> Result<BreakpointModel> {
    fit_multi_with_trace(dataset, config).map(|(model, _)| model)
}

/// Like [`fit_multi`], additionally returning the accepted score at each
/// greedy iteration. The trace is strictly increasing by construction.
pub fn fit_multi_with_trace(
    dataset: &[TimeSeries],
    config: &PersistConfig,
) -> Result<(BreakpointModel, Vec<f64>)> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let pooled = dataset.iter().flat_map(|ts| ts.values.iter().copied());
    let mut candidates = binning::candidates_from_values(pooled, config.bins, config.binning)?;

    let mut accepted: Vec<f64> = Vec::new();
    let mut score = 0.0;
    let mut trace = Vec::new();
    while !candidates.is_empty() {
        let (idx, best) = best_candidate(dataset, &accepted, &candidates, config.metric)
            .expect("candidates is nonempty");
        if best > score {
            score = best;
            trace.push(score);
            let value = candidates.remove(idx);
            accepted = insert_sorted(&accepted, value);
        } else {
            break;
        }
    }

    Ok((
        BreakpointModel {
            breakpoints: accepted,
            metric: config.metric,
            binning: config.binning,
            bins: config.bins,
            final_score: score,
        },
        trace,
    ))
}
