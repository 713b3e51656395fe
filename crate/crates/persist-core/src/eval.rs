//! Train/test evaluation harness.
//!
//! Measures how much class information a discretizer retains: fit on the
//! train split only, discretize both splits, then classify each test series
//! by 1-nearest-neighbor over Euclidean distance between symbol histogram
//! features. The classifier is deliberately simple and deterministic; it
//! serves to compare discretizers relatively, not to chase absolute
//! accuracy.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::events::run_length_encode;
use crate::persist::{fit_multi, PersistConfig};
use crate::sax::sax_discretize;
use crate::types::{SymbolSequence, TimeSeries};

type Discretizer = Box<dyn Fn(&TimeSeries) -> Result<SymbolSequence>>;

/// Which discretizer the harness evaluates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DiscretizerConfig {
    Persist(PersistConfig),
    Sax { alphabet: usize, width: usize },
}

/// Per-dataset evaluation result, serialized as the JSON report.
#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub dataset: String,
    /// `"kl"`, `"wasserstein"` or `"sax"`.
    pub metric: String,
    /// `"ef"` or `"ew"` for the persistence discretizer, `null` for SAX.
    pub binning: Option<String>,
    pub alphabet_size: usize,
    pub accuracy: f64,
    pub mean_events_per_series: f64,
    pub fit_seconds: f64,
}

/// Concatenation of the L1-normalized per-symbol frequency histogram
/// (length `k`) and the L1-normalized symbol-bigram frequency histogram
/// (length `k^2`). Histograms with zero total stay all-zero.
pub fn symbol_features(seq: &SymbolSequence) -> Vec<f64> {
    let k = seq.alphabet_size;
    let mut unigram = vec![0.0; k];
    let mut bigram = vec![0.0; k * k];
    for &s in &seq.symbols {
        unigram[s] += 1.0;
    }
    for w in seq.symbols.windows(2) {
        bigram[w[0] * k + w[1]] += 1.0;
    }
    normalize_l1(&mut unigram);
    normalize_l1(&mut bigram);
    unigram.extend(bigram);
    unigram
}

fn normalize_l1(v: &mut [f64]) {
    let total: f64 = v.iter().sum();
    if total > 0.0 {
        for x in v.iter_mut() {
            *x /= total;
        }
    }
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// 1-nearest-neighbor prediction indices; ties resolve to the smallest
/// train index.
fn nearest_neighbor(train: &[Vec<f64>], test: &[Vec<f64>]) -> Vec<usize> {
    test.iter()
        .map(|t| {
            let mut best = 0;
            let mut best_dist = f64::INFINITY;
            for (i, f) in train.iter().enumerate() {
                let d = squared_distance(t, f);
                if d < best_dist {
                    best_dist = d;
                    best = i;
                }
            }
            best
        })
        .collect()
}

fn require_labels(dataset: &[TimeSeries]) -> Result<Vec<&str>> {
    dataset
        .iter()
        .map(|ts| {
            ts.label.as_deref().ok_or_else(|| Error::MissingLabel {
                id: ts.id.clone(),
            })
        })
        .collect()
}

/// Fits the discretizer on `train` only, discretizes both splits,
/// classifies the test series and reports the fraction correct along with
/// event-count statistics for the discretized test split.
pub fn evaluate(
    dataset_name: &str,
    train: &[TimeSeries],
    test: &[TimeSeries],
    discretizer: &DiscretizerConfig,
) -> Result<EvalReport> {
    if train.is_empty() || test.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let train_labels = require_labels(train)?;
    let test_labels = require_labels(test)?;
    let classes: BTreeSet<&str> = train_labels.iter().copied().collect();
    if classes.len() < 2 {
        return Err(Error::TooFewClasses(classes.len()));
    }

    let started = Instant::now();
    let discretize: Discretizer = match discretizer {
        DiscretizerConfig::Persist(config) => {
            let model = fit_multi(train, config)?;
            Box::new(move |ts| Ok(model.discretize(ts)))
        }
        DiscretizerConfig::Sax { alphabet, width } => {
            let (alphabet, width) = (*alphabet, *width);
            Box::new(move |ts| sax_discretize(ts, alphabet, width))
        }
    };
    let fit_seconds = started.elapsed().as_secs_f64();

    let train_seqs: Vec<SymbolSequence> = train.iter().map(&discretize).collect::<Result<_>>()?;
    let test_seqs: Vec<SymbolSequence> = test.iter().map(&discretize).collect::<Result<_>>()?;
    let alphabet_size = train_seqs[0].alphabet_size;

    let train_features: Vec<Vec<f64>> = train_seqs.iter().map(symbol_features).collect();
    let test_features: Vec<Vec<f64>> = test_seqs.iter().map(symbol_features).collect();
    let predictions = nearest_neighbor(&train_features, &test_features);
    let correct = predictions
        .iter()
        .zip(&test_labels)
        .filter(|(&p, &actual)| train_labels[p] == actual)
        .count();
    let accuracy = correct as f64 / test.len() as f64;

    let total_events: usize = test_seqs
        .iter()
        .map(|s| run_length_encode(s).events.len())
        .sum();
    let mean_events_per_series = total_events as f64 / test_seqs.len() as f64;

    let (metric, binning) = match discretizer {
        DiscretizerConfig::Persist(c) => (c.metric.to_string(), Some(c.binning.to_string())),
        DiscretizerConfig::Sax { .. } => ("sax".to_string(), None),
    };

    Ok(EvalReport {
        dataset: dataset_name.to_string(),
        metric,
        binning,
        alphabet_size,
        accuracy,
        mean_events_per_series,
        fit_seconds,
    })
}
