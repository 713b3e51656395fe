//! Candidate breakpoint generation.
//!
//! Equal-frequency binning places candidates at data quantiles, so they are
//! denser where the data is dense; equal-width binning places them on a
//! uniform grid over the value range. Both produce at most `bins - 1`
//! interior boundaries.

use crate::error::{Error, Result};
use crate::types::{Binning, TimeSeries};

/// Equal-frequency candidates: the interior quantile boundaries at ranks
/// `j/bins` for `j = 1..bins-1`, computed from the sorted values with the
/// lower-value tie rule `sorted[ceil(j*n/bins) - 1]`. Duplicate boundaries
/// from repeated values are removed, so fewer than `bins - 1` candidates
/// may be returned. Every candidate is an observed data value.
pub fn equal_frequency_candidates(ts: &TimeSeries, bins: usize) -> Result<Vec<f64>> {
    candidates_from_values(ts.values.iter().copied(), bins, Binning::EqualFrequency)
}

/// Equal-width candidates: `min + j*(max-min)/bins` for `j = 1..bins-1`.
pub fn equal_width_candidates(ts: &TimeSeries, bins: usize) -> Result<Vec<f64>> {
    candidates_from_values(ts.values.iter().copied(), bins, Binning::EqualWidth)
}

/// Candidate generation over a pooled value stream, used when fitting a
/// model across a whole dataset.
pub(crate) fn candidates_from_values(
    values: impl Iterator<Item = f64>,
    bins: usize,
    binning: Binning,
) -> Result<Vec<f64>> {
    if bins < 2 {
        return Err(Error::InvalidBins(bins));
    }
    let mut sorted: Vec<f64> = values.collect();
    if sorted.is_empty() {
        return Err(Error::EmptySeries { id: String::new() });
    }
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite values"));
    let n = sorted.len();
    if sorted[0] == sorted[n - 1] {
        return Err(Error::DegenerateSeries);
    }

    match binning {
        Binning::EqualFrequency => {
            let mut out = Vec::with_capacity(bins - 1);
            for j in 1..bins {
                let rank = (j * n).div_ceil(bins) - 1;
                out.push(sorted[rank]);
            }
            out.dedup();
            Ok(out)
        }
        Binning::EqualWidth => {
            let (min, max) = (sorted[0], sorted[n - 1]);
            let span = max - min;
            let out: Vec<f64> = (1..bins)
                .map(|j| min + j as f64 * span / bins as f64)
                .collect();
            debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
            Ok(out)
        }
    }
}
