//! Domain types shared by all modules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One univariate numeric sequence plus an optional class label.
///
/// Invariants: at least one value, every value finite.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub id: String,
    pub label: Option<String>,
    pub values: Vec<f64>,
}

impl TimeSeries {
    /// Builds a series, validating the type invariants.
    pub fn new(id: impl Into<String>, label: Option<String>, values: Vec<f64>) -> Result<Self> {
        let id = id.into();
        if values.is_empty() {
            return Err(Error::EmptySeries { id });
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { id, index });
        }
        Ok(Self { id, label, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Smallest and largest value, in that order.
    pub fn value_range(&self) -> (f64, f64) {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for &v in &self.values {
            min = min.min(v);
            max = max.max(v);
        }
        (min, max)
    }
}

/// Divergence used by the persistence score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Metric {
    #[serde(rename = "kl")]
    Kl,
    #[serde(rename = "wasserstein")]
    Wasserstein,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Kl => write!(f, "kl"),
            Metric::Wasserstein => write!(f, "wasserstein"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kl" => Ok(Metric::Kl),
            "wasserstein" => Ok(Metric::Wasserstein),
            other => Err(Error::InvalidModel(format!("unknown metric `{other}`"))),
        }
    }
}

/// Candidate breakpoint initialization strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Binning {
    #[serde(rename = "ef")]
    EqualFrequency,
    #[serde(rename = "ew")]
    EqualWidth,
}

impl fmt::Display for Binning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Binning::EqualFrequency => write!(f, "ef"),
            Binning::EqualWidth => write!(f, "ew"),
        }
    }
}

impl FromStr for Binning {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ef" => Ok(Binning::EqualFrequency),
            "ew" => Ok(Binning::EqualWidth),
            other => Err(Error::InvalidModel(format!("unknown binning `{other}`"))),
        }
    }
}

/// A fitted discretizer: ordered breakpoint values plus fit metadata.
///
/// `k - 1` strictly increasing breakpoints induce a `k`-symbol alphabet of
/// half-open, lower-inclusive intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct BreakpointModel {
    pub breakpoints: Vec<f64>,
    pub metric: Metric,
    pub binning: Binning,
    /// Candidate count parameter used at fit time.
    pub bins: usize,
    /// Aggregate persistence at the end of the fit.
    pub final_score: f64,
}

impl BreakpointModel {
    pub fn alphabet_size(&self) -> usize {
        self.breakpoints.len() + 1
    }
}

/// A discretized series over alphabet indices `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolSequence {
    pub id: String,
    pub label: Option<String>,
    pub symbols: Vec<usize>,
    pub alphabet_size: usize,
}

impl SymbolSequence {
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }
}
