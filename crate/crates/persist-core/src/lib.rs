//! Persistence-driven symbolic discretization of univariate time series.
//!
//! The central idea: a discretization is good for modeling a dynamical
//! system when its symbols *persist* — when the probability that a symbol
//! repeats at the next time step is higher than its marginal probability of
//! appearing at all. Breakpoints in value space are chosen greedily to
//! maximize an aggregate persistence score, measured either with the
//! symmetric Kullback-Leibler divergence or with the Wasserstein distance
//! between the two-outcome distributions `(P(s), 1-P(s))` and
//! `(P_r(s), 1-P_r(s))`.
//!
//! The crate provides:
//!
//! - [`persist::fit`] / [`persist::fit_multi`]: the greedy breakpoint
//!   selection loop, with equal-frequency or equal-width candidate
//!   initialization ([`binning`]);
//! - [`score`]: the divergence metrics and the signed persistence score;
//! - [`sax`]: a SAX baseline (z-normalization, piecewise aggregate
//!   approximation, Gaussian equiprobable breakpoints);
//! - [`events`]: run-length encoding of symbol sequences into timestamped
//!   event sequences, the input format of discrete-event-system learners;
//! - [`io`]: dataset loading (UCR-style TSV, CSV) and model persistence;
//! - [`eval`]: a small train/test classification harness for comparing
//!   discretizers.
//!
//! All types are immutable after construction and all operations are pure
//! functions, safe to call concurrently.

pub mod binning;
pub mod error;
pub mod eval;
pub mod events;
pub mod io;
pub mod persist;
pub mod sax;
pub mod score;
pub mod stats;
pub mod types;

pub use error::{Error, Result};
pub use events::{Event, EventSequence};
pub use persist::PersistConfig;
pub use stats::SymbolStats;
pub use types::{Binning, BreakpointModel, Metric, SymbolSequence, TimeSeries};
