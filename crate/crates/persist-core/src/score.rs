//! Divergence metrics and the signed persistence score.
//!
//! Both distributions compared here have exactly two outcomes, so they are
//! fully described by their first-outcome probability. The persistence of a
//! symbol compares `P = (P(s), 1-P(s))` against `Q = (P_r(s), 1-P_r(s))`:
//!
//! ```text
//! persistence(s) = sgn(P_r(s) - P(s)) * d(P, Q)
//! ```
//!
//! where `d` is either the symmetric Kullback-Leibler divergence or the
//! Wasserstein distance. The sign term rewards only symbols that repeat
//! more often than they appear; anti-persistent symbols contribute
//! negatively. For two-outcome distributions the Wasserstein distance
//! collapses to `|P(s) - P_r(s)|`, so the Wasserstein persistence equals
//! `P_r(s) - P(s)` exactly. The KL divergence is unbounded and grows
//! steeply near probabilities 0 and 1, which makes the KL score favor
//! extreme splits; the Wasserstein score grows linearly instead.

use crate::stats::SymbolStats;
use crate::types::Metric;

/// Probabilities are clamped to `[EPSILON, 1 - EPSILON]` before any log is
/// taken, capping the otherwise unbounded KL divergence at a huge finite
/// value without affecting any realistic ordering.
pub const CLAMP_EPSILON: f64 = 1e-10;

/// A probability distribution with two outcomes, `(p, 1-p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPointDist {
    pub p: f64,
}

impl TwoPointDist {
    pub fn new(p: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&p), "probability out of range: {p}");
        Self { p }
    }
}

fn clamp(p: f64) -> f64 {
    p.clamp(CLAMP_EPSILON, 1.0 - CLAMP_EPSILON)
}

/// Kullback-Leibler divergence `D(P || Q)` over both outcomes, natural log.
pub fn kl(p: TwoPointDist, q: TwoPointDist) -> f64 {
    let (p1, q1) = (clamp(p.p), clamp(q.p));
    let (p2, q2) = (1.0 - p1, 1.0 - q1);
    p1 * (p1 / q1).ln() + p2 * (p2 / q2).ln()
}

/// Symmetric KL divergence: the mean of the two directed divergences.
pub fn skl(p: TwoPointDist, q: TwoPointDist) -> f64 {
    (kl(p, q) + kl(q, p)) / 2.0
}

/// Wasserstein distance between two-outcome distributions: `|p - q|`.
pub fn wasserstein(p: TwoPointDist, q: TwoPointDist) -> f64 {
    (p.p - q.p).abs()
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Signed persistence of one symbol under the chosen metric.
///
/// Returns `f64::NEG_INFINITY` when `P_r(s)` is undefined, rejecting
/// breakpoint sets that produce empty or terminal-only symbols.
pub fn persistence_symbol(stats: &SymbolStats, metric: Metric) -> f64 {
    let Some(p_repeat) = stats.p_repeat else {
        return f64::NEG_INFINITY;
    };
    let p = TwoPointDist::new(stats.p_appear);
    let q = TwoPointDist::new(p_repeat);
    let distance = match metric {
        Metric::Kl => skl(p, q),
        Metric::Wasserstein => wasserstein(p, q),
    };
    sgn(p_repeat - stats.p_appear) * distance
}

/// Aggregate persistence of a breakpoint set: the unweighted mean of the
/// per-symbol persistences. Any rejected symbol drives the aggregate to
/// `-inf`.
pub fn persistence_aggregate(all_stats: &[SymbolStats], metric: Metric) -> f64 {
    assert!(!all_stats.is_empty(), "at least one symbol required");
    let total: f64 = all_stats
        .iter()
        .map(|s| persistence_symbol(s, metric))
        .sum();
    total / all_stats.len() as f64
}
