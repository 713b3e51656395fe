//! Symbol appearance and repetition probabilities.
//!
//! For a symbol `s` in a sequence of length `n`:
//!
//! - `P(s)` (appearance) is the fraction of positions holding `s`;
//! - `P_r(s)` (repetition) is the fraction of *non-terminal* occurrences of
//!   `s` that are immediately followed by `s` again, i.e. the empirical
//!   probability that `s` persists one more step.
//!
//! `P_r(s)` is undefined for a symbol with no non-terminal occurrence (in
//! particular for a symbol that never appears). Scoring treats such symbols
//! as rejected, so breakpoint candidates that create near-empty bins lose.
//! Probabilities are exact rational counts evaluated in floating point; no
//! smoothing is applied.

use crate::types::SymbolSequence;

/// Per-symbol appearance and repetition statistics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolStats {
    pub symbol: usize,
    /// Number of positions holding this symbol.
    pub count: usize,
    /// `P(s)`: count / sequence length.
    pub p_appear: f64,
    /// `P_r(s)`: self-transitions / non-terminal occurrences, `None` when
    /// the symbol has no non-terminal occurrence.
    pub p_repeat: Option<f64>,
}

/// Raw pooled counts from one or more symbol sequences.
///
/// Transitions never span sequence boundaries: the last position of each
/// sequence is terminal.
#[derive(Debug, Clone)]
pub(crate) struct SymbolCounts {
    pub total: usize,
    pub count: Vec<usize>,
    pub non_terminal: Vec<usize>,
    pub self_pairs: Vec<usize>,
}

impl SymbolCounts {
    pub fn new(alphabet_size: usize) -> Self {
        Self {
            total: 0,
            count: vec![0; alphabet_size],
            non_terminal: vec![0; alphabet_size],
            self_pairs: vec![0; alphabet_size],
        }
    }

    /// Folds one sequence of symbols into the pooled counts.
    pub fn add_symbols(&mut self, symbols: impl Iterator<Item = usize>) {
        let mut prev: Option<usize> = None;
        for s in symbols {
            self.total += 1;
            self.count[s] += 1;
            if let Some(p) = prev {
                self.non_terminal[p] += 1;
                if p == s {
                    self.self_pairs[p] += 1;
                }
            }
            prev = Some(s);
        }
    }

    pub fn stats(&self) -> Vec<SymbolStats> {
        let n = self.total as f64;
        (0..self.count.len())
            .map(|s| SymbolStats {
                symbol: s,
                count: self.count[s],
                p_appear: self.count[s] as f64 / n,
                p_repeat: if self.non_terminal[s] > 0 {
                    Some(self.self_pairs[s] as f64 / self.non_terminal[s] as f64)
                } else {
                    None
                },
            })
            .collect()
    }
}

/// Estimates `P(s)` and `P_r(s)` for every symbol of the alphabet.
pub fn estimate_stats(seq: &SymbolSequence) -> Vec<SymbolStats> {
    estimate_stats_pooled(std::slice::from_ref(seq))
}

/// Estimates stats pooled across several sequences over the same alphabet.
///
/// Symbol counts and within-series transition counts are summed; the
/// boundary between two consecutive sequences contributes no transition.
pub fn estimate_stats_pooled(seqs: &[SymbolSequence]) -> Vec<SymbolStats> {
    assert!(!seqs.is_empty(), "at least one sequence required");
    let k = seqs[0].alphabet_size;
    assert!(
        seqs.iter().all(|s| s.alphabet_size == k),
        "all sequences must share one alphabet"
    );
    let mut counts = SymbolCounts::new(k);
    for seq in seqs {
        counts.add_symbols(seq.symbols.iter().copied());
    }
    counts.stats()
}
