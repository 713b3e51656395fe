//! Seeded synthetic series used by tests and benchmarks.
//!
//! Everything here is deterministic: the same seed always produces the same
//! series, bit for bit.

use persist_core::TimeSeries;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A 3-state Markov chain with self-transition probability 0.95, emission
/// levels 0/10/20 and Gaussian noise sigma = 1. Leaving a state jumps to
/// one of the two others with equal probability.
pub fn markov_three_state(seed: u64, len: usize) -> TimeSeries {
    let mut rng = rng(seed);
    let noise = Normal::new(0.0, 1.0).unwrap();
    let mut state: usize = rng.random_range(0..3);
    let mut values = Vec::with_capacity(len);
    for _ in 0..len {
        values.push(state as f64 * 10.0 + noise.sample(&mut rng));
        if rng.random::<f64>() > 0.95 {
            state = (state + 1 + rng.random_range(0..2)) % 3;
        }
    }
    TimeSeries {
        id: format!("markov3-{seed}"),
        label: None,
        values,
    }
}

/// A two-level square wave: `runs` alternating blocks of `run_len` samples
/// at levels 0 and 10, plus Gaussian noise sigma = 1.
pub fn square_wave(seed: u64, runs: usize, run_len: usize) -> TimeSeries {
    let mut rng = rng(seed);
    let noise = Normal::new(0.0, 1.0).unwrap();
    let mut values = Vec::with_capacity(runs * run_len);
    for block in 0..runs {
        let level = if block % 2 == 0 { 0.0 } else { 10.0 };
        for _ in 0..run_len {
            values.push(level + noise.sample(&mut rng));
        }
    }
    TimeSeries {
        id: format!("square-{seed}"),
        label: None,
        values,
    }
}

/// Independent uniform noise on `[0, 1)`: no temporal structure at all.
pub fn iid_uniform(seed: u64, len: usize) -> TimeSeries {
    let mut rng = rng(seed);
    TimeSeries {
        id: format!("uniform-{seed}"),
        label: None,
        values: (0..len).map(|_| rng.random::<f64>()).collect(),
    }
}

/// A labeled series of persistent runs alternating between two levels.
/// Run lengths are drawn uniformly from 20..40 samples, noise sigma = 0.5.
pub fn two_level_runs(
    rng: &mut ChaCha8Rng,
    id: String,
    label: &str,
    levels: (f64, f64),
    len: usize,
) -> TimeSeries {
    let noise = Normal::new(0.0, 0.5).unwrap();
    let mut values = Vec::with_capacity(len);
    let mut high = rng.random::<bool>();
    while values.len() < len {
        let run = rng.random_range(20..40).min(len - values.len());
        let level = if high { levels.1 } else { levels.0 };
        for _ in 0..run {
            values.push(level + noise.sample(rng));
        }
        high = !high;
    }
    TimeSeries {
        id,
        label: Some(label.to_string()),
        values,
    }
}

/// A two-class dataset: class `a` runs over levels {0, 10}, class `b` over
/// {0, 20}. Returns `(train, test)` with `per_class` series of length `len`
/// in each split and class.
pub fn two_class_split(
    seed: u64,
    per_class: usize,
    len: usize,
) -> (Vec<TimeSeries>, Vec<TimeSeries>) {
    let mut rng = rng(seed);
    let mut split = |tag: &str| {
        let mut out = Vec::with_capacity(per_class * 2);
        for i in 0..per_class {
            out.push(two_level_runs(
                &mut rng,
                format!("a-{tag}-{i}"),
                "a",
                (0.0, 10.0),
                len,
            ));
            out.push(two_level_runs(
                &mut rng,
                format!("b-{tag}-{i}"),
                "b",
                (0.0, 20.0),
                len,
            ));
        }
        out
    };
    let train = split("train");
    let test = split("test");
    (train, test)
}

/// Splitting threshold isolating the rare top band of
/// [`metric_contrast_series`].
pub const UPPER_SPLIT: f64 = 15.0;
/// Splitting threshold separating the two balanced persistent bands of
/// [`metric_contrast_series`].
pub const LOWER_SPLIT: f64 = 5.0;

/// A deterministic 1000-sample series over three bands (values 0, 10, 20)
/// built so that the two candidate thresholds disagree across metrics:
///
/// - [`UPPER_SPLIT`] creates one near-ubiquitous symbol (appearance 0.971,
///   repetition ~0.989) and one rare, mildly repeating symbol (0.029,
///   ~0.621) — the extreme split the KL score favors;
/// - [`LOWER_SPLIT`] creates two balanced symbols that both repeat strongly
///   (0.535/~0.935 and 0.465/~0.927) — the split the Wasserstein score
///   favors.
///
/// The construction is exact run-length arithmetic, not sampling: 35 runs
/// of the bottom band (535 samples) alternate with 35 blocks of the upper
/// bands (436 mid + 29 top samples, the top band in 11 short runs embedded
/// inside mid runs).
pub fn metric_contrast_series() -> TimeSeries {
    let mut values = Vec::with_capacity(1000);
    for block in 0..35 {
        let bottom_len = if block < 10 { 16 } else { 15 };
        values.extend(std::iter::repeat_n(0.0, bottom_len));

        let mid_len: usize = if block < 16 { 13 } else { 12 };
        if block < 11 {
            let top_len = if block < 7 { 3 } else { 2 };
            values.extend(std::iter::repeat_n(10.0, mid_len.div_ceil(2)));
            values.extend(std::iter::repeat_n(20.0, top_len));
            values.extend(std::iter::repeat_n(10.0, mid_len / 2));
        } else {
            values.extend(std::iter::repeat_n(10.0, mid_len));
        }
    }
    debug_assert_eq!(values.len(), 1000);
    TimeSeries {
        id: "metric-contrast".into(),
        label: None,
        values,
    }
}
