//! SAX baseline: z-normalization, piecewise aggregate approximation and
//! Gaussian equiprobable breakpoints.
//!
//! SAX assumes z-normalized series are standard normal and cuts the value
//! axis at the normal quantiles `i/a`, `i = 1..a-1`, so that each of the
//! `a` symbols is equally probable under that assumption. Normalization is
//! applied per series.

use crate::error::{Error, Result};
use crate::persist::apply_breakpoints;
use crate::types::{SymbolSequence, TimeSeries};

/// Shifts and scales to mean 0 and population standard deviation 1.
/// A series with (near-)zero spread maps to all zeros.
pub fn znormalize(ts: &TimeSeries) -> TimeSeries {
    let n = ts.values.len() as f64;
    let mean = ts.values.iter().sum::<f64>() / n;
    let var = ts.values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    let std = var.sqrt();
    let values = if std < 1e-12 {
        vec![0.0; ts.values.len()]
    } else {
        ts.values.iter().map(|v| (v - mean) / std).collect()
    };
    TimeSeries {
        id: ts.id.clone(),
        label: ts.label.clone(),
        values,
    }
}

/// Piecewise aggregate approximation: consecutive windows of `width`
/// samples replaced by their mean. A final partial window is averaged over
/// its actual length, so the output length is `ceil(n / width)`.
pub fn paa(ts: &TimeSeries, width: usize) -> TimeSeries {
    assert!(width >= 1, "PAA window width must be at least 1");
    let values = ts
        .values
        .chunks(width)
        .map(|chunk| chunk.iter().sum::<f64>() / chunk.len() as f64)
        .collect();
    TimeSeries {
        id: ts.id.clone(),
        label: ts.label.clone(),
        values,
    }
}

/// Breakpoints at the standard normal quantiles `i/a` for `i = 1..a-1`,
/// producing `a` equiprobable symbols under the normality assumption.
/// Supported alphabet sizes: 2..=26.
pub fn sax_breakpoints(alphabet: usize) -> Result<Vec<f64>> {
    if !(2..=26).contains(&alphabet) {
        return Err(Error::InvalidAlphabet(alphabet));
    }
    Ok((1..alphabet)
        .map(|i| inv_norm_cdf(i as f64 / alphabet as f64))
        .collect())
}

/// Full SAX pipeline: znormalize, PAA, then Gaussian breakpoints.
pub fn sax_discretize(ts: &TimeSeries, alphabet: usize, width: usize) -> Result<SymbolSequence> {
    let breakpoints = sax_breakpoints(alphabet)?;
    let reduced = paa(&znormalize(ts), width);
    Ok(apply_breakpoints(&reduced, &breakpoints))
}

/// Inverse standard normal CDF, Wichura's rational approximation (absolute
/// error well below 1e-8 over the open unit interval).
fn inv_norm_cdf(p: f64) -> f64 {
    debug_assert!(p > 0.0 && p < 1.0);
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        return q * rational(r, &CENTRAL_NUM, &CENTRAL_DEN);
    }
    let r = if q < 0.0 { p } else { 1.0 - p };
    let r = (-r.ln()).sqrt();
    let z = if r <= 5.0 {
        let r = r - 1.6;
        rational(r, &TAIL_NUM, &TAIL_DEN)
    } else {
        let r = r - 5.0;
        rational(r, &FAR_TAIL_NUM, &FAR_TAIL_DEN)
    };
    if q < 0.0 {
        -z
    } else {
        z
    }
}

/// Evaluates `num(r) / den(r)` with Horner's rule; `den` has an implicit
/// leading coefficient of 1.
fn rational(r: f64, num: &[f64; 8], den: &[f64; 7]) -> f64 {
    let mut n = num[7];
    for c in num[..7].iter().rev() {
        n = n * r + c;
    }
    let mut d = den[6];
    for c in den[..6].iter().rev() {
        d = d * r + c;
    }
    n / (d * r + 1.0)
}

#[allow(clippy::excessive_precision)]
const CENTRAL_NUM: [f64; 8] = [
    3.387_132_872_796_366_608,
    1.331_416_678_917_843_774_5e2,
    1.971_590_950_306_551_442_7e3,
    1.373_169_376_550_946_112_5e4,
    4.592_195_393_154_987_145_7e4,
    6.726_577_092_700_870_085_3e4,
    3.343_057_558_358_812_810_5e4,
    2.509_080_928_730_122_672_7e3,
];
#[allow(clippy::excessive_precision)]
const CENTRAL_DEN: [f64; 7] = [
    4.231_333_070_160_091_125_2e1,
    6.871_870_074_920_579_083e2,
    5.394_196_021_424_751_107_7e3,
    2.121_379_430_158_659_586_7e4,
    3.930_789_580_009_271_061e4,
    2.872_908_573_572_194_267_4e4,
    5.226_495_278_852_854_561e3,
];
#[allow(clippy::excessive_precision)]
const TAIL_NUM: [f64; 8] = [
    1.423_437_110_749_683_577_34,
    4.630_337_846_156_545_295_9,
    5.769_497_221_460_691_405_5,
    3.647_848_324_763_204_605_04,
    1.270_458_252_452_368_382_58,
    2.417_807_251_774_506_117_7e-1,
    2.272_384_498_926_918_458_33e-2,
    7.745_450_142_783_414_076_4e-4,
];
#[allow(clippy::excessive_precision)]
const TAIL_DEN: [f64; 7] = [
    2.053_191_626_637_758_821_87,
    1.676_384_830_183_803_849_4,
    6.897_673_349_851_000_045_5e-1,
    1.481_039_764_274_800_745_9e-1,
    1.519_866_656_361_645_719_66e-2,
    5.475_938_084_995_344_946e-4,
    1.050_750_071_644_416_843_24e-9,
];
#[allow(clippy::excessive_precision)]
const FAR_TAIL_NUM: [f64; 8] = [
    6.657_904_643_501_103_777_2,
    5.463_784_911_164_114_369_9,
    1.784_826_539_917_291_335_8,
    2.965_605_718_285_048_912_3e-1,
    2.653_218_952_657_612_309_3e-2,
    1.242_660_947_388_078_438_6e-3,
    2.711_555_568_743_487_578_15e-5,
    2.010_334_399_292_288_132_65e-7,
];
#[allow(clippy::excessive_precision)]
const FAR_TAIL_DEN: [f64; 7] = [
    5.998_322_065_558_879_376_9e-1,
    1.369_298_809_227_358_053_1e-1,
    1.487_536_129_085_061_485_25e-2,
    7.868_691_311_456_132_591e-4,
    1.846_318_317_510_054_681_8e-5,
    1.421_511_758_316_445_888_7e-7,
    2.044_263_103_389_939_785_64e-15,
];

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ts(values: Vec<f64>) -> TimeSeries {
        TimeSeries::new("t", None, values).unwrap()
    }

    #[test]
    fn znormalize_constant_series_is_all_zeros() {
        assert_eq!(znormalize(&ts(vec![1.0, 1.0, 1.0])).values, vec![0.0; 3]);
    }

    #[test]
    fn znormalize_two_points() {
        assert_eq!(znormalize(&ts(vec![0.0, 2.0])).values, vec![-1.0, 1.0]);
    }

    #[test]
    fn znormalize_postconditions() {
        let z = znormalize(&ts(vec![1.0, 2.0, 3.0, 4.0]));
        let n = z.values.len() as f64;
        let mean = z.values.iter().sum::<f64>() / n;
        let var = z.values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
        assert!(mean.abs() < 1e-12);
        assert!((var.sqrt() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn paa_window_means() {
        assert_eq!(paa(&ts(vec![1.0, 3.0, 5.0, 7.0]), 2).values, vec![2.0, 6.0]);
    }

    #[test]
    fn paa_width_one_is_identity() {
        let series = ts(vec![0.5, -2.0, 3.25]);
        assert_eq!(paa(&series, 1).values, series.values);
    }

    #[test]
    fn paa_partial_final_window() {
        assert_eq!(paa(&ts(vec![1.0, 2.0, 3.0]), 2).values, vec![1.5, 3.0]);
    }

    #[test]
    fn paa_output_length() {
        for n in 1usize..=13 {
            for w in 1usize..=5 {
                let series = ts((0..n).map(|i| i as f64).collect());
                assert_eq!(paa(&series, w).values.len(), n.div_ceil(w));
            }
        }
    }

    #[test]
    fn breakpoints_median_split() {
        assert_eq!(sax_breakpoints(2).unwrap(), vec![0.0]);
    }

    // Quantile oracle values from a high-precision inverse-normal evaluation.
    #[test]
    fn breakpoints_quartiles_and_tertiles() {
        let quartiles = sax_breakpoints(4).unwrap();
        assert_abs_diff_eq!(quartiles[0], -0.674489750196082, epsilon = 1e-8);
        assert_eq!(quartiles[1], 0.0);
        assert_abs_diff_eq!(quartiles[2], 0.674489750196082, epsilon = 1e-8);

        let tertiles = sax_breakpoints(3).unwrap();
        assert_abs_diff_eq!(tertiles[0], -0.430727299295457, epsilon = 1e-8);
        assert_abs_diff_eq!(tertiles[1], 0.430727299295457, epsilon = 1e-8);
    }

    #[test]
    fn breakpoints_reject_bad_alphabet() {
        assert!(matches!(sax_breakpoints(1), Err(Error::InvalidAlphabet(1))));
        assert!(matches!(
            sax_breakpoints(27),
            Err(Error::InvalidAlphabet(27))
        ));
    }

    #[test]
    fn inv_norm_cdf_known_points() {
        assert_abs_diff_eq!(inv_norm_cdf(0.1), -1.2815515655446004, epsilon = 1e-9);
        assert_abs_diff_eq!(inv_norm_cdf(0.05), -1.6448536269514722, epsilon = 1e-9);
        assert_abs_diff_eq!(inv_norm_cdf(0.01), -2.3263478740408408, epsilon = 1e-9);
        assert_abs_diff_eq!(inv_norm_cdf(0.975), 1.959963984540054, epsilon = 1e-9);
        assert_eq!(inv_norm_cdf(0.5), 0.0);
    }

    #[test]
    fn sax_constant_series_is_one_symbol() {
        let seq = sax_discretize(&ts(vec![7.0; 11]), 5, 2).unwrap();
        assert!(seq.symbols.iter().all(|&s| s == seq.symbols[0]));
    }

    #[test]
    fn sax_signs_map_around_zero() {
        let seq = sax_discretize(&ts(vec![-3.0, -3.0, 3.0, 3.0]), 2, 2).unwrap();
        assert_eq!(seq.symbols, vec![0, 1]);
        assert_eq!(seq.alphabet_size, 2);
    }

    #[test]
    fn sax_output_length_is_ceil() {
        let seq = sax_discretize(&ts((0..7).map(|i| i as f64).collect()), 3, 2).unwrap();
        assert_eq!(seq.len(), 4);
    }
}
