//! Dataset loading and model persistence.
//!
//! Two dataset layouts are supported:
//!
//! - `UcrTsv`: one series per line, first field the class label, remaining
//!   tab- or comma-separated fields the values (the layout of the UCR/UEA
//!   time series classification archive);
//! - `Csv`: a header `id,label,v0,v1,...` followed by one row per series;
//!   rows may have different lengths.
//!
//! Models are stored as a single JSON object. Breakpoints are written with
//! 17 significant decimal digits, which round-trips every finite `f64`
//! bit-exactly.

use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::types::{Binning, BreakpointModel, Metric, TimeSeries};

/// On-disk dataset layout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatasetFormat {
    UcrTsv,
    Csv,
}

fn open(path: &Path) -> Result<File> {
    File::open(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

/// Loads every series of a dataset file.
pub fn load_dataset(path: &Path, format: DatasetFormat) -> Result<Vec<TimeSeries>> {
    let file = open(path)?;
    read_dataset(BufReader::new(file), format, &path.display().to_string())
}

/// Reader-based variant of [`load_dataset`]; `path` is only used in error
/// messages.
pub fn read_dataset<R: BufRead>(
    reader: R,
    format: DatasetFormat,
    path: &str,
) -> Result<Vec<TimeSeries>> {
    let series = match format {
        DatasetFormat::UcrTsv => read_ucr(reader, path)?,
        DatasetFormat::Csv => read_csv(reader, path)?,
    };
    if series.is_empty() {
        return Err(Error::EmptyFile { path: path.into() });
    }
    Ok(series)
}

fn parse_value(
    token: &str,
    path: &str,
    line: usize,
    column: usize,
) -> Result<f64> {
    let parse_err = |message: String| Error::Parse {
        path: path.into(),
        line,
        column,
        message,
    };
    let v: f64 = token
        .trim()
        .parse()
        .map_err(|_| parse_err(format!("`{token}` is not a number")))?;
    if !v.is_finite() {
        return Err(parse_err(format!("`{token}` is not a finite number")));
    }
    Ok(v)
}

fn read_ucr<R: BufRead>(reader: R, path: &str) -> Result<Vec<TimeSeries>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = if trimmed.contains('\t') {
            trimmed.split('\t').collect()
        } else {
            trimmed.split(',').collect()
        };
        if fields.len() < 2 {
            return Err(Error::Parse {
                path: path.into(),
                line: i + 1,
                column: 1,
                message: "expected a label followed by at least one value".into(),
            });
        }
        let label = fields[0].trim().to_string();
        let mut values = Vec::with_capacity(fields.len() - 1);
        for (j, token) in fields[1..].iter().enumerate() {
            values.push(parse_value(token, path, i + 1, j + 2)?);
        }
        out.push(TimeSeries {
            id: out.len().to_string(),
            label: Some(label),
            values,
        });
    }
    Ok(out)
}

fn read_csv<R: BufRead>(reader: R, path: &str) -> Result<Vec<TimeSeries>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(reader);
    let mut out = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            path: path.into(),
            line: i + 1,
            column: 1,
            message: e.to_string(),
        })?;
        if i == 0 {
            if record.get(0) != Some("id") || record.get(1) != Some("label") {
                return Err(Error::Parse {
                    path: path.into(),
                    line: 1,
                    column: 1,
                    message: "expected header starting with `id,label`".into(),
                });
            }
            continue;
        }
        let line = i + 1;
        if record.len() < 3 {
            return Err(Error::Parse {
                path: path.into(),
                line,
                column: 1,
                message: "expected id, label and at least one value".into(),
            });
        }
        let id = record.get(0).unwrap_or_default().to_string();
        let label = match record.get(1).unwrap_or_default() {
            "" => None,
            l => Some(l.to_string()),
        };
        let mut values = Vec::with_capacity(record.len() - 2);
        for (j, token) in record.iter().enumerate().skip(2) {
            values.push(parse_value(token, path, line, j + 1)?);
        }
        out.push(TimeSeries { id, label, values });
    }
    Ok(out)
}

/// 17 significant digits: enough to reproduce any finite `f64` exactly.
fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes a model as a single JSON object:
/// `{"metric","binning","bins","breakpoints":[...],"final_score"}`.
pub fn save_model<W: Write>(model: &BreakpointModel, mut writer: W) -> Result<()> {
    let breakpoints = model
        .breakpoints
        .iter()
        .map(|b| format_f64(*b))
        .collect::<Vec<_>>()
        .join(",");
    writeln!(
        writer,
        "{{\"metric\":\"{}\",\"binning\":\"{}\",\"bins\":{},\"breakpoints\":[{}],\"final_score\":{}}}",
        model.metric,
        model.binning,
        model.bins,
        breakpoints,
        format_f64(model.final_score),
    )?;
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    metric: Metric,
    binning: Binning,
    bins: usize,
    breakpoints: Vec<f64>,
    final_score: f64,
}

/// Reads a model written by [`save_model`], validating the schema and the
/// breakpoint invariants.
pub fn load_model<R: Read>(reader: R) -> Result<BreakpointModel> {
    let file: ModelFile =
        serde_json::from_reader(reader).map_err(|e| Error::InvalidModel(e.to_string()))?;
    if file.bins < 2 {
        return Err(Error::InvalidModel(format!(
            "bins must be at least 2, got {}",
            file.bins
        )));
    }
    if file.breakpoints.iter().any(|b| !b.is_finite()) {
        return Err(Error::InvalidModel("non-finite breakpoint".into()));
    }
    if file.breakpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidModel(
            "breakpoints must be strictly increasing".into(),
        ));
    }
    Ok(BreakpointModel {
        breakpoints: file.breakpoints,
        metric: file.metric,
        binning: file.binning,
        bins: file.bins,
        final_score: file.final_score,
    })
}

/// [`save_model`] to a file path.
pub fn save_model_file(model: &BreakpointModel, path: &Path) -> Result<()> {
    save_model(model, File::create(path)?)
}

/// [`load_model`] from a file path.
pub fn load_model_file(path: &Path) -> Result<BreakpointModel> {
    load_model(BufReader::new(open(path)?))
}
