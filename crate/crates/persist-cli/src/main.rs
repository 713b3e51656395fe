//! Command-line front end: fit, apply, sax, score and eval subcommands
//! wiring the library into reproducible file-based pipelines.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 I/O error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use persist_core::error::{Error, Result};
use persist_core::eval::{evaluate, DiscretizerConfig};
use persist_core::events::{run_length_encode, EventSequence};
use persist_core::io::{load_dataset, load_model_file, save_model, DatasetFormat};
use persist_core::persist::fit_multi_with_trace;
use persist_core::sax::sax_discretize;
use persist_core::score::{persistence_aggregate, persistence_symbol};
use persist_core::stats::estimate_stats_pooled;
use persist_core::{Binning, Metric, PersistConfig, SymbolSequence, TimeSeries};

#[derive(Parser)]
#[command(name = "persist", version, about = "Persistence-driven symbolic discretization of time series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit breakpoints by greedy persistence maximization
    Fit(FitArgs),
    /// Discretize a dataset with a fitted model
    Apply(ApplyArgs),
    /// Discretize a dataset with the SAX baseline
    Sax(SaxArgs),
    /// Print per-symbol probabilities and persistence for a model
    Score(ScoreArgs),
    /// Fit on a train split, classify the test split, write a JSON report
    Eval(EvalArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    UcrTsv,
    Csv,
}

impl From<FormatArg> for DatasetFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::UcrTsv => DatasetFormat::UcrTsv,
            FormatArg::Csv => DatasetFormat::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Kl,
    Wasserstein,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Kl => Metric::Kl,
            MetricArg::Wasserstein => Metric::Wasserstein,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BinningArg {
    Ef,
    Ew,
}

impl From<BinningArg> for Binning {
    fn from(b: BinningArg) -> Self {
        match b {
            BinningArg::Ef => Binning::EqualFrequency,
            BinningArg::Ew => Binning::EqualWidth,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitArg {
    Symbols,
    Events,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiscretizerArg {
    Persist,
    Sax,
}

#[derive(Args)]
struct FitArgs {
    /// Dataset to fit on
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "ucr-tsv")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "wasserstein")]
    metric: MetricArg,
    #[arg(long, value_enum, default_value = "ef")]
    binning: BinningArg,
    /// Candidate bin count (bins - 1 candidate breakpoints)
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
    bins: u64,
    /// Where to write the model JSON
    #[arg(long)]
    output: PathBuf,
}

#[derive(Args)]
struct ApplyArgs {
    /// Fitted model JSON
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "ucr-tsv")]
    format: FormatArg,
    #[arg(long)]
    output: PathBuf,
    /// Output layout: one CSV row of symbols per series, or JSON-lines
    /// run-length events
    #[arg(long, value_enum, default_value = "symbols")]
    emit: EmitArg,
}

#[derive(Args)]
struct SaxArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "ucr-tsv")]
    format: FormatArg,
    /// Alphabet size
    #[arg(long, value_parser = clap::value_parser!(u64).range(2..=26))]
    alphabet: u64,
    /// PAA window width in samples
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    paa: u64,
    #[arg(long)]
    output: PathBuf,
    #[arg(long, value_enum, default_value = "symbols")]
    emit: EmitArg,
}

#[derive(Args)]
struct ScoreArgs {
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "ucr-tsv")]
    format: FormatArg,
    /// Emit machine-readable JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    train: PathBuf,
    #[arg(long)]
    test: PathBuf,
    #[arg(long, value_enum, default_value = "ucr-tsv")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "persist")]
    discretizer: DiscretizerArg,
    #[arg(long, value_enum, default_value = "wasserstein")]
    metric: MetricArg,
    #[arg(long, value_enum, default_value = "ef")]
    binning: BinningArg,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
    bins: u64,
    /// SAX alphabet size (with --discretizer sax)
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..=26))]
    alphabet: u64,
    /// SAX PAA window width (with --discretizer sax)
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    paa: u64,
    /// Where to write the JSON report
    #[arg(long)]
    output: PathBuf,
    /// Dataset name for the report (default: train file stem)
    #[arg(long)]
    name: Option<String>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Fit(args) => cmd_fit(args),
        Command::Apply(args) => cmd_apply(args),
        Command::Sax(args) => cmd_sax(args),
        Command::Score(args) => cmd_score(args),
        Command::Eval(args) => cmd_eval(args),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => 3,
                _ => 2,
            }
        }
    }
}

/// Writes through a temp file in the target directory, then renames.
fn write_atomic(path: &Path, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    write(tmp.as_file_mut())?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn cmd_fit(args: FitArgs) -> Result<()> {
    let dataset = load_dataset(&args.input, args.format.into())?;
    let config = PersistConfig {
        metric: args.metric.into(),
        binning: args.binning.into(),
        bins: args.bins as usize,
    };
    let started = Instant::now();
    let (model, trace) = fit_multi_with_trace(&dataset, &config)?;
    let elapsed = started.elapsed().as_secs_f64();
    write_atomic(&args.output, |w| save_model(&model, w))?;
    println!(
        "accepted {} breakpoints in {} iterations ({elapsed:.2}s)",
        model.breakpoints.len(),
        trace.len()
    );
    println!("alphabet size: {}", model.alphabet_size());
    println!("final score: {:.6}", model.final_score);
    println!("model written to {}", args.output.display());
    Ok(())
}

fn emit_sequences(seqs: &[SymbolSequence], output: &Path, emit: EmitArg) -> Result<()> {
    match emit {
        EmitArg::Symbols => write_atomic(output, |w| write_symbols_csv(seqs, w)),
        EmitArg::Events => {
            let events: Vec<EventSequence> = seqs.iter().map(run_length_encode).collect();
            write_atomic(output, |w| persist_core::events::export_events(&events, w))
        }
    }
}

/// One row per series: id, label (may be empty), then one field per symbol.
fn write_symbols_csv(seqs: &[SymbolSequence], writer: &mut dyn Write) -> Result<()> {
    let mut csv = csv::WriterBuilder::new().flexible(true).from_writer(writer);
    for seq in seqs {
        let mut record = Vec::with_capacity(seq.len() + 2);
        record.push(seq.id.clone());
        record.push(seq.label.clone().unwrap_or_default());
        record.extend(seq.symbols.iter().map(|s| s.to_string()));
        csv.write_record(&record)
            .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    }
    csv.flush()?;
    Ok(())
}

fn cmd_apply(args: ApplyArgs) -> Result<()> {
    let model = load_model_file(&args.model)?;
    let dataset = load_dataset(&args.input, args.format.into())?;
    let seqs: Vec<SymbolSequence> = dataset.iter().map(|ts| model.discretize(ts)).collect();
    emit_sequences(&seqs, &args.output, args.emit)?;
    println!(
        "discretized {} series (alphabet size {}) to {}",
        seqs.len(),
        model.alphabet_size(),
        args.output.display()
    );
    Ok(())
}

fn cmd_sax(args: SaxArgs) -> Result<()> {
    let dataset = load_dataset(&args.input, args.format.into())?;
    let seqs: Vec<SymbolSequence> = dataset
        .iter()
        .map(|ts| sax_discretize(ts, args.alphabet as usize, args.paa as usize))
        .collect::<Result<_>>()?;
    emit_sequences(&seqs, &args.output, args.emit)?;
    println!(
        "discretized {} series (alphabet size {}, paa width {}) to {}",
        seqs.len(),
        args.alphabet,
        args.paa,
        args.output.display()
    );
    Ok(())
}

fn cmd_score(args: ScoreArgs) -> Result<()> {
    let model = load_model_file(&args.model)?;
    let dataset = load_dataset(&args.input, args.format.into())?;
    let seqs: Vec<SymbolSequence> = dataset.iter().map(|ts| model.discretize(ts)).collect();
    let stats = estimate_stats_pooled(&seqs);
    let aggregate_kl = persistence_aggregate(&stats, Metric::Kl);
    let aggregate_w = persistence_aggregate(&stats, Metric::Wasserstein);

    if args.json {
        let symbols: Vec<serde_json::Value> = stats
            .iter()
            .map(|s| {
                serde_json::json!({
                    "symbol": s.symbol,
                    "count": s.count,
                    "p_appear": s.p_appear,
                    "p_repeat": s.p_repeat,
                    "persistence_kl": persistence_symbol(s, Metric::Kl),
                    "persistence_wasserstein": persistence_symbol(s, Metric::Wasserstein),
                })
            })
            .collect();
        let doc = serde_json::json!({
            "alphabet_size": model.alphabet_size(),
            "symbols": symbols,
            "aggregate_kl": aggregate_kl,
            "aggregate_wasserstein": aggregate_w,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    } else {
        println!(
            "{:>6} {:>8} {:>10} {:>10} {:>12} {:>12}",
            "symbol", "count", "p_appear", "p_repeat", "pers_kl", "pers_w"
        );
        for s in &stats {
            let p_repeat = s
                .p_repeat
                .map_or_else(|| "undef".to_string(), |p| format!("{p:.6}"));
            println!(
                "{:>6} {:>8} {:>10.6} {:>10} {:>12.6} {:>12.6}",
                s.symbol,
                s.count,
                s.p_appear,
                p_repeat,
                persistence_symbol(s, Metric::Kl),
                persistence_symbol(s, Metric::Wasserstein),
            );
        }
        println!("aggregate kl: {aggregate_kl:.6}");
        println!("aggregate wasserstein: {aggregate_w:.6}");
    }
    Ok(())
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let train: Vec<TimeSeries> = load_dataset(&args.train, args.format.into())?;
    let test: Vec<TimeSeries> = load_dataset(&args.test, args.format.into())?;
    let discretizer = match args.discretizer {
        DiscretizerArg::Persist => DiscretizerConfig::Persist(PersistConfig {
            metric: args.metric.into(),
            binning: args.binning.into(),
            bins: args.bins as usize,
        }),
        DiscretizerArg::Sax => DiscretizerConfig::Sax {
            alphabet: args.alphabet as usize,
            width: args.paa as usize,
        },
    };
    let name = args.name.unwrap_or_else(|| {
        args.train
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "dataset".to_string())
    });
    let report = evaluate(&name, &train, &test, &discretizer)?;
    write_atomic(&args.output, |w| {
        serde_json::to_writer_pretty(&mut *w, &report)
            .map_err(|e| Error::Io(std::io::Error::other(e)))?;
        writeln!(w)?;
        Ok(())
    })?;
    println!("dataset: {}", report.dataset);
    println!("accuracy: {:.4}", report.accuracy);
    println!("mean events per series: {:.2}", report.mean_events_per_series);
    println!("report written to {}", args.output.display());
    Ok(())
}
