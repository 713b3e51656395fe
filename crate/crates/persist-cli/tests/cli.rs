//! End-to-end tests of the `persist` binary.

mod common;

use std::fs;
use std::path::{Path, PathBuf};

use common::{run, write_ucr, TempDir};
use persist_core::eval::{evaluate, DiscretizerConfig};
use persist_core::events::import_events;
use persist_core::io::{load_dataset, load_model_file, DatasetFormat};
use persist_core::persist::fit_multi;
use persist_core::{PersistConfig, TimeSeries};
use persist_testdata::{square_wave, two_class_split};

fn tempdir() -> TempDir {
    TempDir::new("cli")
}

fn square_wave_file(dir: &Path) -> PathBuf {
    let dataset: Vec<TimeSeries> = (0..3)
        .map(|seed| {
            let mut ts = square_wave(seed, 20, 50);
            ts.label = Some("1".into());
            ts
        })
        .collect();
    let path = dir.join("square.tsv");
    write_ucr(&path, &dataset);
    path
}

#[test]
fn fit_writes_model_and_reports_score() {
    let dir = tempdir();
    let input = square_wave_file(dir.path());
    let model_path = dir.path().join("model.json");
    let out = run(&[
        "fit",
        "--input",
        input.to_str().unwrap(),
        "--output",
        model_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("final score:"));
    assert!(stdout.contains("alphabet size: 2"));

    let model = load_model_file(&model_path).unwrap();
    assert_eq!(model.breakpoints.len(), 1);
    assert!(model.final_score > 0.0);
}

#[test]
fn fit_degenerate_series_exits_2() {
    let dir = tempdir();
    let input = dir.path().join("const.tsv");
    fs::write(&input, "1\t5.0\t5.0\t5.0\n").unwrap();
    let out = run(&[
        "fit",
        "--input",
        input.to_str().unwrap(),
        "--output",
        dir.path().join("m.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate series"));
}

#[test]
fn unknown_metric_exits_1() {
    let dir = tempdir();
    let input = square_wave_file(dir.path());
    let out = run(&[
        "fit",
        "--input",
        input.to_str().unwrap(),
        "--metric",
        "euclidean",
        "--output",
        dir.path().join("m.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn missing_model_exits_3() {
    let dir = tempdir();
    let input = square_wave_file(dir.path());
    let out = run(&[
        "apply",
        "--model",
        dir.path().join("missing.json").to_str().unwrap(),
        "--input",
        input.to_str().unwrap(),
        "--output",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sax_alphabet_below_2_exits_1() {
    let dir = tempdir();
    let input = square_wave_file(dir.path());
    let out = run(&[
        "sax",
        "--input",
        input.to_str().unwrap(),
        "--alphabet",
        "1",
        "--output",
        dir.path().join("x").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn eval_help_exits_0() {
    let out = run(&["eval", "--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("--train"));
}

#[test]
fn apply_events_decode_to_apply_symbols() {
    let dir = tempdir();
    let input = square_wave_file(dir.path());
    let model_path = dir.path().join("model.json");
    assert!(run(&[
        "fit",
        "--input",
        input.to_str().unwrap(),
        "--output",
        model_path.to_str().unwrap(),
    ])
    .status
    .success());

    let symbols_path = dir.path().join("symbols.csv");
    let events_path = dir.path().join("events.jsonl");
    for (emit, path) in [("symbols", &symbols_path), ("events", &events_path)] {
        assert!(run(&[
            "apply",
            "--model",
            model_path.to_str().unwrap(),
            "--input",
            input.to_str().unwrap(),
            "--output",
            path.to_str().unwrap(),
            "--emit",
            emit,
        ])
        .status
        .success());
    }

    let model = load_model_file(&model_path).unwrap();
    let events = import_events(fs::read(&events_path).unwrap().as_slice()).unwrap();
    let decoded: Vec<Vec<usize>> = events.iter().map(|e| e.decode().symbols).collect();

    let symbol_rows: Vec<Vec<usize>> = fs::read_to_string(&symbols_path)
        .unwrap()
        .lines()
        .map(|line| {
            line.split(',')
                .skip(2)
                .map(|f| f.parse().unwrap())
                .collect()
        })
        .collect();

    assert_eq!(decoded, symbol_rows);
    for row in &symbol_rows {
        assert!(row.iter().all(|&s| s < model.alphabet_size()));
    }
}

#[test]
fn file_pipeline_matches_in_library_pipeline() {
    let dir = tempdir();
    let (train, test) = two_class_split(77, 8, 300);
    let train_path = dir.path().join("train.tsv");
    let test_path = dir.path().join("test.tsv");
    write_ucr(&train_path, &train);
    write_ucr(&test_path, &test);

    let model_path = dir.path().join("model.json");
    let report_path = dir.path().join("report.json");
    assert!(run(&[
        "fit",
        "--input",
        train_path.to_str().unwrap(),
        "--output",
        model_path.to_str().unwrap(),
    ])
    .status
    .success());
    assert!(run(&[
        "eval",
        "--train",
        train_path.to_str().unwrap(),
        "--test",
        test_path.to_str().unwrap(),
        "--output",
        report_path.to_str().unwrap(),
    ])
    .status
    .success());

    // The same pipeline through the library, on the same loaded bytes.
    let train_loaded = load_dataset(&train_path, DatasetFormat::UcrTsv).unwrap();
    let test_loaded = load_dataset(&test_path, DatasetFormat::UcrTsv).unwrap();
    let config = PersistConfig::default();
    let lib_model = fit_multi(&train_loaded, &config).unwrap();
    let file_model = load_model_file(&model_path).unwrap();
    assert_eq!(lib_model.breakpoints.len(), file_model.breakpoints.len());
    for (a, b) in lib_model.breakpoints.iter().zip(&file_model.breakpoints) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
    assert_eq!(
        lib_model.final_score.to_bits(),
        file_model.final_score.to_bits()
    );

    let lib_report = evaluate(
        "train",
        &train_loaded,
        &test_loaded,
        &DiscretizerConfig::Persist(config),
    )
    .unwrap();
    let file_report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(
        file_report["accuracy"].as_f64().unwrap().to_bits(),
        lib_report.accuracy.to_bits()
    );
    assert_eq!(
        file_report["mean_events_per_series"]
            .as_f64()
            .unwrap()
            .to_bits(),
        lib_report.mean_events_per_series.to_bits()
    );
    assert_eq!(
        file_report["alphabet_size"].as_u64().unwrap() as usize,
        lib_report.alphabet_size
    );
    assert_eq!(file_report["metric"], "wasserstein");
    assert_eq!(file_report["binning"], "ef");
}

#[test]
fn eval_with_sax_discretizer() {
    let dir = tempdir();
    let (train, test) = two_class_split(3, 6, 240);
    let train_path = dir.path().join("train.tsv");
    let test_path = dir.path().join("test.tsv");
    write_ucr(&train_path, &train);
    write_ucr(&test_path, &test);
    let report_path = dir.path().join("report.json");
    let out = run(&[
        "eval",
        "--train",
        train_path.to_str().unwrap(),
        "--test",
        test_path.to_str().unwrap(),
        "--discretizer",
        "sax",
        "--alphabet",
        "4",
        "--paa",
        "1",
        "--output",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{out:?}");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["metric"], "sax");
    assert!(report["binning"].is_null());
    assert_eq!(report["alphabet_size"].as_u64(), Some(4));
}

#[test]
fn score_json_is_machine_readable() {
    let dir = tempdir();
    let input = square_wave_file(dir.path());
    let model_path = dir.path().join("model.json");
    assert!(run(&[
        "fit",
        "--input",
        input.to_str().unwrap(),
        "--output",
        model_path.to_str().unwrap(),
    ])
    .status
    .success());
    let out = run(&[
        "score",
        "--model",
        model_path.to_str().unwrap(),
        "--input",
        input.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["alphabet_size"].as_u64(), Some(2));
    assert_eq!(doc["symbols"].as_array().unwrap().len(), 2);
    let agg_w = doc["aggregate_wasserstein"].as_f64().unwrap();
    let model = load_model_file(&model_path).unwrap();
    // One series per line were pooled at fit time too, so scoring the
    // training data reproduces the fitted score.
    assert!((agg_w - model.final_score).abs() < 1e-12);
}
