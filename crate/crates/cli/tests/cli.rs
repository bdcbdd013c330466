// SPDX-License-Identifier: Apache-2.0

use std::path::Path;
use std::process::{Command, Output};

use clap::Parser;
use radconst::{ClassId, Region};
use radconst_cli::args::{Cli, Command as Sub};
use radconst_cli::{ProbeRow, SweepRow, TableRow, VerifyRow};

fn radconst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radconst"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn csv_rows<T: serde::de::DeserializeOwned>(bytes: &[u8]) -> Vec<T> {
    csv::Reader::from_reader(bytes)
        .deserialize()
        .collect::<Result<_, _>>()
        .expect("well-formed csv")
}

fn common(args: &[&str]) -> radconst_cli::args::Common {
    let full: Vec<&str> = ["radconst", "table"].iter().chain(args).copied().collect();
    match Cli::parse_from(full).command {
        Sub::Table(c) => c,
        _ => unreachable!(),
    }
}

fn find<'a>(rows: &'a [TableRow], class: ClassId, target: &str) -> &'a TableRow {
    rows.iter()
        .find(|r| r.class == class && r.target == target)
        .unwrap_or_else(|| panic!("no row {class} {target}"))
}

#[test]
fn table_reproduces_printed_rows() {
    let out = radconst(&["table"]);
    assert!(out.status.success());
    let rows: Vec<TableRow> = csv_rows(&out.stdout);
    // 9 rows for each of F1, F2, F3, F5 and 5 for each convex class.
    assert_eq!(rows.len(), 56);
    assert!((find(&rows, ClassId::F6, "UCV").radius - 0.101021).abs() < 1e-6);
    assert!((find(&rows, ClassId::F1, "S*(0)").radius - 0.236068).abs() < 1e-6);
    assert_eq!(find(&rows, ClassId::F5, "M(2)").radius, 1.0 / 3.0);
    assert!(rows.iter().all(|r| r.version == env!("CARGO_PKG_VERSION")));
    let order: Vec<ClassId> = rows.iter().map(|r| r.class).collect();
    let mut sorted = order.clone();
    sorted.sort();
    assert_eq!(order, sorted);
}

#[test]
fn table_filters_and_parameters() {
    let out = radconst(&["table", "--classes", "F1", "--regions", "min", "--alpha", "0"]);
    let rows: Vec<TableRow> = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 1);
    assert!((rows[0].radius - (5f64.sqrt() - 2.0)).abs() < 1e-15);
    assert_eq!(rows[0].parameter, Some(0.0));
    let out = radconst(&["table", "--classes", "F5", "--regions", "max", "--beta", "2"]);
    let rows: Vec<TableRow> = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].radius, 1.0 / 3.0);
    assert!(!rows[0].sharp);
}

#[test]
fn csv_and_json_round_trip() {
    let c = common(&[]);
    let in_memory = radconst_cli::table(&c).unwrap();
    let from_csv: Vec<TableRow> = csv_rows(&radconst(&["table"]).stdout);
    for (a, b) in from_csv.iter().zip(&in_memory) {
        assert_eq!(a, b);
    }
    assert_eq!(from_csv.len(), in_memory.len());
    let json = radconst(&["table", "--format", "json"]).stdout;
    let from_json: Vec<TableRow> = serde_json::from_slice(&json).unwrap();
    assert_eq!(from_json, in_memory);

    let sweep = radconst_cli::sweep(&common(&[])).unwrap();
    let from_csv: Vec<SweepRow> = csv_rows(&radconst(&["sweep"]).stdout);
    assert_eq!(from_csv, sweep);
}

#[test]
fn sweep_agrees_within_tolerance() {
    let rows: Vec<SweepRow> = csv_rows(&radconst(&["sweep"]).stdout);
    // 17 rows for each of F1, F2, F3, F5 and 11 for each convex class.
    assert_eq!(rows.len(), 112);
    for r in &rows {
        assert!(r.difference.abs() <= 1e-9, "{r:?}");
    }
}

#[test]
fn probe_rows_match_conjectures() {
    let out = radconst(&["probe", "--regions", "lemniscate,parabola", "--format", "json"]);
    assert!(out.status.success());
    let rows: Vec<ProbeRow> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.len(), 3);
    for (row, printed) in rows.iter().zip([0.171573, 0.142009, 0.198912]) {
        assert!((row.probe - printed).abs() < 1e-5, "{row:?}");
        assert!(row.proven <= row.probe);
    }
}

#[test]
fn verify_default_run_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = radconst(&["verify", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let rows: Vec<VerifyRow> = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(rows.len(), 24);
    assert!(rows.iter().all(|r| r.passed && r.seed == 2012));
    assert_eq!(rows.iter().filter(|r| r.sharp).count(), 19);
}

#[test]
fn verify_single_conjectured_pair() {
    let out = radconst(&["verify", "--classes", "F2", "--regions", "parabola"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<VerifyRow> = csv_rows(&out.stdout);
    assert_eq!(rows.len(), 1);
    assert!((rows[0].formula - 0.162278).abs() < 1e-6);
    assert!((rows[0].probe.unwrap() - 0.171573).abs() < 1e-6);
}

#[test]
fn usage_errors_exit_with_two() {
    for (args, flag) in [
        (vec!["verify", "--tol", "-1"], "--tol"),
        (vec!["table", "--alpha", "1.5"], "--alpha"),
        (vec!["table", "--beta", "0.5"], "--beta"),
        (vec!["verify", "--samples", "10"], "--samples"),
        (vec!["verify", "--grid", "16"], "--grid"),
        (vec!["plot-data", "--classes", "F1", "--regions", "sl", "--radius", "1"], "--radius"),
    ] {
        let out = radconst(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(flag), "{args:?}");
    }
    assert_eq!(radconst(&["table", "--classes", "F9"]).status.code(), Some(2));
    assert_eq!(radconst(&["frobnicate"]).status.code(), Some(2));
}

fn plot(dir: &Path, name: &str, class: &str, region: &str, r: &str) -> Vec<u8> {
    let path = dir.join(name);
    let out = radconst(&[
        "plot-data", "--classes", class, "--regions", region, "--radius", r, "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    std::fs::read(path).unwrap()
}

fn image_margins(bytes: &[u8], region: Region) -> Vec<f64> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(bytes);
    reader
        .records()
        .map(|r| r.unwrap())
        .filter(|r| &r[0] == "image")
        .map(|r| {
            let w = num_complex::Complex64::new(r[2].parse().unwrap(), r[3].parse().unwrap());
            region.margin(w)
        })
        .collect()
}

#[test]
fn plot_data_is_deterministic_and_shows_tangency() {
    let dir = tempfile::tempdir().unwrap();
    let a = plot(dir.path(), "a.csv", "F1", "lemniscate", "0.05");
    let b = plot(dir.path(), "b.csv", "F1", "lemniscate", "0.05");
    assert_eq!(a, b);
    assert!(String::from_utf8_lossy(&a).starts_with("# radconst"));
    let inside = image_margins(&a, Region::Lemniscate);
    assert_eq!(inside.len(), 512);
    assert!(inside.iter().all(|&m| m > 0.0));

    let r = radconst::formula_radius(ClassId::F1, &Region::Lemniscate).unwrap().value;
    let touching = plot(dir.path(), "c.csv", "F1", "lemniscate", &r.to_string());
    let min = image_margins(&touching, Region::Lemniscate)
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    assert!(min.abs() < 1e-9, "{min}");

    // Past the radius the image leaves the region; still allowed.
    let past = plot(dir.path(), "d.csv", "F6", "parabola", "0.3");
    assert!(image_margins(&past, Region::Parabola).iter().any(|&m| m < 0.0));
}
