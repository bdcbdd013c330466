// SPDX-License-Identifier: Apache-2.0

//! Command implementations behind the `radconst` binary.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::Context;
use radconst::certify::{lemma_suite, printed_constants, CertificationReport, ConjectureStatus};
use radconst::radii::{covered_kinds, target_label};
use radconst::{
    build_report, conjecture_probe, conjectured_radius, formula_radius, solve_radius,
    CertifyConfig, ClassId, Region,
};
use serde::{Deserialize, Serialize};

pub mod args;
pub mod plot;

use args::{Cli, Command, Common, Format};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

const TABLE_ALPHA: [f64; 4] = [0.0, 0.25, 0.5, 0.75];
const TABLE_BETA: [f64; 3] = [1.5, 2.0, 4.0];
const VERIFY_ALPHA: [f64; 1] = [0.0];
const VERIFY_BETA: [f64; 1] = [2.0];
const SWEEP_ALPHA: [f64; 10] = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
const SWEEP_BETA: [f64; 5] = [1.1, 1.5, 2.0, 5.0, 10.0];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub version: String,
    pub class: ClassId,
    pub target: String,
    pub parameter: Option<f64>,
    pub radius: f64,
    pub sharp: bool,
    pub provenance: String,
    pub closed_form: String,
    pub conjecture: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub version: String,
    pub class: ClassId,
    pub target: String,
    pub parameter: Option<f64>,
    pub formula: f64,
    pub solver: f64,
    pub difference: f64,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeRow {
    pub version: String,
    pub class: ClassId,
    pub target: String,
    pub parameter: Option<f64>,
    pub proven: f64,
    pub conjecture: f64,
    pub probe: f64,
    pub difference: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub version: String,
    pub seed: u64,
    pub class: ClassId,
    pub target: String,
    pub parameter: Option<f64>,
    pub formula: f64,
    pub sharp: bool,
    pub provenance: Option<String>,
    pub solver: Option<f64>,
    pub margin_at_r: Option<f64>,
    pub margin_beyond: Option<f64>,
    pub soundness_margin: Option<f64>,
    pub empirical_lo: Option<f64>,
    pub empirical_hi: Option<f64>,
    pub extremal_exit: Option<f64>,
    pub conjecture: Option<f64>,
    pub probe: Option<f64>,
    pub conjecture_status: Option<ConjectureStatus>,
    pub members: usize,
    pub grid: usize,
    pub passed: bool,
    pub failures: String,
}

impl VerifyRow {
    fn from_report(run_seed: u64, r: &CertificationReport) -> Self {
        VerifyRow {
            version: VERSION.to_string(),
            seed: run_seed,
            class: r.class,
            target: r.target.clone(),
            parameter: r.region.parameter(),
            formula: r.formula,
            sharp: r.sharp,
            provenance: r.provenance.map(|p| p.to_string()),
            solver: r.solver,
            margin_at_r: r.sharpness.map(|s| s.margin_at_r),
            margin_beyond: r.sharpness.and_then(|s| s.margin_beyond),
            soundness_margin: r.soundness_margin,
            empirical_lo: r.empirical.map(|e| e.lo),
            empirical_hi: r.empirical.map(|e| e.hi),
            extremal_exit: r.empirical.map(|e| e.extremal_exit),
            conjecture: r.conjecture,
            probe: r.probe,
            conjecture_status: r.conjecture_status,
            members: r.members,
            grid: r.grid,
            passed: r.passed(),
            failures: r.diagnostics().join("; "),
        }
    }
}

/// Opens `--out` or stdout.
pub fn open_output(out: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

/// Writes rows as CSV with a header or as one JSON array.
pub fn write_rows<T: Serialize>(rows: &[T], format: Format, out: Option<&Path>) -> anyhow::Result<()> {
    let mut sink = open_output(out)?;
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut sink);
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut sink, rows)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

/// Covered (class, region) pairs for the filters, in table order.
fn pairs(common: &Common, alpha: &[f64], beta: &[f64]) -> Vec<(ClassId, Region)> {
    let grids = common.grids(alpha, beta);
    let regions = common.regions(&grids);
    common
        .classes()
        .into_iter()
        .flat_map(|class| {
            regions
                .iter()
                .filter(move |r| covered_kinds(class).contains(&r.kind()))
                .map(move |&r| (class, r))
                .collect::<Vec<_>>()
        })
        .collect()
}

pub fn table(common: &Common) -> anyhow::Result<Vec<TableRow>> {
    pairs(common, &TABLE_ALPHA, &TABLE_BETA)
        .into_iter()
        .map(|(class, region)| {
            let r = formula_radius(class, &region)?;
            Ok(TableRow {
                version: VERSION.to_string(),
                class,
                target: r.target_label(),
                parameter: region.parameter(),
                radius: r.value,
                sharp: r.sharp,
                provenance: r.provenance.to_string(),
                closed_form: r.closed_form,
                conjecture: r.conjecture,
            })
        })
        .collect()
}

pub fn sweep(common: &Common) -> anyhow::Result<Vec<SweepRow>> {
    pairs(common, &SWEEP_ALPHA, &SWEEP_BETA)
        .into_iter()
        .map(|(class, region)| {
            let formula = formula_radius(class, &region)?.value;
            let solver = solve_radius(class, &region, common.tol)?;
            Ok(SweepRow {
                version: VERSION.to_string(),
                class,
                target: target_label(class, &region),
                parameter: region.parameter(),
                formula,
                solver,
                difference: solver - formula,
                tol: common.tol,
            })
        })
        .collect()
}

pub fn probe(common: &Common) -> anyhow::Result<Vec<ProbeRow>> {
    pairs(common, &TABLE_ALPHA, &TABLE_BETA)
        .into_iter()
        .filter(|(class, region)| conjectured_radius(*class, region).is_ok())
        .map(|(class, region)| {
            let conjecture = conjectured_radius(class, &region)?.value;
            let probe = conjecture_probe(class, &region)?;
            Ok(ProbeRow {
                version: VERSION.to_string(),
                class,
                target: target_label(class, &region),
                parameter: region.parameter(),
                proven: formula_radius(class, &region)?.value,
                conjecture,
                probe,
                difference: probe - conjecture,
            })
        })
        .collect()
}

/// Result of `verify`: per-pair rows plus the run-wide suites.
pub struct Verification {
    pub rows: Vec<VerifyRow>,
    pub suite_failures: Vec<String>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.suite_failures.is_empty() && self.rows.iter().all(|r| r.passed)
    }
}

pub fn verify(common: &Common) -> anyhow::Result<Verification> {
    let config = CertifyConfig {
        members: common.samples,
        grid: common.grid,
        seed: common.seed,
    };
    let grids = common.grids(&VERIFY_ALPHA, &VERIFY_BETA);
    let regions = common.regions(&grids);
    let reports = build_report(&common.classes(), &regions, &config);
    let rows = reports
        .iter()
        .map(|r| VerifyRow::from_report(common.seed, r))
        .collect();

    let mut suite_failures = Vec::new();
    for c in printed_constants().into_iter().filter(|c| !c.passed) {
        suite_failures.push(format!(
            "printed constant {} {}: computed {} vs {}",
            c.class, c.target, c.computed, c.printed
        ));
    }
    let lemmas = lemma_suite(500, common.seed);
    if !lemmas.passed() {
        suite_failures.push(format!("lemma suite: {lemmas:?}"));
    }
    Ok(Verification {
        rows,
        suite_failures,
    })
}

pub fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Table(common) => {
            common.validate()?;
            write_rows(&table(&common)?, common.format, common.out.as_deref())?;
        }
        Command::Sweep(common) => {
            common.validate()?;
            write_rows(&sweep(&common)?, common.format, common.out.as_deref())?;
        }
        Command::Probe(common) => {
            common.validate()?;
            write_rows(&probe(&common)?, common.format, common.out.as_deref())?;
        }
        Command::Verify(common) => {
            common.validate()?;
            let v = verify(&common)?;
            write_rows(&v.rows, common.format, common.out.as_deref())?;
            for row in v.rows.iter().filter(|r| !r.passed) {
                eprintln!("FAIL {}", row.failures);
            }
            for row in &v.rows {
                if row.conjecture_status == Some(ConjectureStatus::Contradicted) {
                    eprintln!(
                        "NOTE {} {}: a sampled member exits at r = {} before the conjectured {}",
                        row.class,
                        row.target,
                        row.empirical_hi.unwrap_or(f64::NAN),
                        row.conjecture.unwrap_or(f64::NAN)
                    );
                }
            }
            for failure in &v.suite_failures {
                eprintln!("FAIL {failure}");
            }
            let failed = v.rows.iter().filter(|r| !r.passed).count();
            eprintln!(
                "verify: {} rows, {failed} failed, seed {}, radconst {VERSION}",
                v.rows.len(),
                common.seed
            );
            if !v.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::PlotData(args) => {
            let region = args.validate()?;
            let data = plot::plot_data(args.classes, &region, args.radius)?;
            let mut sink = open_output(args.out.as_deref())?;
            plot::write_csv(&data, &mut sink)?;
            sink.flush()?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
