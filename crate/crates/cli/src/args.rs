// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use radconst::{ClassId, Region, RegionKind};

#[derive(Debug, Parser)]
#[command(name = "radconst", version, about = "Radius constants for ratio-defined classes of analytic functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form radius for every covered (class, target, parameter).
    Table(Common),
    /// Certify each covered pair; exits 1 when any check fails.
    Verify(Common),
    /// Closed form against the bisection solver over parameter grids.
    Sweep(Common),
    /// Exit radii of the candidate extremals for the conjectured pairs.
    Probe(Common),
    /// Image of |z| = r under the extremal functional, plus the region boundary.
    PlotData(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Classes to include, e.g. `F1,F5` (default: all).
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<ClassId>,
    /// Targets: lemniscate, max, min, parabola (default: all).
    #[arg(long, value_delimiter = ',')]
    pub regions: Vec<RegionKind>,
    /// Orders α for Re w > α, each in [0, 1).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub alpha: Vec<f64>,
    /// Bounds β for Re w < β, each > 1.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub beta: Vec<f64>,
    #[arg(long, default_value_t = 2012)]
    pub seed: u64,
    /// Sampled members per (class, target).
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Points per circle.
    #[arg(long, default_value_t = 256)]
    pub grid: usize,
    /// Bracket width of the bisection solver.
    #[arg(long, default_value_t = 1e-13, allow_negative_numbers = true)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PlotArgs {
    /// A single class.
    #[arg(long)]
    pub classes: ClassId,
    /// A single target.
    #[arg(long)]
    pub regions: RegionKind,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    pub beta: f64,
    /// Modulus of the circle mapped by the functional, in (0, 1).
    #[arg(long, allow_negative_numbers = true)]
    pub radius: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A bad flag value; reported with exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: String) -> anyhow::Error {
    UsageError(msg).into()
}

pub fn check_alpha(alpha: f64) -> anyhow::Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(usage(format!("--alpha {alpha} is outside [0, 1)")))
    }
}

pub fn check_beta(beta: f64) -> anyhow::Result<()> {
    if beta > 1.0 && beta.is_finite() {
        Ok(())
    } else {
        Err(usage(format!("--beta {beta} must be a finite number > 1")))
    }
}

/// Parameter grids after defaults are applied.
pub struct Grids {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

impl Common {
    pub fn validate(&self) -> anyhow::Result<()> {
        self.alpha.iter().try_for_each(|&a| check_alpha(a))?;
        self.beta.iter().try_for_each(|&b| check_beta(b))?;
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(usage(format!("--tol {} must be a finite number > 0", self.tol)));
        }
        if self.samples < radconst::certify::MIN_MEMBERS {
            return Err(usage(format!(
                "--samples {} is below the minimum of {}",
                self.samples,
                radconst::certify::MIN_MEMBERS
            )));
        }
        if self.grid < radconst::certify::MIN_GRID {
            return Err(usage(format!(
                "--grid {} is below the minimum of {}",
                self.grid,
                radconst::certify::MIN_GRID
            )));
        }
        Ok(())
    }

    pub fn classes(&self) -> Vec<ClassId> {
        let mut out = if self.classes.is_empty() {
            ClassId::ALL.to_vec()
        } else {
            self.classes.clone()
        };
        out.sort();
        out.dedup();
        out
    }

    pub fn grids(&self, alpha: &[f64], beta: &[f64]) -> Grids {
        let pick = |given: &[f64], default: &[f64]| {
            if given.is_empty() {
                default.to_vec()
            } else {
                given.to_vec()
            }
        };
        Grids {
            alpha: pick(&self.alpha, alpha),
            beta: pick(&self.beta, beta),
        }
    }

    /// Concrete regions in table order: lemniscate, max, min, parabola, with
    /// parameters ascending.
    pub fn regions(&self, grids: &Grids) -> Vec<Region> {
        let mut out = Vec::new();
        for kind in [
            RegionKind::Lemniscate,
            RegionKind::HalfPlaneMax,
            RegionKind::HalfPlaneMin,
            RegionKind::Parabola,
        ] {
            if !self.regions.is_empty() && !self.regions.contains(&kind) {
                continue;
            }
            match kind {
                RegionKind::HalfPlaneMin => {
                    out.extend(sorted(&grids.alpha).map(|alpha| Region::HalfPlaneMin { alpha }))
                }
                RegionKind::HalfPlaneMax => {
                    out.extend(sorted(&grids.beta).map(|beta| Region::HalfPlaneMax { beta }))
                }
                RegionKind::Parabola => out.push(Region::Parabola),
                RegionKind::Lemniscate => out.push(Region::Lemniscate),
            }
        }
        out
    }
}

fn sorted(values: &[f64]) -> impl Iterator<Item = f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v.into_iter()
}

impl PlotArgs {
    pub fn validate(&self) -> anyhow::Result<Region> {
        if !(self.radius > 0.0 && self.radius < 1.0) {
            return Err(usage(format!("--radius {} is outside (0, 1)", self.radius)));
        }
        check_alpha(self.alpha)?;
        check_beta(self.beta)?;
        Ok(Region::of_kind(self.regions, self.alpha, self.beta)?)
    }
}
