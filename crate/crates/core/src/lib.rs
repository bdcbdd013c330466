// SPDX-License-Identifier: Apache-2.0

//! Radius constants for classes of analytic functions on the unit disk.
//!
//! The classes F1 to F8 are defined by a ratio condition between a function
//! `f` and an auxiliary function `g` (`Re f/g > 0`, `|f/g - 1| < 1`,
//! `|f'/g' - 1| < 1`, ...). For each class the crate computes the largest
//! radius `R` such that `zf'/f` (or `1 + zf''/f'`) lies in a target region on
//! `|z| < R`, for the targets
//!
//! * starlike or convex of order α (`Re w > α`),
//! * the bounded class M(β) (`Re w < β`),
//! * parabolic starlike / uniformly convex (`|w - 1| < Re w`),
//! * lemniscate starlike (`|w² - 1| < 1`).
//!
//! Every radius is available two ways: as a closed form ([`formula_radius`])
//! and by bisection over the derivation disks ([`solve_radius`]). The
//! [`certify`] module checks them against extremal functions and against
//! randomly sampled members of each class.
//!
//! ```
//! use radconst::{formula_radius, solve_radius, ClassId, Region};
//!
//! let r = formula_radius(ClassId::F1, &Region::Lemniscate).unwrap();
//! assert!((r.value - 0.10247).abs() < 1e-5);
//! let solved = solve_radius(ClassId::F1, &Region::Lemniscate, 1e-13).unwrap();
//! assert!((r.value - solved).abs() < 1e-9);
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;

pub mod certify;
pub mod classes;
pub mod error;
pub mod herglotz;
pub mod radii;
pub mod regions;
pub mod tolerances;

pub use certify::{
    build_report, conjecture_probe, empirical_radius, sharpness_check, CertificationReport,
    CertifyConfig, ConjectureStatus, EmpiricalInterval, SharpnessOutcome,
};
pub use classes::{
    disk_bound, eval_functional, extremal_member, make_member, ClassId, ClassMember, Functional,
    RadialBound,
};
pub use error::{Error, Result};
pub use herglotz::{
    convex_member, sample_measure, starlike_member, AnalyticFn, CaratheodoryFunction,
    HerglotzMeasure,
};
pub use radii::{
    conjectured_radius, formula_radius, solve_radius, solve_radius_with, Provenance, RadiusResult,
    SolveOptions,
};
pub use regions::{disk_in_region, DiskSpec, Region, RegionKind};

/// `n` equispaced points of the circle `|z| = r`, starting on the positive
/// real axis.
pub fn circle(r: f64, n: usize) -> impl Iterator<Item = Complex64> {
    (0..n).map(move |k| Complex64::from_polar(r, 2.0 * PI * k as f64 / n as f64))
}
