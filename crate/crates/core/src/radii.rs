// SPDX-License-Identifier: Apache-2.0

//! Radius constants and the solver that re-derives them.
//!
//! [`formula_radius`] evaluates the printed closed form for a
//! (class, target) pair. [`solve_radius`] finds the same number by locating
//! the first `r` at which the derivation disk of the class stops fitting in
//! the target region.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classes::{bound_at, ClassId, Functional};
use crate::error::{domain, Error, Result};
use crate::regions::{Region, RegionKind};
use crate::tolerances;

/// Where a radius comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "kebab-case")]
pub enum Provenance {
    /// Part `(a)`, `(b)`, ... of the theorem for the class.
    Theorem { part: char },
    /// Numbered conjecture for the sharp value.
    Conjecture { number: u8 },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Theorem { part } => write!(f, "theorem ({part})"),
            Provenance::Conjecture { number } => write!(f, "conjecture {number}"),
        }
    }
}

/// A radius constant for one (class, target) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub class: ClassId,
    pub region: Region,
    pub value: f64,
    /// `false` for proven radii that are only lower bounds for the sharp one.
    pub sharp: bool,
    pub provenance: Provenance,
    /// The closed form in plain ASCII.
    pub closed_form: String,
    /// Conjectured sharp value, for the non-sharp pairs that have one.
    pub conjecture: Option<f64>,
}

impl RadiusResult {
    /// Name of the target, e.g. `S*(0.5)`, `C(0)`, `UCV`, `M(2)`.
    pub fn target_label(&self) -> String {
        target_label(self.class, &self.region)
    }
}

/// Human name of the target class for the pair.
pub fn target_label(class: ClassId, region: &Region) -> String {
    let convex = class.functional() == Functional::Convex;
    match (*region, convex) {
        (Region::Lemniscate, _) => "SL".to_string(),
        (Region::HalfPlaneMax { beta }, _) => format!("M({beta})"),
        (Region::HalfPlaneMin { alpha }, false) => format!("S*({alpha})"),
        (Region::HalfPlaneMin { alpha }, true) => format!("C({alpha})"),
        (Region::Parabola, false) => "SP".to_string(),
        (Region::Parabola, true) => "UCV".to_string(),
    }
}

/// Region kinds with a theorem for `class`, in table order.
pub fn covered_kinds(class: ClassId) -> &'static [RegionKind] {
    const ALL: &[RegionKind] = &[
        RegionKind::Lemniscate,
        RegionKind::HalfPlaneMax,
        RegionKind::HalfPlaneMin,
        RegionKind::Parabola,
    ];
    const CONVEX: &[RegionKind] = &[RegionKind::HalfPlaneMin, RegionKind::Parabola];
    match class {
        ClassId::F1 | ClassId::F2 | ClassId::F3 | ClassId::F5 => ALL,
        ClassId::F4 | ClassId::F6 | ClassId::F7 | ClassId::F8 => CONVEX,
    }
}

pub fn is_covered(class: ClassId, kind: RegionKind) -> bool {
    covered_kinds(class).contains(&kind)
}

/// Theorem part letter and sharpness of a covered pair.
fn theorem_part(class: ClassId, kind: RegionKind) -> Option<(char, bool)> {
    use RegionKind::*;
    let part = match (class, kind) {
        (ClassId::F1 | ClassId::F2 | ClassId::F3, Lemniscate) => 'a',
        (ClassId::F1 | ClassId::F2 | ClassId::F3, HalfPlaneMax) => 'b',
        (ClassId::F1 | ClassId::F2 | ClassId::F3, HalfPlaneMin) => 'c',
        (ClassId::F1 | ClassId::F2 | ClassId::F3, Parabola) => 'd',
        (ClassId::F5, HalfPlaneMin) => 'a',
        (ClassId::F5, Parabola) => 'b',
        (ClassId::F5, Lemniscate) => 'c',
        (ClassId::F5, HalfPlaneMax) => 'd',
        (_, HalfPlaneMin) => 'a',
        (_, Parabola) => 'b',
        _ => return None,
    };
    let sharp = !matches!(
        (class, kind),
        (ClassId::F2, Parabola)
            | (ClassId::F3, Lemniscate | HalfPlaneMax)
            | (ClassId::F5, Lemniscate | HalfPlaneMax)
    );
    Some((part, sharp))
}

const SQRT_2: f64 = std::f64::consts::SQRT_2;

fn sl_f1() -> f64 {
    (SQRT_2 - 1.0) / (2.0 + (7.0 - 2.0 * SQRT_2).sqrt())
}

fn sl_f2() -> f64 {
    (4.0 - 2.0 * SQRT_2) / (SQRT_2 * ((17.0 - 4.0 * SQRT_2).sqrt() + 3.0))
}

fn m_f2(beta: f64) -> f64 {
    2.0 * (beta - 1.0) / (3.0 + (9.0 + 4.0 * beta * (beta - 1.0)).sqrt())
}

/// The closed form of a covered pair and its ASCII rendering.
fn closed_form(class: ClassId, region: Region) -> Option<(f64, &'static str)> {
    use ClassId::*;
    let out = match (class, region) {
        (F1, Region::Lemniscate) => (sl_f1(), "(sqrt2-1)/(2+sqrt(7-2sqrt2))"),
        (F1, Region::HalfPlaneMax { beta }) => (
            (beta - 1.0) / (2.0 + (4.0 + (beta - 1.0).powi(2)).sqrt()),
            "(b-1)/(2+sqrt(4+(b-1)^2))",
        ),
        (F1, Region::HalfPlaneMin { alpha }) => (
            (1.0 - alpha) / (2.0 + (5.0 + alpha * alpha - 2.0 * alpha).sqrt()),
            "(1-a)/(2+sqrt(5+a^2-2a))",
        ),
        (F1, Region::Parabola) => (1.0 / (4.0 + 17f64.sqrt()), "1/(4+sqrt17)"),

        (F2 | F3, Region::Lemniscate) => (sl_f2(), "(4-2sqrt2)/(sqrt2(sqrt(17-4sqrt2)+3))"),
        (F2 | F3, Region::HalfPlaneMax { beta }) => {
            (m_f2(beta), "2(b-1)/(3+sqrt(9+4b(b-1)))")
        }
        (F2, Region::HalfPlaneMin { alpha }) => (
            2.0 * (1.0 - alpha) / (3.0 + (9.0 - 4.0 * alpha + 4.0 * alpha * alpha).sqrt()),
            "2(1-a)/(3+sqrt(9-4a+4a^2))",
        ),
        (F2, Region::Parabola) => (10f64.sqrt() - 3.0, "sqrt10-3"),

        (F3, Region::HalfPlaneMin { alpha }) => (
            2.0 * (1.0 - alpha) / (3.0 + (9.0 + 4.0 * (2.0 - alpha) * (1.0 - alpha)).sqrt()),
            "2(1-a)/(3+sqrt(9+4(2-a)(1-a)))",
        ),
        (F3 | F4, Region::Parabola) => ((2.0 * 3f64.sqrt() - 3.0) / 3.0, "(2sqrt3-3)/3"),
        (F4, Region::HalfPlaneMin { alpha }) => (
            2.0 * (1.0 - alpha) / (3.0 + (9.0 + 4.0 * (alpha - 2.0) * (alpha - 1.0)).sqrt()),
            "2(1-a)/(3+sqrt(9+4(a-2)(a-1)))",
        ),

        (F5, Region::HalfPlaneMin { alpha }) => (
            (1.0 - alpha) / (1.0 + (2.0 + alpha * alpha - 2.0 * alpha).sqrt()),
            "(1-a)/(1+sqrt(2+a^2-2a))",
        ),
        (F5, Region::Parabola) => (1.0 / (5f64.sqrt() + 2.0), "1/(sqrt5+2)"),
        (F5, Region::Lemniscate) => (3.0 - 2.0 * SQRT_2, "3-2sqrt2"),
        (F5, Region::HalfPlaneMax { beta }) => ((beta - 1.0) / (1.0 + beta), "(b-1)/(1+b)"),

        (F6 | F7, Region::HalfPlaneMin { alpha }) => (
            2.0 * (1.0 - alpha) / (5.0 + (25.0 + 4.0 * alpha * (alpha - 1.0)).sqrt()),
            "2(1-a)/(5+sqrt(25+4a(a-1)))",
        ),
        (F6 | F7, Region::Parabola) => (5.0 - 2.0 * 6f64.sqrt(), "5-2sqrt6"),
        (F8, Region::HalfPlaneMin { alpha }) => (
            2.0 * (1.0 - alpha) / (3.0 + (9.0 + 4.0 * alpha * (alpha - 1.0)).sqrt()),
            "2(1-a)/(3+sqrt(9+4a(a-1)))",
        ),
        (F8, Region::Parabola) => (3.0 - 2.0 * SQRT_2, "3-2sqrt2"),
        _ => return None,
    };
    Some(out)
}

/// Conjectured sharp value and its ASCII rendering.
fn conjecture_form(class: ClassId, region: Region) -> Option<(f64, u8, &'static str)> {
    let out = match (class, region) {
        (ClassId::F2, Region::Parabola) => (3.0 - 2.0 * SQRT_2, 1, "3-2sqrt2"),
        (ClassId::F3, Region::Lemniscate) => (
            1.5 + 1.5 / SQRT_2 - 0.5 * (13.5 + 7.0 * SQRT_2).sqrt(),
            2,
            "3/2+3/(2sqrt2)-sqrt(27/2+7sqrt2)/2",
        ),
        (ClassId::F3, Region::HalfPlaneMax { beta }) => (
            2.0 * (beta - 1.0) / (3.0 + (9.0 + 4.0 * (beta - 1.0) * (beta - 2.0)).sqrt()),
            2,
            "2(b-1)/(3+sqrt(9+4(b-1)(b-2)))",
        ),
        (ClassId::F5, Region::Lemniscate) => (
            -1.0 - SQRT_2 + (2.0 * (2.0 + SQRT_2)).sqrt(),
            3,
            "-1-sqrt2+sqrt(2(2+sqrt2))",
        ),
        (ClassId::F5, Region::HalfPlaneMax { beta }) => (
            (beta - 1.0) / (1.0 + (beta * beta + 2.0 - 2.0 * beta).sqrt()),
            3,
            "(b-1)/(1+sqrt(b^2+2-2b))",
        ),
        _ => return None,
    };
    Some(out)
}

/// The proven radius for `class` and `region` from the theorem for the class.
pub fn formula_radius(class: ClassId, region: &Region) -> Result<RadiusResult> {
    region.validate()?;
    let kind = region.kind();
    let (part, sharp) = theorem_part(class, kind).ok_or(Error::NotCovered {
        class,
        target: kind,
    })?;
    let (value, form) = closed_form(class, *region).ok_or(Error::NotCovered {
        class,
        target: kind,
    })?;
    Ok(RadiusResult {
        class,
        region: *region,
        value,
        sharp,
        provenance: Provenance::Theorem { part },
        closed_form: form.to_string(),
        conjecture: conjecture_form(class, *region).map(|(v, _, _)| v),
    })
}

/// The conjectured sharp radius for one of the five open pairs.
pub fn conjectured_radius(class: ClassId, region: &Region) -> Result<RadiusResult> {
    region.validate()?;
    let (value, number, form) = conjecture_form(class, *region).ok_or(Error::NoConjecture {
        class,
        target: region.kind(),
    })?;
    Ok(RadiusResult {
        class,
        region: *region,
        value,
        sharp: true,
        provenance: Provenance::Conjecture { number },
        closed_form: form.to_string(),
        conjecture: Some(value),
    })
}

/// Knobs for [`solve_radius_with`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Use the floor `ℓ(r)` of the class when it has one.
    pub use_lower_bound: bool,
    /// Final bracket width.
    pub width: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            use_lower_bound: true,
            width: tolerances::SOLVER_WIDTH,
        }
    }
}

const SCAN_STEPS: usize = 1024;

/// Signed amount by which the derivation disk at `r` fits in the region.
pub fn disk_margin(class: ClassId, region: &Region, r: f64, use_lower: bool) -> f64 {
    let b = bound_at(class, r);
    let (c, rho) = (b.disk.center, b.disk.radius);
    let floor = b.lower.filter(|_| use_lower);
    match *region {
        Region::HalfPlaneMin { alpha } => b.min_real(use_lower) - alpha,
        Region::HalfPlaneMax { beta } => beta - b.max_real(),
        Region::Lemniscate | Region::Parabola => {
            // Outside the lemma's domain the disk cannot fit; -ρ keeps the
            // sign right.
            let fit = region.fit_radius(c).map_or(-rho, |fit| fit - rho);
            match (region, floor) {
                // |w - 1| <= ρ + |c - 1| < ℓ <= Re w.
                (Region::Parabola, Some(l)) => fit.max(l - rho - (c - 1.0).abs()),
                _ => fit,
            }
        }
    }
}

/// Largest `r` in (0, 1) for which the derivation disk of `class` fits in
/// `region`, to bracket width `tol`.
pub fn solve_radius(class: ClassId, region: &Region, tol: f64) -> Result<f64> {
    solve_radius_with(
        class,
        region,
        &SolveOptions {
            width: tol,
            ..SolveOptions::default()
        },
    )
}

pub fn solve_radius_with(class: ClassId, region: &Region, opts: &SolveOptions) -> Result<f64> {
    if !(opts.width > 0.0) {
        return Err(domain("tol", opts.width, "(0, inf)"));
    }
    region.validate()?;
    let g = |r: f64| disk_margin(class, region, r, opts.use_lower_bound);
    let step = 1.0 / SCAN_STEPS as f64;
    if g(step * 1e-6) <= 0.0 {
        return Err(Error::NoSignChange);
    }
    let mut lo = 0.0;
    let mut hi = None;
    for i in 1..SCAN_STEPS {
        let r = i as f64 * step;
        if g(r) <= 0.0 {
            hi = Some(r);
            break;
        }
        lo = r;
    }
    let mut hi = hi.ok_or(Error::NoSignChange)?;
    while hi - lo > opts.width {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Every covered (class, region) pair for the given parameters, in table
/// order.
pub fn covered_regions(class: ClassId, alpha: f64, beta: f64) -> Result<Vec<Region>> {
    covered_kinds(class)
        .iter()
        .map(|&kind| Region::of_kind(kind, alpha, beta))
        .collect()
}
