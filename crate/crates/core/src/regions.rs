// SPDX-License-Identifier: Apache-2.0

//! Target regions in the w-plane and the disks that fit inside them.
//!
//! Four regions are used as targets for the values of zf'/f or 1 + zf''/f':
//!
//! * `Re w > α` (starlike or convex of order α),
//! * `Re w < β` (the bounded class M(β)),
//! * `|w - 1| < Re w` (parabolic region, S_P and UCV),
//! * `|w² - 1| < 1` (right half of the lemniscate of Bernoulli, S_L).
//!
//! Each region has a continuous signed margin that is positive exactly on the
//! interior. The radius searches all run on that margin.

use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::tolerances;

/// Tag of a region without its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegionKind {
    Lemniscate,
    HalfPlaneMax,
    HalfPlaneMin,
    Parabola,
}

impl RegionKind {
    pub const ALL: [RegionKind; 4] = [
        RegionKind::Lemniscate,
        RegionKind::HalfPlaneMax,
        RegionKind::HalfPlaneMin,
        RegionKind::Parabola,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RegionKind::Lemniscate => "lemniscate",
            RegionKind::HalfPlaneMax => "half-plane-max",
            RegionKind::HalfPlaneMin => "half-plane-min",
            RegionKind::Parabola => "parabola",
        }
    }
}

impl fmt::Display for RegionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RegionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lemniscate" | "sl" => Ok(RegionKind::Lemniscate),
            "half-plane-max" | "max" | "m" | "bounded" => Ok(RegionKind::HalfPlaneMax),
            "half-plane-min" | "min" | "order" | "starlike" | "convex" => {
                Ok(RegionKind::HalfPlaneMin)
            }
            "parabola" | "sp" | "ucv" => Ok(RegionKind::Parabola),
            other => Err(format!(
                "unknown region `{other}` (expected lemniscate, half-plane-max, half-plane-min or parabola)"
            )),
        }
    }
}

/// A target set in the w-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Region {
    /// `Re w > alpha`, with `0 <= alpha < 1`.
    HalfPlaneMin { alpha: f64 },
    /// `Re w < beta`, with `beta > 1`.
    HalfPlaneMax { beta: f64 },
    /// `|w - 1| < Re w`.
    Parabola,
    /// The right lobe of `|w² - 1| < 1`.
    Lemniscate,
}

/// Where a point sits relative to a region once the boundary band is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    Inside,
    Boundary,
    Outside,
}

impl Region {
    pub fn half_plane_min(alpha: f64) -> Result<Self> {
        if (0.0..1.0).contains(&alpha) {
            Ok(Region::HalfPlaneMin { alpha })
        } else {
            Err(domain("alpha", alpha, "[0, 1)"))
        }
    }

    pub fn half_plane_max(beta: f64) -> Result<Self> {
        if beta > 1.0 && beta.is_finite() {
            Ok(Region::HalfPlaneMax { beta })
        } else {
            Err(domain("beta", beta, "(1, inf)"))
        }
    }

    /// Builds the region of the given kind, taking α or β when it needs one.
    pub fn of_kind(kind: RegionKind, alpha: f64, beta: f64) -> Result<Self> {
        match kind {
            RegionKind::HalfPlaneMin => Region::half_plane_min(alpha),
            RegionKind::HalfPlaneMax => Region::half_plane_max(beta),
            RegionKind::Parabola => Ok(Region::Parabola),
            RegionKind::Lemniscate => Ok(Region::Lemniscate),
        }
    }

    pub fn kind(&self) -> RegionKind {
        match self {
            Region::HalfPlaneMin { .. } => RegionKind::HalfPlaneMin,
            Region::HalfPlaneMax { .. } => RegionKind::HalfPlaneMax,
            Region::Parabola => RegionKind::Parabola,
            Region::Lemniscate => RegionKind::Lemniscate,
        }
    }

    /// The α or β carried by a half-plane, `None` otherwise.
    pub fn parameter(&self) -> Option<f64> {
        match *self {
            Region::HalfPlaneMin { alpha } => Some(alpha),
            Region::HalfPlaneMax { beta } => Some(beta),
            Region::Parabola | Region::Lemniscate => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Region::HalfPlaneMin { alpha } => Region::half_plane_min(alpha).map(|_| ()),
            Region::HalfPlaneMax { beta } => Region::half_plane_max(beta).map(|_| ()),
            Region::Parabola | Region::Lemniscate => Ok(()),
        }
    }

    /// Strict membership of `w`.
    pub fn contains(&self, w: Complex64) -> bool {
        match *self {
            Region::HalfPlaneMin { alpha } => w.re > alpha,
            Region::HalfPlaneMax { beta } => w.re < beta,
            Region::Parabola => (w - 1.0).norm() < w.re,
            Region::Lemniscate => w.re > 0.0 && (w * w - 1.0).norm() < 1.0,
        }
    }

    /// Signed inclusion margin: positive inside, zero on the boundary.
    pub fn margin(&self, w: Complex64) -> f64 {
        match *self {
            Region::HalfPlaneMin { alpha } => w.re - alpha,
            Region::HalfPlaneMax { beta } => beta - w.re,
            Region::Parabola => w.re - (w - 1.0).norm(),
            // The left lobe of |w² - 1| < 1 does not count; the two formulas
            // agree on Re w = 0.
            Region::Lemniscate => {
                let m = 1.0 - (w * w - 1.0).norm();
                if w.re > 0.0 {
                    m
                } else {
                    m.min(w.re)
                }
            }
        }
    }

    /// Classifies `w` with a boundary band of half-width `tol`.
    pub fn classify(&self, w: Complex64, tol: f64) -> Placement {
        let m = self.margin(w);
        if m > tol {
            Placement::Inside
        } else if m >= -tol {
            Placement::Boundary
        } else {
            Placement::Outside
        }
    }

    /// Largest radius of an open disk centred at the real point `center`
    /// that still lies in the region, or `None` when `center` is outside the
    /// domain where the fitting lemma applies.
    pub fn fit_radius(&self, center: f64) -> Option<f64> {
        match *self {
            Region::HalfPlaneMin { alpha } => (center > alpha).then(|| center - alpha),
            Region::HalfPlaneMax { beta } => (center < beta).then(|| beta - center),
            Region::Parabola => parabola_disk_radius(center).ok(),
            Region::Lemniscate => lemniscate_disk_radius(center).ok(),
        }
    }
}

/// A disk in the w-plane with a real centre.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskSpec {
    pub center: f64,
    pub radius: f64,
}

impl DiskSpec {
    pub fn new(center: f64, radius: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(domain("center", center, "finite reals"));
        }
        if !(radius >= 0.0) {
            return Err(domain("radius", radius, "[0, inf)"));
        }
        Ok(DiskSpec { center, radius })
    }

    /// The point of the boundary circle at angle `theta`.
    pub fn boundary_point(&self, theta: f64) -> Complex64 {
        Complex64::new(self.center, 0.0) + Complex64::from_polar(self.radius, theta)
    }
}

/// Centre at which the two branches of the lemniscate radius meet.
pub const LEMNISCATE_KNOT: f64 = 2.0 * SQRT_2 / 3.0;

/// Centre at which the two branches of the parabola radius meet.
pub const PARABOLA_KNOT: f64 = 1.5;

/// Radius `r_a` such that `{|w - a| < r_a}` lies inside `|w² - 1| < 1`.
pub fn lemniscate_disk_radius(a: f64) -> Result<f64> {
    if !(a > 0.0 && a < SQRT_2) {
        return Err(domain("a", a, "(0, sqrt 2)"));
    }
    if a <= LEMNISCATE_KNOT {
        let s = 1.0 - a * a;
        Ok((s.sqrt() - s).sqrt())
    } else {
        Ok(SQRT_2 - a)
    }
}

/// Radius `R_a` such that `{|w - a| < R_a}` lies inside `|w - 1| < Re w`.
pub fn parabola_disk_radius(a: f64) -> Result<f64> {
    if !(a > 0.5 && a.is_finite()) {
        return Err(domain("a", a, "(1/2, inf)"));
    }
    if a <= PARABOLA_KNOT {
        Ok(a - 0.5)
    } else {
        Ok((2.0 * a - 2.0).sqrt())
    }
}

/// Whether the closed disk lies strictly inside the region.
///
/// Centres outside the domain of a fitting lemma give `false`.
pub fn disk_in_region(region: &Region, disk: &DiskSpec) -> bool {
    match region.fit_radius(disk.center) {
        Some(fit) => disk.radius < fit,
        None => false,
    }
}

/// Samples the boundary of the lemma disk at centre `a` and checks both that
/// it stays in the region and that a slightly larger disk does not.
pub fn verify_disk_lemma(region: &Region, a: f64, n: usize) -> bool {
    if n < 1000 {
        return false;
    }
    let Some(radius) = region.fit_radius(a) else {
        return false;
    };
    let stretched = radius * (1.0 + tolerances::LEMMA_TIGHTNESS_STRETCH);
    let mut contained = true;
    let mut escapes = false;
    for k in 0..n {
        let theta = 2.0 * PI * k as f64 / n as f64;
        let dir = Complex64::from_polar(1.0, theta);
        let on_lemma = a + radius * dir;
        if region.margin(on_lemma) < -tolerances::LEMMA_CONTAINMENT {
            contained = false;
        }
        if region.margin(a + stretched * dir) < 0.0 {
            escapes = true;
        }
    }
    contained && escapes
}

/// Points of the boundary of the right lemniscate half, `w(θ) = √(2cos θ) e^{iθ/2}`.
pub fn lemniscate_boundary(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            let theta = -PI / 2.0 + PI * k as f64 / (n - 1).max(1) as f64;
            let rho = (2.0 * theta.cos()).max(0.0).sqrt();
            Complex64::from_polar(rho, theta / 2.0)
        })
        .collect()
}

/// Points of the parabola `w = (1 + t²)/2 + i t` for `t` in `[-t_max, t_max]`.
pub fn parabola_boundary(n: usize, t_max: f64) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            let t = -t_max + 2.0 * t_max * k as f64 / (n - 1).max(1) as f64;
            Complex64::new((1.0 + t * t) / 2.0, t)
        })
        .collect()
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Region::HalfPlaneMin { alpha } => write!(f, "Re w > {alpha}"),
            Region::HalfPlaneMax { beta } => write!(f, "Re w < {beta}"),
            Region::Parabola => f.write_str("|w - 1| < Re w"),
            Region::Lemniscate => f.write_str("|w^2 - 1| < 1"),
        }
    }
}

impl From<Region> for RegionKind {
    fn from(r: Region) -> Self {
        r.kind()
    }
}
