// SPDX-License-Identifier: Apache-2.0

//! Numerical evidence for the radius constants.
//!
//! * [`sharpness_check`]: the extremal function touches the region boundary
//!   at the radius and leaves it just beyond.
//! * [`empirical_radius`]: exit radii of sampled class members bracket the
//!   largest radius the sampled family supports.
//! * [`conjecture_probe`]: exit radius of the candidate extremal for the
//!   open pairs.
//!
//! None of this proves anything about a whole class; a failing check does
//! point at a bug or a false claim.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classes::{extremal_member, make_member, ClassId, ClassMember};
use crate::error::{domain, Error, Result};
use crate::herglotz::{
    check_growth_lemma, check_logderiv_lemma, check_logderiv_lower, floor_range_end,
    CaratheodoryFunction,
};
use crate::radii::{
    conjectured_radius, covered_kinds, formula_radius, solve_radius, target_label, Provenance,
};
use crate::regions::{verify_disk_lemma, Region, RegionKind};
use crate::{circle, tolerances};

/// Points on the circle past the radius in [`sharpness_check`].
const BEYOND_POINTS: usize = 1024;
/// Coarse grid of the circle minimisation in [`conjecture_probe`].
const PROBE_POINTS: usize = 1024;
/// Radial step of the probe scan.
const PROBE_STEP: f64 = 1.0 / 512.0;
/// Radial step of the per-member exit scan.
const EXIT_STEP: f64 = 1.0 / 128.0;
/// Largest radius the exit scan looks at. Sampled convex auxiliaries are
/// only built this far out.
pub const EXIT_SCAN_LIMIT: f64 = 0.95;

pub const MIN_MEMBERS: usize = 50;
pub const MIN_GRID: usize = 128;

/// Result of evaluating the extremal function at and past the radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SharpnessOutcome {
    pub radius: f64,
    /// Real evaluation point, `+R` or `-R`.
    pub point: f64,
    pub margin_at_r: f64,
    /// Smallest margin on `|z| = R (1 + 10⁻³)`; `None` when that circle
    /// leaves the disk.
    pub margin_beyond: Option<f64>,
}

impl SharpnessOutcome {
    pub fn passed(&self) -> bool {
        self.margin_at_r.abs() <= tolerances::SHARP_MARGIN
            && self
                .margin_beyond
                .is_none_or(|m| m < tolerances::BEYOND_MARGIN)
    }
}

/// Sign of the real point where the extremal touches the boundary.
fn touching_sign(region: &Region) -> f64 {
    match region {
        Region::Lemniscate | Region::HalfPlaneMax { .. } => 1.0,
        Region::HalfPlaneMin { .. } | Region::Parabola => -1.0,
    }
}

fn min_margin_on_circle(m: &ClassMember, region: &Region, r: f64, n: usize) -> Result<f64> {
    let mut worst = f64::INFINITY;
    for z in circle(r, n) {
        worst = worst.min(region.margin(m.functional(z)?));
    }
    Ok(worst)
}

/// Evaluates the extremal function of a sharp pair at its radius and just
/// beyond it.
pub fn sharpness_check(class: ClassId, region: &Region) -> Result<SharpnessOutcome> {
    let result = formula_radius(class, region)?;
    if !result.sharp {
        return Err(Error::NotSharp {
            class,
            target: region.kind(),
        });
    }
    let m = extremal_member(class);
    let r = result.value;
    let point = touching_sign(region) * r;
    let margin_at_r = region.margin(m.functional(Complex64::new(point, 0.0))?);
    let beyond = r * (1.0 + tolerances::BEYOND_STRETCH);
    let margin_beyond = if beyond < 1.0 {
        Some(min_margin_on_circle(&m, region, beyond, BEYOND_POINTS)?)
    } else {
        None
    };
    Ok(SharpnessOutcome {
        radius: r,
        point,
        margin_at_r,
        margin_beyond,
    })
}

/// Bracket `[lo, hi]` on the largest radius supported by a sampled family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalInterval {
    /// Every member stays inside on the grid at this radius.
    pub lo: f64,
    /// Some member (possibly the extremal) leaves the region at this radius;
    /// 1 when none did up to the scan limit.
    pub hi: f64,
    /// Exit radius of the extremal function alone.
    pub extremal_exit: f64,
    pub members: usize,
    pub grid: usize,
    pub seed: u64,
}

/// First radius at which `m` leaves `region` on the `grid`-point circle,
/// looking no further than `cap`. Returns the bracket `(inside, outside)`.
fn exit_bracket(
    m: &ClassMember,
    region: &Region,
    grid: usize,
    cap: f64,
) -> Result<Option<(f64, f64)>> {
    let mut inside = 0.0;
    let mut i = 1;
    loop {
        let r = (i as f64 * EXIT_STEP).min(EXIT_SCAN_LIMIT);
        if min_margin_on_circle(m, region, r, grid)? <= 0.0 {
            let mut outside = r;
            while outside - inside > tolerances::EXIT_WIDTH {
                let mid = 0.5 * (inside + outside);
                if min_margin_on_circle(m, region, mid, grid)? > 0.0 {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            return Ok(Some((inside, outside)));
        }
        inside = r;
        if r >= cap || r >= EXIT_SCAN_LIMIT {
            return Ok(None);
        }
        i += 1;
    }
}

/// Seed of the `index`-th sampled member of a job.
fn member_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add(index as u64)
}

fn sampled_members(class: ClassId, members: usize, seed: u64) -> Result<Vec<ClassMember>> {
    (0..members)
        .map(|i| make_member(class, member_seed(seed, i)))
        .collect()
}

fn check_sizes(members: usize, grid: usize) -> Result<()> {
    if members < MIN_MEMBERS {
        return Err(domain("members", members as f64, "[50, inf)"));
    }
    if grid < MIN_GRID {
        return Err(domain("grid", grid as f64, "[128, inf)"));
    }
    Ok(())
}

/// Brackets the radius supported by `members` sampled members plus the
/// extremal function of the class.
pub fn empirical_radius(
    class: ClassId,
    region: &Region,
    members: usize,
    grid: usize,
    seed: u64,
) -> Result<EmpiricalInterval> {
    check_sizes(members, grid)?;
    region.validate()?;
    let family = sampled_members(class, members, seed)?;
    empirical_over(class, region, &family, grid, seed)
}

fn empirical_over(
    class: ClassId,
    region: &Region,
    family: &[ClassMember],
    grid: usize,
    seed: u64,
) -> Result<EmpiricalInterval> {
    let extremal = extremal_member(class);
    let extremal_exit = exit_bracket(&extremal, region, grid, 1.0)?;
    let mut best = extremal_exit;
    for m in family {
        // Members that cannot beat the current minimum stop scanning early.
        let cap = best.map_or(1.0, |(_, out)| out);
        if let Some(b) = exit_bracket(m, region, grid, cap)? {
            if best.is_none_or(|(_, out)| b.1 < out) {
                best = Some(b);
            }
        }
    }
    let (mut lo, hi) = best.unwrap_or((EXIT_SCAN_LIMIT, 1.0));
    // Scan brackets are per member; confirm the whole family at lo.
    'shrink: loop {
        for m in std::iter::once(&extremal).chain(family) {
            if min_margin_on_circle(m, region, lo, grid)? <= 0.0 {
                lo -= tolerances::EXIT_WIDTH.max(lo * 1e-6);
                if lo <= 0.0 {
                    lo = 0.0;
                    break 'shrink;
                }
                continue 'shrink;
            }
        }
        break;
    }
    Ok(EmpiricalInterval {
        lo,
        hi,
        extremal_exit: extremal_exit.map_or(1.0, |(_, out)| out),
        members: family.len(),
        grid,
        seed,
    })
}

/// Smallest region margin over the family on `|z| = r`.
pub fn family_margin(family: &[ClassMember], region: &Region, r: f64, grid: usize) -> Result<f64> {
    let mut worst = f64::INFINITY;
    for m in family {
        worst = worst.min(min_margin_on_circle(m, region, r, grid)?);
    }
    Ok(worst)
}

/// Smallest region margin of `members` sampled members on the circle at
/// `fraction` of the proven radius. Positive means no counterexample.
pub fn soundness_margin(
    class: ClassId,
    region: &Region,
    members: usize,
    grid: usize,
    seed: u64,
    fraction: f64,
) -> Result<f64> {
    let r = formula_radius(class, region)?.value * fraction;
    let family = sampled_members(class, members, seed)?;
    family_margin(&family, region, r, grid)
}

/// Minimum over θ of `margin(F(r e^{iθ}))`: coarse grid, then golden-section
/// refinement around the best coarse point.
fn circle_minimum(m: &ClassMember, region: &Region, r: f64) -> Result<f64> {
    let at = |theta: f64| -> Result<f64> {
        Ok(region.margin(m.functional(Complex64::from_polar(r, theta))?))
    };
    let h = TAU / PROBE_POINTS as f64;
    let mut best = (0.0, f64::INFINITY);
    for k in 0..PROBE_POINTS {
        let theta = k as f64 * h;
        let v = at(theta)?;
        if v < best.1 {
            best = (theta, v);
        }
    }
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (best.0 - h, best.0 + h);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (at(c)?, at(d)?);
    for _ in 0..80 {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = at(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = at(d)?;
        }
    }
    Ok(best.1.min(fc).min(fd))
}

/// Exit radius of the candidate extremal for one of the conjectured pairs:
/// the largest `r` with the functional in `region` on all of `|z| = r`.
pub fn conjecture_probe(class: ClassId, region: &Region) -> Result<f64> {
    conjectured_radius(class, region)?;
    let m = extremal_member(class);
    let mut inside = 0.0;
    let mut i = 1;
    let mut outside = loop {
        let r = i as f64 * PROBE_STEP;
        if r >= 1.0 {
            return Err(Error::NoSignChange);
        }
        if circle_minimum(&m, region, r)? <= 0.0 {
            break r;
        }
        inside = r;
        i += 1;
    };
    while outside - inside > 1e-13 {
        let mid = 0.5 * (inside + outside);
        if circle_minimum(&m, region, mid)? > 0.0 {
            inside = mid;
        } else {
            outside = mid;
        }
    }
    Ok(0.5 * (inside + outside))
}

/// One named check on a report row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// What the sampled members say about a conjectured sharp radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureStatus {
    /// No sampled member leaves the region before the conjectured radius.
    Consistent,
    /// A sampled member leaves the region before the conjectured radius, so
    /// the conjectured value cannot be the sharp radius of the class.
    Contradicted,
}

/// Parameters of a certification run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub members: usize,
    pub grid: usize,
    pub seed: u64,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            members: 200,
            grid: 256,
            seed: 2012,
        }
    }
}

/// Everything known numerically about one (class, region) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub class: ClassId,
    pub region: Region,
    pub target: String,
    pub formula: f64,
    pub sharp: bool,
    pub provenance: Option<Provenance>,
    pub solver: Option<f64>,
    pub sharpness: Option<SharpnessOutcome>,
    pub empirical: Option<EmpiricalInterval>,
    /// Smallest margin of the sampled members at 0.99 of the radius.
    pub soundness_margin: Option<f64>,
    pub conjecture: Option<f64>,
    pub probe: Option<f64>,
    /// Recorded as evidence only; it does not affect [`Self::passed`].
    pub conjecture_status: Option<ConjectureStatus>,
    pub seed: u64,
    pub members: usize,
    pub grid: usize,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }

    fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per failed check.
    pub fn diagnostics(&self) -> Vec<String> {
        let head = format!("{} {}", self.class, self.target);
        let mut out: Vec<String> = self
            .failures()
            .map(|c| format!("{head}: {} failed ({})", c.name, c.detail))
            .collect();
        if let Some(e) = &self.error {
            out.push(format!("{head}: {e}"));
        }
        out
    }
}

/// Seed of the (class, region) job derived from the run seed.
fn job_seed(seed: u64, class: ClassId, kind: RegionKind) -> u64 {
    let kind_index = RegionKind::ALL.iter().position(|&k| k == kind).unwrap_or(0);
    let tag = (class.index() * RegionKind::ALL.len() + kind_index) as u64;
    ChaCha8Rng::seed_from_u64(seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15)).random()
}

fn certify_pair(class: ClassId, region: Region, config: &CertifyConfig) -> CertificationReport {
    let seed = job_seed(config.seed, class, region.kind());
    let mut report = CertificationReport {
        class,
        region,
        target: target_label(class, &region),
        formula: f64::NAN,
        sharp: false,
        provenance: None,
        solver: None,
        sharpness: None,
        empirical: None,
        soundness_margin: None,
        conjecture: None,
        probe: None,
        conjecture_status: None,
        seed,
        members: config.members,
        grid: config.grid,
        checks: Vec::new(),
        error: None,
    };
    if let Err(e) = fill_report(&mut report, config) {
        report.error = Some(e.to_string());
    }
    report
}

fn fill_report(rep: &mut CertificationReport, config: &CertifyConfig) -> Result<()> {
    let (class, region) = (rep.class, rep.region);
    let result = formula_radius(class, &region)?;
    rep.formula = result.value;
    rep.sharp = result.sharp;
    rep.provenance = Some(result.provenance);
    rep.conjecture = result.conjecture;

    let solved = solve_radius(class, &region, tolerances::SOLVER_WIDTH)?;
    rep.solver = Some(solved);
    let gap = (solved - result.value).abs();
    rep.checks.push(Check::new(
        "solver-agreement",
        gap <= tolerances::SOLVER_AGREEMENT,
        format!("|formula - solver| = {gap:e}"),
    ));

    if result.sharp {
        let s = sharpness_check(class, &region)?;
        rep.sharpness = Some(s);
        rep.checks.push(Check::new(
            "sharpness",
            s.passed(),
            format!(
                "margin at R = {:e}, beyond = {}",
                s.margin_at_r,
                s.margin_beyond.map_or("n/a".to_string(), |m| format!("{m:e}"))
            ),
        ));
    }

    check_sizes(config.members, config.grid)?;
    let family = sampled_members(class, config.members, rep.seed)?;
    let sound = family_margin(
        &family,
        &region,
        tolerances::SOUNDNESS_FRACTION * result.value,
        config.grid,
    )?;
    rep.soundness_margin = Some(sound);
    rep.checks.push(Check::new(
        "soundness",
        sound > 0.0,
        format!("min margin at 0.99 R = {sound:e}"),
    ));

    let interval = empirical_over(class, &region, &family, config.grid, rep.seed)?;
    rep.empirical = Some(interval);
    rep.checks.push(Check::new(
        "empirical-upper",
        interval.lo <= interval.hi
            && result.value <= interval.hi + tolerances::EXIT_WIDTH * 4.0,
        format!(
            "formula {} vs [{}, {}]",
            result.value, interval.lo, interval.hi
        ),
    ));

    if let Some(conj) = result.conjecture {
        let probe = conjecture_probe(class, &region)?;
        rep.probe = Some(probe);
        rep.checks.push(Check::new(
            "probe-above-proven",
            result.value <= probe,
            format!("formula {} <= probe {probe}", result.value),
        ));
        rep.conjecture_status = Some(if probe <= interval.hi + 1e-6 {
            ConjectureStatus::Consistent
        } else {
            ConjectureStatus::Contradicted
        });
        let miss = (probe - conj).abs();
        rep.checks.push(Check::new(
            "probe-conjecture",
            miss <= tolerances::CONJECTURE_MATCH,
            format!("|probe - conjecture| = {miss:e}"),
        ));
    }
    Ok(())
}

/// Certifies every covered pair among `classes` x `regions`, in class then
/// region order. Pairs run in parallel; failures are recorded per row.
pub fn build_report(
    classes: &[ClassId],
    regions: &[Region],
    config: &CertifyConfig,
) -> Vec<CertificationReport> {
    let jobs: Vec<(ClassId, Region)> = classes
        .iter()
        .flat_map(|&class| {
            covered_kinds(class).iter().flat_map(move |&kind| {
                regions
                    .iter()
                    .filter(move |r| r.kind() == kind)
                    .map(move |&r| (class, r))
            })
        })
        .collect();
    jobs.into_par_iter()
        .map(|(class, region)| certify_pair(class, region, config))
        .collect()
}

/// A printed constant and the value the library computes for it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantCheck {
    pub class: ClassId,
    pub target: String,
    pub printed: f64,
    pub computed: f64,
    pub passed: bool,
}

/// The decimal constants printed with the theorems.
pub fn printed_constants() -> Vec<ConstantCheck> {
    let half_plane = Region::HalfPlaneMin { alpha: 0.0 };
    let table = [
        (ClassId::F1, Region::Lemniscate, 0.10247),
        (ClassId::F1, Region::Parabola, 0.12311),
        (ClassId::F1, half_plane, 0.236068),
        (ClassId::F2, Region::Lemniscate, 0.13009),
        (ClassId::F2, Region::Parabola, 0.162278),
        (ClassId::F3, Region::Parabola, 0.154701),
        (ClassId::F4, Region::Parabola, 0.154701),
        (ClassId::F5, Region::Parabola, 0.236068),
        (ClassId::F5, Region::Lemniscate, 0.171573),
        (ClassId::F6, Region::Parabola, 0.101021),
        (ClassId::F7, Region::Parabola, 0.101021),
        (ClassId::F8, Region::Parabola, 0.171573),
    ];
    table
        .iter()
        .map(|&(class, region, printed)| {
            let computed = formula_radius(class, &region).map_or(f64::NAN, |r| r.value);
            ConstantCheck {
                class,
                target: target_label(class, &region),
                printed,
                computed,
                passed: (computed - printed).abs() <= tolerances::PRINTED_CONSTANT,
            }
        })
        .collect()
}

/// Outcome of the lemma checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaSuite {
    pub disk_lemma_points: usize,
    pub disk_lemma_failures: usize,
    pub caratheodory_functions: usize,
    pub caratheodory_failures: usize,
}

impl LemmaSuite {
    pub fn passed(&self) -> bool {
        self.disk_lemma_failures == 0 && self.caratheodory_failures == 0
    }
}

const LEMMA_GRID: usize = 100;
const LEMMA_CIRCLE: usize = 1000;
const CARATHEODORY_RADII: [f64; 9] = [0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.75, 0.9];

/// Disk-fitting lemmas on 100-point grids of centres, and the Carathéodory
/// bounds for `samples` random functions of orders 0 and 1/2 plus the
/// single-atom functions that attain them.
pub fn lemma_suite(samples: usize, seed: u64) -> LemmaSuite {
    let mut disk_failures = 0;
    for i in 1..=LEMMA_GRID {
        let t = i as f64 / (LEMMA_GRID + 1) as f64;
        let lemniscate = verify_disk_lemma(&Region::Lemniscate, 2f64.sqrt() * t, LEMMA_CIRCLE);
        let parabola = verify_disk_lemma(&Region::Parabola, 0.5 + 3.5 * t, LEMMA_CIRCLE);
        disk_failures += (!lemniscate) as usize + (!parabola) as usize;
    }

    let mut functions: Vec<CaratheodoryFunction> = Vec::with_capacity(samples + 4);
    for order in [0.0, 0.5] {
        for theta in [0.0, PI] {
            functions.push(
                CaratheodoryFunction::half_plane(Complex64::from_polar(1.0, theta), order)
                    .expect("unit node"),
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let k = rng.random_range(1..=crate::classes::MAX_ATOMS);
        let order = if i % 2 == 0 { 0.0 } else { 0.5 };
        if let Ok(p) = CaratheodoryFunction::sample(&mut rng, k, order) {
            functions.push(p);
        }
    }
    let count = functions.len();
    let failures = functions
        .par_iter()
        .filter(|p| !caratheodory_ok(p))
        .count()
        + (samples + 4 - count);
    LemmaSuite {
        disk_lemma_points: 2 * LEMMA_GRID,
        disk_lemma_failures: disk_failures,
        caratheodory_functions: count,
        caratheodory_failures: failures,
    }
}

fn caratheodory_ok(p: &CaratheodoryFunction) -> bool {
    let n = 256;
    CARATHEODORY_RADII.iter().all(|&r| {
        let growth = check_growth_lemma(p, r, n).unwrap_or(false);
        let logderiv = check_logderiv_lemma(p, r, n).unwrap_or(false);
        let lower = if p.order() == 0.5 && r <= floor_range_end() {
            check_logderiv_lower(p, r, n).unwrap_or(false)
        } else {
            true
        };
        growth && logderiv && lower
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SHARP_PAIRS: usize = 19;

    fn all_default_regions() -> Vec<Region> {
        RegionKind::ALL
            .iter()
            .map(|&k| Region::of_kind(k, 0.0, 2.0).unwrap())
            .collect()
    }

    #[test]
    fn sharpness_examples() {
        let s = sharpness_check(ClassId::F1, &Region::Lemniscate).unwrap();
        assert!(s.point > 0.0);
        assert!(s.margin_at_r.abs() < 1e-12);
        assert!(s.margin_beyond.unwrap() < 0.0);
        let s = sharpness_check(ClassId::F5, &Region::Parabola).unwrap();
        assert!(s.point < 0.0 && s.passed());
        let s = sharpness_check(ClassId::F8, &Region::Parabola).unwrap();
        let r = s.radius;
        let w = extremal_member(ClassId::F8)
            .functional(Complex64::new(-r, 0.0))
            .unwrap();
        assert!((w.re - (1.0 - 3.0 * r) / (1.0 - r * r)).abs() < 1e-12);
        assert!(s.passed());
    }

    #[test]
    fn every_sharp_part_passes() {
        let mut count = 0;
        for class in ClassId::ALL {
            for region in all_default_regions() {
                let Ok(result) = formula_radius(class, &region) else {
                    continue;
                };
                if result.sharp {
                    let s = sharpness_check(class, &region).unwrap();
                    assert!(s.passed(), "{class} {region}: {s:?}");
                    count += 1;
                } else {
                    assert!(matches!(
                        sharpness_check(class, &region),
                        Err(Error::NotSharp { .. })
                    ));
                }
            }
        }
        assert_eq!(count, SHARP_PAIRS);
    }

    #[test]
    fn probes_reproduce_conjectures() {
        let cases = [
            (ClassId::F2, Region::Parabola, 0.171573),
            (ClassId::F3, Region::Lemniscate, 0.142009),
            (ClassId::F5, Region::Lemniscate, 0.198912),
        ];
        for (class, region, printed) in cases {
            let probe = conjecture_probe(class, &region).unwrap();
            assert!((probe - printed).abs() < 1e-5, "{class}: {probe}");
            let exact = conjectured_radius(class, &region).unwrap().value;
            assert!((probe - exact).abs() < 1e-9, "{class}: {probe} vs {exact}");
            assert!(formula_radius(class, &region).unwrap().value <= probe);
        }
        // Real-axis oracle for F2: (1 - 3r)/(1 - r²) = 1/2 at r = 3 - 2√2.
        let probe = conjecture_probe(ClassId::F2, &Region::Parabola).unwrap();
        assert!((probe - (3.0 - 8f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn probes_for_bounded_targets() {
        for beta in [1.5, 2.0, 4.0] {
            let region = Region::HalfPlaneMax { beta };
            for class in [ClassId::F3, ClassId::F5] {
                let probe = conjecture_probe(class, &region).unwrap();
                let exact = conjectured_radius(class, &region).unwrap().value;
                assert!((probe - exact).abs() < 1e-9, "{class} beta {beta}");
            }
        }
        assert!(matches!(
            conjecture_probe(ClassId::F1, &Region::Lemniscate),
            Err(Error::NoConjecture { .. })
        ));
    }

    #[test]
    fn empirical_intervals_bracket_radii() {
        let r = empirical_radius(ClassId::F1, &Region::Lemniscate, 60, 128, 9).unwrap();
        let f = formula_radius(ClassId::F1, &Region::Lemniscate).unwrap().value;
        assert!(r.lo <= r.hi);
        assert!(f <= r.hi + 1e-8 && r.lo >= 0.99 * f, "{r:?}");
        let min = Region::HalfPlaneMin { alpha: 0.0 };
        let r = empirical_radius(ClassId::F1, &min, 60, 128, 9).unwrap();
        let root = 5f64.sqrt() - 2.0;
        assert!(r.lo <= root + 1e-8 && root <= r.hi + 1e-8, "{r:?}");
        let bounded = Region::HalfPlaneMax { beta: 2.0 };
        let r = empirical_radius(ClassId::F5, &bounded, 60, 128, 9).unwrap();
        assert!(r.hi >= 1.0 / 3.0);
    }

    #[test]
    fn empirical_rejects_small_runs() {
        assert!(empirical_radius(ClassId::F1, &Region::Lemniscate, 10, 256, 0).is_err());
        assert!(empirical_radius(ClassId::F1, &Region::Lemniscate, 60, 64, 0).is_err());
    }

    #[test]
    fn report_is_deterministic_and_sized() {
        let config = CertifyConfig {
            members: 50,
            grid: 128,
            seed: 1,
        };
        let regions = all_default_regions();
        assert!(build_report(&[], &regions, &config).is_empty());
        let a = build_report(&[ClassId::F2, ClassId::F8], &regions, &config);
        let b = build_report(&[ClassId::F2, ClassId::F8], &regions, &config);
        assert_eq!(a.len(), 6);
        assert_eq!(a, b);
        for row in &a {
            assert!(row.passed(), "{:?}", row.diagnostics());
        }
        let sp = a.iter().find(|r| r.region == Region::Parabola && r.class == ClassId::F2);
        assert_eq!(sp.unwrap().conjecture_status, Some(ConjectureStatus::Consistent));
        let other = build_report(&[ClassId::F2], &regions, &CertifyConfig { seed: 2, ..config });
        assert_ne!(other[0].seed, a[0].seed);
    }

    #[test]
    fn sampled_member_beats_bounded_conjecture_for_f5() {
        // g = z/(1 - xz) and h in P(1/2) with three atoms, found by sampling.
        use crate::classes::Components;
        use crate::herglotz::{convex_member, Atom, HerglotzMeasure};
        let c = Complex64::new;
        let g = convex_member(HerglotzMeasure::point(c(0.434_956_918_520_411_1, -0.900_451_264_106_630_2)).unwrap());
        let atoms = [
            (0.509_498_484_015_614_4, c(0.344_027_844_568_587_5, 0.938_959_446_494_624_6)),
            (0.322_823_068_642_064_1, c(-0.775_780_372_950_502_1, 0.631_003_021_343_622_4)),
            (0.167_678_447_342_321_7, c(-0.985_643_593_544_711_2, 0.168_839_291_944_345_8)),
        ];
        let atoms = atoms.iter().map(|&(weight, node)| Atom { weight, node }).collect();
        let h = CaratheodoryFunction::new(HerglotzMeasure::new(atoms).unwrap(), 0.5).unwrap();
        let m = ClassMember::new(ClassId::F5, Components::Convex { g, h }).unwrap();
        let region = Region::HalfPlaneMax { beta: 2.0 };
        let conj = conjectured_radius(ClassId::F5, &region).unwrap().value;
        assert!(min_margin_on_circle(&m, &region, 0.4125, 4096).unwrap() < 0.0);
        assert!(0.4125 < conj);
        assert!(formula_radius(ClassId::F5, &region).unwrap().value < 0.4125);
    }

    #[test]
    fn report_records_errors_per_row() {
        let config = CertifyConfig {
            members: 10,
            grid: 128,
            seed: 0,
        };
        let rows = build_report(&[ClassId::F1], &[Region::Lemniscate], &config);
        assert_eq!(rows.len(), 1);
        assert!(!rows[0].passed());
        assert!(rows[0].error.as_deref().unwrap().contains("members"));
        // The cheap checks still ran.
        assert!(rows[0].solver.is_some());
    }

    #[test]
    fn printed_constants_pass() {
        let checks = printed_constants();
        assert_eq!(checks.len(), 12);
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
    }

    #[test]
    fn small_lemma_suite_passes() {
        let suite = lemma_suite(40, 3);
        assert_eq!(suite.disk_lemma_points, 200);
        assert_eq!(suite.caratheodory_functions, 44);
        assert!(suite.passed(), "{suite:?}");
    }
}
