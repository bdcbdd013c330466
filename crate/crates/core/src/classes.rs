// SPDX-License-Identifier: Apache-2.0

//! The eight ratio-defined classes and their members.
//!
//! | class | condition on f        | condition on g      | tested functional |
//! |-------|-----------------------|---------------------|-------------------|
//! | F1    | Re f/g > 0            | Re g/z > 0          | zf'/f             |
//! | F2    | Re f/g > 0            | Re g/z > 1/2        | zf'/f             |
//! | F3    | \|f/g - 1\| < 1       | Re g/z > 0          | zf'/f             |
//! | F4    | \|f'/g' - 1\| < 1     | Re g' > 0           | 1 + zf''/f'       |
//! | F5    | \|f/g - 1\| < 1       | g convex            | zf'/f             |
//! | F6    | \|f'/g' - 1\| < 1     | g univalent         | 1 + zf''/f'       |
//! | F7    | \|f'/g' - 1\| < 1     | g starlike          | 1 + zf''/f'       |
//! | F8    | \|f'/g' - 1\| < 1     | g convex            | 1 + zf''/f'       |
//!
//! Members are assembled from Carathéodory functions so that the functional
//! has a closed form, e.g. `f = z p h` gives `zf'/f = 1 + zp'/p + zh'/h`.
//! The condition `|u - 1| < 1` is realised as `u = 1/h` with `Re h > 1/2`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::herglotz::{
    convex_member, half_order_logderiv_floor, AnalyticFn, CaratheodoryFunction, ConvexMember,
    HerglotzMeasure, StarlikeMember,
};
use crate::regions::DiskSpec;
use crate::{circle, tolerances};

/// Largest number of atoms drawn for one sampled component.
pub const MAX_ATOMS: usize = 8;

/// Modulus of the circle on which membership constraints are checked.
pub const MEMBERSHIP_RADIUS: f64 = 0.95;

/// Number of points on the membership circle.
pub const MEMBERSHIP_POINTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
}

/// Which quantity of `f` a class is tested on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Functional {
    /// `z f'(z) / f(z)`.
    Starlike,
    /// `1 + z f''(z) / f'(z)`.
    Convex,
}

impl ClassId {
    pub const ALL: [ClassId; 8] = [
        ClassId::F1,
        ClassId::F2,
        ClassId::F3,
        ClassId::F4,
        ClassId::F5,
        ClassId::F6,
        ClassId::F7,
        ClassId::F8,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn functional(self) -> Functional {
        match self {
            ClassId::F1 | ClassId::F2 | ClassId::F3 | ClassId::F5 => Functional::Starlike,
            ClassId::F4 | ClassId::F6 | ClassId::F7 | ClassId::F8 => Functional::Convex,
        }
    }

    /// The condition linking `f` and `g`.
    pub fn ratio_condition(self) -> &'static str {
        match self {
            ClassId::F1 | ClassId::F2 => "Re(f/g) > 0",
            ClassId::F3 | ClassId::F5 => "|f/g - 1| < 1",
            ClassId::F4 | ClassId::F6 | ClassId::F7 | ClassId::F8 => "|f'/g' - 1| < 1",
        }
    }

    /// The condition on `g` alone.
    pub fn auxiliary_condition(self) -> &'static str {
        match self {
            ClassId::F1 | ClassId::F3 => "Re(g/z) > 0",
            ClassId::F2 => "Re(g/z) > 1/2",
            ClassId::F4 => "Re g' > 0",
            ClassId::F5 | ClassId::F8 => "g convex",
            ClassId::F6 => "g univalent",
            ClassId::F7 => "g starlike",
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.index() + 1)
    }
}

impl FromStr for ClassId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let t = s.trim();
        let digits = t.strip_prefix(['F', 'f']).unwrap_or(t);
        match digits.parse::<usize>() {
            Ok(n @ 1..=8) => Ok(ClassId::ALL[n - 1]),
            _ => Err(format!("unknown class `{s}` (expected F1 .. F8)")),
        }
    }
}

/// Disk `|w - c(r)| <= ρ(r)` containing the functional of every member on
/// `|z| = r`, with an optional sharper floor `Re w >= ℓ(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialBound {
    pub disk: DiskSpec,
    pub lower: Option<f64>,
}

impl RadialBound {
    /// Lowest real part the bound allows.
    pub fn min_real(&self, use_lower: bool) -> f64 {
        let symmetric = self.disk.center - self.disk.radius;
        match self.lower {
            Some(l) if use_lower => l.max(symmetric),
            _ => symmetric,
        }
    }

    /// Highest real part the bound allows.
    pub fn max_real(&self) -> f64 {
        self.disk.center + self.disk.radius
    }
}

/// Range of `r` on which the class has a floor `ℓ(r)`.
pub fn lower_bound_range(class: ClassId) -> Option<(f64, f64)> {
    match class {
        ClassId::F2 => Some((0.0, crate::herglotz::floor_range_end())),
        _ => None,
    }
}

/// Derivation disk of `class` at radius `r`, `0 < r < 1`.
pub fn disk_bound(class: ClassId, r: f64) -> Result<RadialBound> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain("r", r, "(0, 1)"));
    }
    Ok(bound_at(class, r))
}

/// Same as [`disk_bound`] without the range check; also defined at `r = 0`.
pub(crate) fn bound_at(class: ClassId, r: f64) -> RadialBound {
    let d = 1.0 - r * r;
    let (center, radius) = match class {
        ClassId::F1 => (1.0, 4.0 * r / d),
        ClassId::F2 | ClassId::F3 | ClassId::F4 => (1.0, (3.0 * r + r * r) / d),
        ClassId::F5 => (1.0 / d, (2.0 * r + r * r) / d),
        ClassId::F6 | ClassId::F7 => ((1.0 + r * r) / d, (5.0 * r + r * r) / d),
        ClassId::F8 => ((1.0 + r * r) / d, (3.0 * r + r * r) / d),
    };
    let lower = match lower_bound_range(class) {
        // Re zh'/h >= -2r/(1 - r²) for h in P, plus the P(1/2) floor for p.
        Some((lo, hi)) if r >= lo && r <= hi => half_order_logderiv_floor(r)
            .ok()
            .map(|floor| 1.0 - 2.0 * r / d + floor),
        _ => None,
    };
    RadialBound {
        disk: DiskSpec { center, radius },
        lower,
    }
}

/// The analytic pieces a member is assembled from.
#[derive(Debug, Clone, PartialEq)]
pub enum Components {
    /// `f = z p h` (F1, F2).
    Product {
        p: CaratheodoryFunction,
        h: CaratheodoryFunction,
    },
    /// `f = z p / h` (F3) or `f' = p / h` (F4).
    Quotient {
        p: CaratheodoryFunction,
        h: CaratheodoryFunction,
    },
    /// `f = g / h` (F5) or `f' = g' / h` (F8), with `g` convex.
    Convex {
        g: ConvexMember,
        h: CaratheodoryFunction,
    },
    /// `f' = g' / h` with `g` starlike (F6, F7).
    Starlike {
        g: StarlikeMember,
        h: CaratheodoryFunction,
    },
}

/// How a member came to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    Sampled { seed: u64 },
    Extremal,
    Supplied,
}

/// A concrete member of one of the classes.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMember {
    class: ClassId,
    parts: Components,
    origin: Origin,
}

fn shape_matches(class: ClassId, parts: &Components) -> bool {
    matches!(
        (class, parts),
        (ClassId::F1 | ClassId::F2, Components::Product { .. })
            | (ClassId::F3 | ClassId::F4, Components::Quotient { .. })
            | (ClassId::F5 | ClassId::F8, Components::Convex { .. })
            | (ClassId::F6 | ClassId::F7, Components::Starlike { .. })
    )
}

/// Nodes and weights of the 8-point Gauss-Legendre rule on [-1, 1].
const GAUSS_LEGENDRE_8: [(f64, f64); 4] = [
    (0.183_434_642_495_649_8, 0.362_683_783_378_362_0),
    (0.525_532_409_916_329_0, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_5),
    (0.960_289_856_497_536_3, 0.101_228_536_290_376_3),
];

const QUADRATURE_PANELS: usize = 16;

/// `z ∫₀¹ f'(tz) dt` by composite Gauss-Legendre.
fn integrate_ray(z: Complex64, deriv: impl Fn(Complex64) -> Result<Complex64>) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let width = 1.0 / QUADRATURE_PANELS as f64;
    for panel in 0..QUADRATURE_PANELS {
        let mid = (panel as f64 + 0.5) * width;
        for &(x, w) in &GAUSS_LEGENDRE_8 {
            for t in [mid - 0.5 * width * x, mid + 0.5 * width * x] {
                acc += w * deriv(z * t)?;
            }
        }
    }
    Ok(z * acc * (0.5 * width))
}

impl ClassMember {
    /// Assembles a member and checks its defining constraints on
    /// `|z| = 0.95`.
    pub fn new(class: ClassId, parts: Components) -> Result<Self> {
        ClassMember::with_origin(class, parts, Origin::Supplied)
    }

    fn with_origin(class: ClassId, parts: Components, origin: Origin) -> Result<Self> {
        if !shape_matches(class, &parts) {
            return Err(Error::ComponentMismatch(class));
        }
        let member = ClassMember {
            class,
            parts,
            origin,
        };
        member.check_constraints()?;
        Ok(member)
    }

    pub fn class(&self) -> ClassId {
        self.class
    }

    pub fn components(&self) -> &Components {
        &self.parts
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    /// The Carathéodory function `h` shared by every construction.
    fn h(&self) -> &CaratheodoryFunction {
        match &self.parts {
            Components::Product { h, .. }
            | Components::Quotient { h, .. }
            | Components::Convex { h, .. }
            | Components::Starlike { h, .. } => h,
        }
    }

    /// `zf'/f` or `1 + zf''/f'`, from the composition identities.
    pub fn functional(&self, z: Complex64) -> Result<Complex64> {
        let h_term = self.h().zlogderiv(z)?;
        match (&self.parts, self.class) {
            (Components::Product { p, .. }, _) => Ok(1.0 + p.zlogderiv(z)? + h_term),
            (Components::Quotient { p, .. }, _) => Ok(1.0 + p.zlogderiv(z)? - h_term),
            (Components::Convex { g, .. }, ClassId::F5) => Ok(g.star_ratio(z)? - h_term),
            (Components::Convex { g, .. }, _) => Ok(g.convex_ratio(z)? - h_term),
            (Components::Starlike { g, .. }, _) => Ok(g.convex_ratio(z)? - h_term),
        }
    }

    /// `f(z)`. For classes defined through `f'` this is a quadrature of `f'`.
    pub fn f(&self, z: Complex64) -> Result<Complex64> {
        let h = self.h();
        match (&self.parts, self.class) {
            (Components::Product { p, .. }, _) => Ok(z * p.eval(z)? * h.eval(z)?),
            (Components::Quotient { p, .. }, ClassId::F3) => Ok(z * p.eval(z)? / h.eval(z)?),
            (Components::Convex { g, .. }, ClassId::F5) => Ok(g.value(z)? / h.eval(z)?),
            _ => integrate_ray(z, |u| self.f_prime(u)),
        }
    }

    pub fn f_prime(&self, z: Complex64) -> Result<Complex64> {
        let h = self.h();
        let hv = h.eval(z)?;
        match (&self.parts, self.class) {
            (Components::Product { p, .. }, _) => {
                let pv = p.eval(z)?;
                Ok(pv * hv + z * (p.deriv(z)? * hv + pv * h.deriv(z)?))
            }
            (Components::Quotient { p, .. }, ClassId::F3) => {
                let pv = p.eval(z)?;
                Ok((pv + z * p.deriv(z)?) / hv - z * pv * h.deriv(z)? / (hv * hv))
            }
            (Components::Quotient { p, .. }, _) => Ok(p.eval(z)? / hv),
            (Components::Convex { g, .. }, ClassId::F5) => {
                Ok((g.deriv(z)? * hv - g.value(z)? * h.deriv(z)?) / (hv * hv))
            }
            (Components::Convex { g, .. }, _) => Ok(g.deriv(z)? / hv),
            (Components::Starlike { g, .. }, _) => Ok(g.deriv(z)? / hv),
        }
    }

    /// `f''(z)`, available for the classes tested on `1 + zf''/f'`.
    pub fn f_second(&self, z: Complex64) -> Result<Option<Complex64>> {
        if self.class.functional() != Functional::Convex {
            return Ok(None);
        }
        let h = self.h();
        let hv = h.eval(z)?;
        let dh = h.deriv(z)?;
        let (num, den) = match &self.parts {
            Components::Quotient { p, .. } => (p.deriv(z)?, p.eval(z)?),
            Components::Convex { g, .. } => (g.second_deriv(z)?, g.deriv(z)?),
            Components::Starlike { g, .. } => (g.second_deriv(z)?, g.deriv(z)?),
            Components::Product { .. } => unreachable!("product members are starlike-tested"),
        };
        Ok(Some((num * hv - den * dh) / (hv * hv)))
    }

    /// `g(z)` for the classes where the condition involves `g`, or `g'(z)`
    /// for those where it involves `g'`.
    fn auxiliary(&self, z: Complex64) -> Result<Complex64> {
        match (&self.parts, self.class) {
            (Components::Product { p, .. }, _) => Ok(z * p.eval(z)?),
            (Components::Quotient { p, .. }, ClassId::F3) => Ok(z * p.eval(z)?),
            (Components::Quotient { p, .. }, _) => p.eval(z),
            (Components::Convex { g, .. }, ClassId::F5) => g.value(z),
            (Components::Convex { g, .. }, _) => g.deriv(z),
            (Components::Starlike { g, .. }, _) => g.deriv(z),
        }
    }

    /// Margins of the two defining inequalities at `z`.
    fn constraint_margins(&self, z: Complex64) -> Result<[(&'static str, f64); 2]> {
        let class = self.class;
        let ratio = match class.functional() {
            Functional::Starlike => self.f(z)? / self.auxiliary(z)?,
            Functional::Convex => self.f_prime(z)? / self.auxiliary(z)?,
        };
        let ratio_margin = match class {
            ClassId::F1 | ClassId::F2 => ratio.re,
            _ => 1.0 - (ratio - 1.0).norm(),
        };
        let aux_margin = match &self.parts {
            Components::Product { .. } | Components::Quotient { .. } => {
                let v = self.auxiliary(z)?;
                let base = if class == ClassId::F4 { v } else { v / z };
                let floor = if class == ClassId::F2 { 0.5 } else { 0.0 };
                base.re - floor
            }
            Components::Convex { g, .. } => g.convex_ratio(z)?.re,
            // Starlike g is univalent; for F6 this is the checkable proxy.
            Components::Starlike { g, .. } => g.star_ratio(z)?.re,
        };
        Ok([
            (class.ratio_condition(), ratio_margin),
            (class.auxiliary_condition(), aux_margin),
        ])
    }

    fn check_constraints(&self) -> Result<()> {
        for z in circle(MEMBERSHIP_RADIUS, MEMBERSHIP_POINTS) {
            for (constraint, margin) in self.constraint_margins(z)? {
                if margin < -tolerances::MEMBERSHIP {
                    return Err(Error::ConstraintViolation {
                        class: self.class,
                        constraint,
                        z,
                        margin,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Evaluates the tested functional of a member.
pub fn eval_functional(m: &ClassMember, z: Complex64) -> Result<Complex64> {
    m.functional(z)
}

fn sample_p<R: Rng>(rng: &mut R, order: f64) -> Result<CaratheodoryFunction> {
    let k = rng.random_range(1..=MAX_ATOMS);
    CaratheodoryFunction::sample(rng, k, order)
}

fn sample_measure_in<R: Rng>(rng: &mut R) -> Result<HerglotzMeasure> {
    let k = rng.random_range(1..=MAX_ATOMS);
    HerglotzMeasure::sample(rng, k)
}

/// A random member of `class`, deterministic in `seed`.
///
/// Convex auxiliary functions are built for evaluation up to `|z| <= 0.95`.
/// F6 draws a rotated Koebe function half of the time and a sampled starlike
/// function otherwise; general univalent functions are not sampled.
pub fn make_member(class: ClassId, seed: u64) -> Result<ClassMember> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts = match class {
        ClassId::F1 => Components::Product {
            p: sample_p(&mut rng, 0.0)?,
            h: sample_p(&mut rng, 0.0)?,
        },
        ClassId::F2 => Components::Product {
            p: sample_p(&mut rng, 0.5)?,
            h: sample_p(&mut rng, 0.0)?,
        },
        ClassId::F3 | ClassId::F4 => Components::Quotient {
            p: sample_p(&mut rng, 0.0)?,
            h: sample_p(&mut rng, 0.5)?,
        },
        ClassId::F5 | ClassId::F8 => Components::Convex {
            g: ConvexMember::with_limit(sample_measure_in(&mut rng)?, MEMBERSHIP_RADIUS)?,
            h: sample_p(&mut rng, 0.5)?,
        },
        ClassId::F6 => {
            let g = if rng.random_bool(0.5) {
                StarlikeMember::koebe(rng.random_range(0.0..std::f64::consts::TAU))
            } else {
                crate::herglotz::starlike_member(sample_measure_in(&mut rng)?, 0.0)?
            };
            Components::Starlike {
                g,
                h: sample_p(&mut rng, 0.5)?,
            }
        }
        ClassId::F7 => Components::Starlike {
            g: crate::herglotz::starlike_member(sample_measure_in(&mut rng)?, 0.0)?,
            h: sample_p(&mut rng, 0.5)?,
        },
    };
    ClassMember::with_origin(class, parts, Origin::Sampled { seed })
}

fn half_plane(node: f64, order: f64) -> CaratheodoryFunction {
    CaratheodoryFunction::half_plane(Complex64::new(node, 0.0), order)
        .expect("real unit node and admissible order")
}

fn build_extremal(class: ClassId) -> ClassMember {
    // (1 + z)/(1 - z), 1/(1 - z) and 1/(1 + z) respectively.
    let right = || half_plane(1.0, 0.0);
    let right_half = || half_plane(1.0, 0.5);
    let left_half = || half_plane(-1.0, 0.5);
    let parts = match class {
        ClassId::F1 => Components::Product {
            p: right(),
            h: right(),
        },
        ClassId::F2 => Components::Product {
            p: right_half(),
            h: right(),
        },
        ClassId::F3 | ClassId::F4 => Components::Quotient {
            p: right(),
            h: left_half(),
        },
        ClassId::F5 | ClassId::F8 => Components::Convex {
            g: convex_member(HerglotzMeasure::point_at_angle(0.0)),
            h: left_half(),
        },
        ClassId::F6 | ClassId::F7 => Components::Starlike {
            g: StarlikeMember::koebe(0.0),
            h: left_half(),
        },
    };
    ClassMember::with_origin(class, parts, Origin::Extremal)
        .expect("extremal functions satisfy their class constraints")
}

/// The extremal member of `class`: the function showing a radius cannot be
/// enlarged. F4 uses the F3 pair under the Alexander transform and F7 the F6
/// pair.
pub fn extremal_member(class: ClassId) -> ClassMember {
    static CACHE: OnceLock<Vec<ClassMember>> = OnceLock::new();
    CACHE.get_or_init(|| ClassId::ALL.iter().map(|&c| build_extremal(c)).collect())[class.index()]
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Functionals of the extremal functions, written out by hand.
    fn extremal_closed_form(class: ClassId, z: Complex64) -> Complex64 {
        let d = 1.0 - z * z;
        match class {
            ClassId::F1 => 1.0 + 4.0 * z / d,
            ClassId::F2 | ClassId::F8 => (1.0 + 3.0 * z) / d,
            ClassId::F3 | ClassId::F4 => (1.0 + 3.0 * z - 2.0 * z * z) / d,
            ClassId::F5 => (1.0 + 2.0 * z - z * z) / d,
            ClassId::F6 | ClassId::F7 => (1.0 + 5.0 * z) / d,
        }
    }

    #[test]
    fn class_ids_parse_and_print() {
        for class in ClassId::ALL {
            assert_eq!(class.to_string().parse::<ClassId>().unwrap(), class);
        }
        assert_eq!("f6".parse::<ClassId>().unwrap(), ClassId::F6);
        assert!("F9".parse::<ClassId>().is_err());
        assert!("G1".parse::<ClassId>().is_err());
    }

    #[test]
    fn extremal_functionals_match_closed_forms() {
        let points = [c(0.1, 0.0), c(-0.3, 0.2), c(0.0, -0.6), c(0.45, 0.45), c(-0.9, 0.05)];
        for class in ClassId::ALL {
            let m = extremal_member(class);
            for z in points {
                let got = m.functional(z).unwrap();
                let want = extremal_closed_form(class, z);
                assert!((got - want).norm() < 1e-10 * (1.0 + want.norm()), "{class} at {z}");
            }
        }
    }

    #[test]
    fn extremal_examples() {
        let f1 = extremal_member(ClassId::F1).functional(c(0.5, 0.0)).unwrap();
        assert!((f1 - c(11.0 / 3.0, 0.0)).norm() < 1e-14);
        let r = 0.12;
        let f6 = extremal_member(ClassId::F6).functional(c(-r, 0.0)).unwrap();
        assert!((f6.re - (1.0 - 5.0 * r) / (1.0 - r * r)).abs() < 1e-14);
        let f5 = extremal_member(ClassId::F5).functional(c(-r, 0.0)).unwrap();
        assert!((f5.re - (1.0 - 2.0 * r - r * r) / (1.0 - r * r)).abs() < 1e-12);
        assert_eq!(extremal_member(ClassId::F2).origin(), Origin::Extremal);
    }

    #[test]
    fn extremal_functions_match_printed_f() {
        let f1 = extremal_member(ClassId::F1);
        let f5 = extremal_member(ClassId::F5);
        let f2 = extremal_member(ClassId::F2);
        let f3 = extremal_member(ClassId::F3);
        for z in [c(0.2, 0.1), c(-0.5, 0.3)] {
            let q = (1.0 + z) / (1.0 - z);
            assert!((f1.f(z).unwrap() - z * q * q).norm() < 1e-13);
            assert!((f5.f(z).unwrap() - z * q).norm() < 1e-10);
            let f2_0 = z * (1.0 + z) / ((1.0 - z) * (1.0 - z));
            assert!((f2.f(z).unwrap() - f2_0).norm() < 1e-13);
            let f3_0 = z * (1.0 + z) * (1.0 + z) / (1.0 - z);
            assert!((f3.f(z).unwrap() - f3_0).norm() < 1e-13);
        }
        let f6 = extremal_member(ClassId::F6);
        let f8 = extremal_member(ClassId::F8);
        for z in [c(0.2, 0.1), c(-0.5, 0.3)] {
            let d = 1.0 - z;
            let f6_0 = (1.0 + z) * (1.0 + z) / (d * d * d);
            assert!((f6.f_prime(z).unwrap() - f6_0).norm() < 1e-12);
            assert!((f8.f_prime(z).unwrap() - (1.0 + z) / (d * d)).norm() < 1e-12);
        }
    }

    #[test]
    fn supplied_single_atoms_reproduce_extremals() {
        let m = ClassMember::new(
            ClassId::F1,
            Components::Product {
                p: half_plane(1.0, 0.0),
                h: half_plane(1.0, 0.0),
            },
        )
        .unwrap();
        let z = c(0.3, -0.2);
        let q = (1.0 + z) / (1.0 - z);
        assert!((m.f(z).unwrap() - z * q * q).norm() < 1e-14);
        assert_eq!(m.origin(), Origin::Supplied);
    }

    #[test]
    fn functional_is_normalised() {
        let zero = c(0.0, 0.0);
        for class in ClassId::ALL {
            assert!((extremal_member(class).functional(zero).unwrap() - 1.0).norm() < 1e-15);
            for seed in 0..20 {
                let m = make_member(class, seed).unwrap();
                assert!((eval_functional(&m, zero).unwrap() - 1.0).norm() < 1e-14, "{class}");
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        for class in ClassId::ALL {
            assert_eq!(make_member(class, 5).unwrap(), make_member(class, 5).unwrap());
        }
    }

    fn central_difference(f: impl Fn(Complex64) -> Complex64, z: Complex64) -> Complex64 {
        let h = 1e-6;
        (f(z + h) - f(z - h)) / (2.0 * h)
    }

    #[test]
    fn functional_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(404);
        for class in ClassId::ALL {
            for seed in 0..10 {
                let m = make_member(class, 1000 + seed).unwrap();
                let z = Complex64::from_polar(
                    rng.random_range(0.05..0.6),
                    rng.random_range(0.0..std::f64::consts::TAU),
                );
                let expected = match class.functional() {
                    Functional::Starlike => {
                        z * central_difference(|u| m.f(u).unwrap(), z) / m.f(z).unwrap()
                    }
                    Functional::Convex => {
                        let d2 = central_difference(|u| m.f_prime(u).unwrap(), z);
                        1.0 + z * d2 / m.f_prime(z).unwrap()
                    }
                };
                let got = m.functional(z).unwrap();
                assert!((got - expected).norm() < 1e-7, "{class} seed {seed}: {got} vs {expected}");
            }
        }
    }

    #[test]
    fn derivative_evaluators_are_consistent() {
        for class in ClassId::ALL {
            let m = make_member(class, 77).unwrap();
            let z = c(0.21, -0.33);
            let d1 = central_difference(|u| m.f(u).unwrap(), z);
            assert!((d1 - m.f_prime(z).unwrap()).norm() < 1e-7, "{class}");
            if let Some(second) = m.f_second(z).unwrap() {
                let d2 = central_difference(|u| m.f_prime(u).unwrap(), z);
                assert!((d2 - second).norm() < 1e-6, "{class}");
            }
        }
    }

    #[test]
    fn disk_bound_examples() {
        let b = disk_bound(ClassId::F1, 0.2).unwrap();
        assert_eq!(b.disk.center, 1.0);
        assert!((b.disk.radius - 5.0 / 6.0).abs() < 1e-15);
        assert!(b.lower.is_none());
        let b = disk_bound(ClassId::F5, 0.2).unwrap();
        assert!((b.disk.center - 1.0 / 0.96).abs() < 1e-15);
        assert!((b.disk.radius - 0.44 / 0.96).abs() < 1e-15);
        for class in ClassId::ALL {
            let b = disk_bound(class, 1e-9).unwrap();
            assert!((b.disk.center - 1.0).abs() < 1e-15);
            assert!(b.disk.radius < 1e-8);
        }
        assert!(disk_bound(ClassId::F1, 0.0).is_err());
        assert!(disk_bound(ClassId::F1, 1.0).is_err());
    }

    #[test]
    fn radial_bound_invariants() {
        for class in ClassId::ALL {
            let origin = bound_at(class, 0.0);
            assert_eq!(origin.disk.center, 1.0);
            assert_eq!(origin.disk.radius, 0.0);
            let mut prev = 0.0;
            for i in 1..1000 {
                let r = i as f64 / 1000.0;
                let b = bound_at(class, r);
                assert!(b.disk.radius > prev);
                prev = b.disk.radius;
                if let Some(l) = b.lower {
                    assert!(l >= b.disk.center - b.disk.radius);
                }
            }
        }
    }

    #[test]
    fn f2_floor_matches_printed_form_below_one_third() {
        for i in 1..33 {
            let r = i as f64 / 100.0;
            let l = disk_bound(ClassId::F2, r).unwrap().lower.unwrap();
            assert!((l - (1.0 - 3.0 * r) / (1.0 - r * r)).abs() < 1e-14);
        }
        assert!(disk_bound(ClassId::F2, 0.57).unwrap().lower.is_none());
    }

    #[test]
    fn extremals_saturate_their_disks() {
        // (class, evaluation sign): the touching point is z = +r or z = -r.
        let cases = [
            (ClassId::F1, 1.0),
            (ClassId::F2, 1.0),
            (ClassId::F3, -1.0),
            (ClassId::F5, -1.0),
            (ClassId::F6, -1.0),
            (ClassId::F8, -1.0),
        ];
        for (class, sign) in cases {
            let m = extremal_member(class);
            for r in [0.05, 0.1, 0.2, 0.3, 0.5] {
                let b = disk_bound(class, r).unwrap();
                let w = m.functional(c(sign * r, 0.0)).unwrap();
                let gap = (w - b.disk.center).norm() - b.disk.radius;
                assert!(gap.abs() < 1e-10, "{class} r = {r}: {gap}");
            }
        }
        let m = extremal_member(ClassId::F2);
        let r = 0.25;
        let w = m.functional(c(-r, 0.0)).unwrap();
        assert!((w.re - disk_bound(ClassId::F2, r).unwrap().lower.unwrap()).abs() < 1e-14);
    }

    #[test]
    fn alexander_duality_between_f3_and_f4() {
        for seed in 0..10 {
            let f3 = make_member(ClassId::F3, seed).unwrap();
            let f4 = ClassMember::new(ClassId::F4, f3.components().clone()).unwrap();
            for z in circle(0.4, 16) {
                let a = f3.functional(z).unwrap();
                let b = f4.functional(z).unwrap();
                assert_eq!(a, b);
            }
            // zf' of the F4 member is the F3 member.
            let z = c(0.3, 0.1);
            assert!((z * f4.f_prime(z).unwrap() - f3.f(z).unwrap()).norm() < 1e-13);
        }
    }

    #[test]
    fn construction_rejects_bad_components() {
        let parts = Components::Product {
            p: half_plane(1.0, 0.0),
            h: half_plane(1.0, 0.0),
        };
        assert_eq!(
            ClassMember::new(ClassId::F3, parts.clone()).unwrap_err(),
            Error::ComponentMismatch(ClassId::F3)
        );
        // p of order 0 breaks Re(g/z) > 1/2.
        match ClassMember::new(ClassId::F2, parts) {
            Err(Error::ConstraintViolation { class, constraint, .. }) => {
                assert_eq!(class, ClassId::F2);
                assert_eq!(constraint, "Re(g/z) > 1/2");
            }
            other => panic!("unexpected {other:?}"),
        }
        // h of order 0 breaks |f/g - 1| < 1.
        let parts = Components::Quotient {
            p: half_plane(1.0, 0.0),
            h: half_plane(-1.0, 0.0),
        };
        assert!(matches!(
            ClassMember::new(ClassId::F3, parts),
            Err(Error::ConstraintViolation { .. })
        ));
    }

    #[test]
    fn sampled_members_stay_in_their_disks() {
        for class in ClassId::ALL {
            for seed in 0..40 {
                let m = make_member(class, seed).unwrap();
                for i in 1..=10 {
                    let r = 0.05 * i as f64;
                    let b = disk_bound(class, r).unwrap();
                    for z in circle(r, 128) {
                        let w = m.functional(z).unwrap();
                        let excess = (w - b.disk.center).norm() - b.disk.radius;
                        assert!(excess <= tolerances::DISK_DOMINATION, "{class} seed {seed} r {r}");
                        if let Some(l) = b.lower {
                            assert!(w.re >= l - tolerances::DISK_DOMINATION);
                        }
                    }
                }
            }
        }
    }
}
