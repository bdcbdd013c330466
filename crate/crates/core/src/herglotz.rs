// SPDX-License-Identifier: Apache-2.0

//! Finite-atom Herglotz representations of functions with positive real part.
//!
//! A probability measure with atoms `(w_k, x_k)`, `|x_k| = 1`, gives
//!
//! ```text
//! q(z) = Σ w_k (1 + x_k z) / (1 - x_k z),     p(z) = α + (1 - α) q(z),
//! ```
//!
//! so that `p(0) = 1` and `Re p > α` on the unit disk. The same measures
//! generate starlike functions of order α (through `zg'/g = p`) and convex
//! functions (through `1 + zg''/g' = q`), with every derivative in closed form.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Error, Result};
use crate::regions::DiskSpec;
use crate::{circle, tolerances};

const UNIT_TOL: f64 = 1e-12;

/// |p(z)| below this makes zp'/p a pole.
const POLE_TOL: f64 = 1e-14;

/// Truncation error allowed for the series of a convex member.
pub const SERIES_TAIL: f64 = 1e-12;

/// Largest modulus at which a convex member may be evaluated.
pub const CONVEX_EVAL_LIMIT: f64 = 0.99;

/// End of the range on which the P(1/2) log-derivative floor is known,
/// `√(8√2 - 11) ≈ 0.56`.
pub fn floor_range_end() -> f64 {
    (8.0 * SQRT_2 - 11.0).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub weight: f64,
    pub node: Complex64,
}

/// Discrete probability measure on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct HerglotzMeasure {
    atoms: Vec<Atom>,
}

impl HerglotzMeasure {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidMeasure("no atoms".into()));
        }
        let mut total = 0.0;
        for a in &atoms {
            if !(a.weight > 0.0) {
                return Err(Error::InvalidMeasure(format!("weight {} is not positive", a.weight)));
            }
            if (a.node.norm() - 1.0).abs() > UNIT_TOL {
                return Err(Error::InvalidMeasure(format!("node {} is not unimodular", a.node)));
            }
            total += a.weight;
        }
        if (total - 1.0).abs() > UNIT_TOL {
            return Err(Error::InvalidMeasure(format!("weights sum to {total}")));
        }
        Ok(HerglotzMeasure { atoms })
    }

    /// The unit mass at `node`.
    pub fn point(node: Complex64) -> Result<Self> {
        HerglotzMeasure::new(vec![Atom { weight: 1.0, node }])
    }

    /// The unit mass at `e^{iθ}`.
    pub fn point_at_angle(theta: f64) -> Self {
        HerglotzMeasure {
            atoms: vec![Atom {
                weight: 1.0,
                node: Complex64::from_polar(1.0, theta),
            }],
        }
    }

    /// `k` atoms with flat-simplex weights and uniform nodes.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidMeasure("k must be at least 1".into()));
        }
        let mut atoms = Vec::with_capacity(k);
        for _ in 0..k {
            // Exponential spacings normalised below give the flat Dirichlet law.
            let e = loop {
                let u: f64 = rng.random();
                if u > 0.0 {
                    break -u.ln();
                }
            };
            let theta = rng.random_range(0.0..2.0 * PI);
            atoms.push(Atom {
                weight: e,
                node: Complex64::from_polar(1.0, theta),
            });
        }
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        for a in &mut atoms {
            a.weight /= total;
        }
        HerglotzMeasure::new(atoms)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// `(Σ w 2xz/(1-xz), Σ w 2x/(1-xz)², Σ w 2x/(1-xz))`.
    fn kernel_sums(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let mut value = Complex64::new(0.0, 0.0);
        let mut slope = Complex64::new(0.0, 0.0);
        let mut log_slope = Complex64::new(0.0, 0.0);
        for a in &self.atoms {
            let x = a.node;
            let inv = 1.0 / (1.0 - x * z);
            let t = 2.0 * a.weight * x * inv;
            value += t * z;
            log_slope += t;
            slope += t * inv;
        }
        (value, slope, log_slope)
    }

    /// `Σ c_k log(1 - x_k z)` on the principal branch.
    fn log_product(&self, z: Complex64, scale: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for a in &self.atoms {
            let base = 1.0 - a.node * z;
            assert!(base.re > 0.0, "1 - xz left the right half-plane at z = {z}");
            acc += scale * a.weight * base.ln();
        }
        acc
    }
}

/// Draws a measure from a seeded stream.
pub fn sample_measure(seed: u64, k: usize) -> Result<HerglotzMeasure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    HerglotzMeasure::sample(&mut rng, k)
}

fn check_disk(z: Complex64, limit: f64) -> Result<()> {
    if z.norm() < limit {
        Ok(())
    } else {
        Err(Error::OutsideDisk { z, limit })
    }
}

/// `p = α + (1 - α) q` with `q` the Herglotz integral of a finite measure.
#[derive(Debug, Clone, PartialEq)]
pub struct CaratheodoryFunction {
    measure: HerglotzMeasure,
    order: f64,
}

impl CaratheodoryFunction {
    pub fn new(measure: HerglotzMeasure, order: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&order) {
            return Err(domain("order", order, "[0, 1)"));
        }
        Ok(CaratheodoryFunction { measure, order })
    }

    /// `(1 + xz)/(1 - xz)` lifted to order α.
    pub fn half_plane(node: Complex64, order: f64) -> Result<Self> {
        CaratheodoryFunction::new(HerglotzMeasure::point(node)?, order)
    }

    pub fn sample<R: Rng + ?Sized>(rng: &mut R, k: usize, order: f64) -> Result<Self> {
        CaratheodoryFunction::new(HerglotzMeasure::sample(rng, k)?, order)
    }

    pub fn measure(&self) -> &HerglotzMeasure {
        &self.measure
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z, 1.0)?;
        let (s, _, _) = self.measure.kernel_sums(z);
        Ok(1.0 + (1.0 - self.order) * s)
    }

    pub fn deriv(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z, 1.0)?;
        let (_, ds, _) = self.measure.kernel_sums(z);
        Ok((1.0 - self.order) * ds)
    }

    /// `z p'(z) / p(z)`.
    pub fn zlogderiv(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z, 1.0)?;
        let (s, ds, _) = self.measure.kernel_sums(z);
        let scale = 1.0 - self.order;
        let p = 1.0 + scale * s;
        if p.norm() < POLE_TOL {
            return Err(Error::NearZeroDenominator(z));
        }
        Ok(z * scale * ds / p)
    }
}

/// Closed-form evaluators of a normalised analytic function `g`.
pub trait AnalyticFn {
    fn value(&self, z: Complex64) -> Result<Complex64>;
    fn deriv(&self, z: Complex64) -> Result<Complex64>;
    fn second_deriv(&self, z: Complex64) -> Result<Complex64>;
    /// `z g'(z) / g(z)`, equal to 1 at the origin.
    fn star_ratio(&self, z: Complex64) -> Result<Complex64>;
    /// `1 + z g''(z) / g'(z)`.
    fn convex_ratio(&self, z: Complex64) -> Result<Complex64>;
}

/// `g(z) = z Π (1 - x_k z)^{-2(1-α) w_k}`, starlike of order α.
#[derive(Debug, Clone, PartialEq)]
pub struct StarlikeMember {
    measure: HerglotzMeasure,
    order: f64,
}

/// Builds the starlike function whose `zg'/g` is the order-α Carathéodory
/// function of `m`.
pub fn starlike_member(m: HerglotzMeasure, order: f64) -> Result<StarlikeMember> {
    if !(0.0..1.0).contains(&order) {
        return Err(domain("order", order, "[0, 1)"));
    }
    Ok(StarlikeMember { measure: m, order })
}

impl StarlikeMember {
    /// The rotation `e^{-iθ} k(e^{iθ} z)` of the Koebe function.
    pub fn koebe(theta: f64) -> Self {
        StarlikeMember {
            measure: HerglotzMeasure::point_at_angle(theta),
            order: 0.0,
        }
    }

    pub fn measure(&self) -> &HerglotzMeasure {
        &self.measure
    }

    pub fn order(&self) -> f64 {
        self.order
    }

    /// `Π (1 - x z)^{-2(1-α)w}`, i.e. `g(z)/z`.
    fn product(&self, z: Complex64) -> Complex64 {
        self.measure.log_product(z, -2.0 * (1.0 - self.order)).exp()
    }
}

impl AnalyticFn for StarlikeMember {
    fn value(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z, 1.0)?;
        Ok(z * self.product(z))
    }

    fn deriv(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.product(z) * self.star_ratio(z)?)
    }

    fn second_deriv(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z, 1.0)?;
        let scale = 1.0 - self.order;
        let (s, ds, ls) = self.measure.kernel_sums(z);
        let prod = self.product(z);
        let ratio = 1.0 + scale * s;
        Ok(prod * (scale * ls * ratio + scale * ds))
    }

    fn star_ratio(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z, 1.0)?;
        let (s, _, _) = self.measure.kernel_sums(z);
        Ok(1.0 + (1.0 - self.order) * s)
    }

    fn convex_ratio(&self, z: Complex64) -> Result<Complex64> {
        check_disk(z, 1.0)?;
        let scale = 1.0 - self.order;
        let (s, ds, ls) = self.measure.kernel_sums(z);
        let ratio = 1.0 + scale * s;
        if ratio.norm() < POLE_TOL {
            return Err(Error::NearZeroDenominator(z));
        }
        // g' = P·s with P'/P = scale·ls, so zg''/g' = z·scale·ls + z s'/s.
        Ok(1.0 + z * scale * ls + z * scale * ds / ratio)
    }
}

/// Convex function with `g'(z) = Π (1 - x_k z)^{-2 w_k}`.
///
/// `g` itself comes from the power series of `g'`, integrated term by term
/// and truncated where the tail is below [`SERIES_TAIL`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexMember {
    measure: HerglotzMeasure,
    /// Coefficients of `g(z)/z`.
    series: Vec<Complex64>,
    limit: f64,
}

/// Builds a convex function from a measure, valid for `|z| <= 0.99`.
pub fn convex_member(m: HerglotzMeasure) -> ConvexMember {
    ConvexMember::with_limit(m, CONVEX_EVAL_LIMIT).expect("default limit is admissible")
}

/// Degree after which the series of `g(z)/z` can be cut at modulus `r`.
///
/// Coefficients of `g'` are dominated by those of `(1 - z)^{-2}`, so the
/// coefficients of `g/z` have modulus at most 1 and the tail after degree
/// `N` is at most `r^{N+1} / (1 - r)`.
pub fn series_degree(r: f64) -> usize {
    if r <= 0.0 {
        return 0;
    }
    let n = ((SERIES_TAIL * (1.0 - r)).ln() / r.ln()).ceil() - 1.0;
    n.max(0.0) as usize
}

impl ConvexMember {
    /// Builds the series long enough for evaluation up to `|z| <= limit`.
    pub fn with_limit(m: HerglotzMeasure, limit: f64) -> Result<Self> {
        if !(limit > 0.0 && limit <= CONVEX_EVAL_LIMIT) {
            return Err(domain("limit", limit, "(0, 0.99]"));
        }
        let degree = series_degree(limit);
        // Power sums μ_j = Σ w x^j drive the recurrence for exp(Σ (2/j) μ_j z^j).
        let mut powers: Vec<Complex64> = m.atoms.iter().map(|_| Complex64::new(1.0, 0.0)).collect();
        let mut mu = vec![Complex64::new(0.0, 0.0); degree + 1];
        for slot in mu.iter_mut().skip(1) {
            let mut acc = Complex64::new(0.0, 0.0);
            for (p, a) in powers.iter_mut().zip(&m.atoms) {
                *p *= a.node;
                acc += a.weight * *p;
            }
            *slot = acc;
        }
        let mut deriv_coeffs = vec![Complex64::new(0.0, 0.0); degree + 1];
        deriv_coeffs[0] = Complex64::new(1.0, 0.0);
        for n in 1..=degree {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=n {
                acc += mu[j] * deriv_coeffs[n - j];
            }
            deriv_coeffs[n] = acc * (2.0 / n as f64);
        }
        let series = deriv_coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c / (n + 1) as f64)
            .collect();
        Ok(ConvexMember {
            measure: m,
            series,
            limit,
        })
    }

    pub fn measure(&self) -> &HerglotzMeasure {
        &self.measure
    }

    pub fn limit(&self) -> f64 {
        self.limit
    }

    /// Number of stored series terms.
    pub fn degree(&self) -> usize {
        self.series.len() - 1
    }

    fn check(&self, z: Complex64) -> Result<()> {
        // Points generated on the limiting circle may exceed it by rounding.
        if z.norm() <= self.limit * (1.0 + 1e-12) {
            Ok(())
        } else {
            Err(Error::OutsideDisk {
                z,
                limit: self.limit,
            })
        }
    }

    /// `g(z)/z` by Horner's rule, cut at the degree `|z|` requires.
    fn quotient(&self, z: Complex64) -> Complex64 {
        let n = series_degree(z.norm()).min(self.degree());
        self.series[..=n]
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }
}

impl AnalyticFn for ConvexMember {
    fn value(&self, z: Complex64) -> Result<Complex64> {
        self.check(z)?;
        Ok(z * self.quotient(z))
    }

    fn deriv(&self, z: Complex64) -> Result<Complex64> {
        self.check(z)?;
        Ok(self.measure.log_product(z, -2.0).exp())
    }

    fn second_deriv(&self, z: Complex64) -> Result<Complex64> {
        self.check(z)?;
        let (_, _, ls) = self.measure.kernel_sums(z);
        Ok(self.measure.log_product(z, -2.0).exp() * ls)
    }

    fn star_ratio(&self, z: Complex64) -> Result<Complex64> {
        self.check(z)?;
        let q = self.quotient(z);
        if q.norm() < POLE_TOL {
            return Err(Error::NearZeroDenominator(z));
        }
        Ok(self.measure.log_product(z, -2.0).exp() / q)
    }

    fn convex_ratio(&self, z: Complex64) -> Result<Complex64> {
        self.check(z)?;
        let (s, _, _) = self.measure.kernel_sums(z);
        Ok(1.0 + s)
    }
}

/// Disk containing the values of any `p ∈ P(α)` on `|z| = r`.
pub fn growth_disk(order: f64, r: f64) -> DiskSpec {
    let d = 1.0 - r * r;
    DiskSpec {
        center: (1.0 + (1.0 - 2.0 * order) * r * r) / d,
        radius: 2.0 * (1.0 - order) * r / d,
    }
}

/// Bound on `|zp'/p|` for `p ∈ P(α)` on `|z| = r`.
pub fn logderiv_bound(order: f64, r: f64) -> f64 {
    2.0 * r * (1.0 - order) / ((1.0 - r) * (1.0 + (1.0 - 2.0 * order) * r))
}

/// Lower bound on `Re zp'/p` for `p ∈ P(1/2)` on `|z| = r`.
pub fn half_order_logderiv_floor(r: f64) -> Result<f64> {
    if !(r >= 0.0 && r <= floor_range_end()) {
        return Err(domain("r", r, "[0, sqrt(8 sqrt 2 - 11)]"));
    }
    if r < 1.0 / 3.0 {
        Ok(-r / (1.0 + r))
    } else {
        let s = SQRT_2 - (1.0 - r * r).sqrt();
        Ok(-s * s / (1.0 - r * r))
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(domain("r", r, "(0, 1)"))
    }
}

/// Whether `p` stays in its growth disk at `n` points of `|z| = r`.
pub fn check_growth_lemma(p: &CaratheodoryFunction, r: f64, n: usize) -> Result<bool> {
    check_radius(r)?;
    let disk = growth_disk(p.order(), r);
    for z in circle(r, n) {
        let w = p.eval(z)?;
        if (w - disk.center).norm() > disk.radius + tolerances::CARATHEODORY_LEMMA {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `|zp'/p|` respects its bound at `n` points of `|z| = r`.
pub fn check_logderiv_lemma(p: &CaratheodoryFunction, r: f64, n: usize) -> Result<bool> {
    check_radius(r)?;
    let bound = logderiv_bound(p.order(), r);
    for z in circle(r, n) {
        if p.zlogderiv(z)?.norm() > bound + tolerances::CARATHEODORY_LEMMA {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `Re zp'/p` stays above the P(1/2) floor at `n` points of `|z| = r`.
pub fn check_logderiv_lower(p: &CaratheodoryFunction, r: f64, n: usize) -> Result<bool> {
    check_radius(r)?;
    if p.order() != 0.5 {
        return Err(domain("order", p.order(), "{1/2}"));
    }
    let floor = half_order_logderiv_floor(r)?;
    for z in circle(r, n) {
        if p.zlogderiv(z)?.re < floor - tolerances::CARATHEODORY_LEMMA {
            return Ok(false);
        }
    }
    Ok(true)
}
