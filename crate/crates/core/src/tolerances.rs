// SPDX-License-Identifier: Apache-2.0

//! Numerical tolerances shared by the certification checks.
//!
//! Every threshold the library compares against lives here so that tests,
//! the CLI and the acceptance suite agree on the same numbers.

/// Width of the boundary band used when classifying points against a region.
pub const BOUNDARY_BAND: f64 = 1e-9;

/// Slack allowed when a sampled boundary point of a lemma disk is tested.
pub const LEMMA_CONTAINMENT: f64 = 1e-12;

/// Relative enlargement of a lemma disk that must leave the region.
pub const LEMMA_TIGHTNESS_STRETCH: f64 = 1e-3;

/// Slack for the growth and log-derivative inequalities on sampled circles.
pub const CARATHEODORY_LEMMA: f64 = 1e-10;

/// Slack for the defining constraints checked when a class member is built.
pub const MEMBERSHIP: f64 = 1e-9;

/// Slack for disk-bound domination by sampled functionals.
pub const DISK_DOMINATION: f64 = 1e-8;

/// Required agreement between closed-form radii and the bisection solver.
pub const SOLVER_AGREEMENT: f64 = 1e-9;

/// Bisection width used by the solver when the caller does not pick one.
pub const SOLVER_WIDTH: f64 = 1e-13;

/// Largest admissible |margin| of an extremal functional at the sharp radius.
pub const SHARP_MARGIN: f64 = 1e-8;

/// Margin below which the extremal counts as having left the region.
pub const BEYOND_MARGIN: f64 = -1e-10;

/// Relative step past the sharp radius used to observe the violation.
pub const BEYOND_STRETCH: f64 = 1e-3;

/// Agreement between a conjecture probe and the printed conjectured value.
pub const CONJECTURE_MATCH: f64 = 1e-5;

/// Agreement between a closed form and the constant printed with it.
pub const PRINTED_CONSTANT: f64 = 1e-5;

/// Bisection width for exit radii of individual members.
pub const EXIT_WIDTH: f64 = 1e-9;

/// Fraction of the proven radius at which sampled members must stay inside.
pub const SOUNDNESS_FRACTION: f64 = 0.99;
