// SPDX-License-Identifier: Apache-2.0

use num_complex::Complex64;
use thiserror::Error;

use crate::classes::ClassId;
use crate::regions::RegionKind;

/// Errors raised by the radius library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A real parameter is outside the domain the operation is defined on.
    #[error("parameter `{name}` = {value} is outside {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// An evaluation point is not strictly inside the admissible disk.
    #[error("point {z} lies outside the admissible disk |z| < {limit}")]
    OutsideDisk { z: Complex64, limit: f64 },

    /// A quotient such as zp'/p or zf'/f has a vanishing denominator.
    #[error("denominator vanishes at z = {0}")]
    NearZeroDenominator(Complex64),

    #[error("invalid Herglotz measure: {0}")]
    InvalidMeasure(String),

    /// A constructed class member failed one of its defining inequalities.
    /// This always indicates a construction bug.
    #[error("{class} member violates `{constraint}` at z = {z} (margin {margin:e})")]
    ConstraintViolation {
        class: ClassId,
        constraint: &'static str,
        z: Complex64,
        margin: f64,
    },

    #[error("components do not match the shape required by {0}")]
    ComponentMismatch(ClassId),

    #[error("no radius result for {class} with target {target}")]
    NotCovered { class: ClassId, target: RegionKind },

    #[error("no conjecture for {class} with target {target}")]
    NoConjecture { class: ClassId, target: RegionKind },

    #[error("{class} with target {target} is not a sharp theorem part")]
    NotSharp { class: ClassId, target: RegionKind },

    /// The margin function keeps one sign on (0, 1): the radius is 0 or 1.
    #[error("margin has no sign change on (0, 1)")]
    NoSignChange,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, domain: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        domain,
    }
}
