// SPDX-License-Identifier: Apache-2.0

//! Shared inputs for the criterion benches.

use num_complex::Complex64;
use radconst::{ClassId, Region};

/// Every covered pair at α = 0, β = 2.
pub fn default_pairs() -> Vec<(ClassId, Region)> {
    ClassId::ALL
        .iter()
        .flat_map(|&class| {
            radconst::radii::covered_regions(class, 0.0, 2.0)
                .expect("defaults are in range")
                .into_iter()
                .map(move |region| (class, region))
        })
        .collect()
}

/// A fixed spread of evaluation points inside |z| < 0.6.
pub fn probe_points(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            let t = k as f64 / n as f64;
            Complex64::from_polar(0.05 + 0.55 * t, 7.0 * t)
        })
        .collect()
}
