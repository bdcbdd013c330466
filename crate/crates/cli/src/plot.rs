// SPDX-License-Identifier: Apache-2.0

//! Plot data: the image of a circle under the extremal functional and the
//! boundary of the target region.

use std::io::Write;

use num_complex::Complex64;
use radconst::radii::target_label;
use radconst::regions::{lemniscate_boundary, parabola_boundary};
use radconst::{circle, extremal_member, ClassId, Region};

pub const IMAGE_POINTS: usize = 512;
pub const BOUNDARY_POINTS: usize = 512;

pub struct PlotData {
    pub class: ClassId,
    pub region: Region,
    pub radius: f64,
    pub image: Vec<Complex64>,
    pub boundary: Vec<Complex64>,
    /// Smallest region margin over the image points.
    pub min_margin: f64,
}

fn vertical_line(re: f64, half_height: f64) -> Vec<Complex64> {
    (0..BOUNDARY_POINTS)
        .map(|k| {
            let t = -half_height + 2.0 * half_height * k as f64 / (BOUNDARY_POINTS - 1) as f64;
            Complex64::new(re, t)
        })
        .collect()
}

pub fn plot_data(class: ClassId, region: &Region, radius: f64) -> anyhow::Result<PlotData> {
    let m = extremal_member(class);
    let image = circle(radius, IMAGE_POINTS)
        .map(|z| m.functional(z))
        .collect::<Result<Vec<_>, _>>()?;
    let min_margin = image
        .iter()
        .map(|&w| region.margin(w))
        .fold(f64::INFINITY, f64::min);
    let height = image
        .iter()
        .map(|w| 1.5 * w.im.abs())
        .filter(|h| h.is_finite())
        .fold(2.0, f64::max);
    let boundary = match *region {
        Region::Lemniscate => lemniscate_boundary(BOUNDARY_POINTS),
        Region::Parabola => parabola_boundary(BOUNDARY_POINTS, height),
        Region::HalfPlaneMin { alpha } => vertical_line(alpha, height),
        Region::HalfPlaneMax { beta } => vertical_line(beta, height),
    };
    Ok(PlotData {
        class,
        region: *region,
        radius,
        image,
        boundary,
        min_margin,
    })
}

pub fn write_csv<W: Write>(data: &PlotData, out: &mut W) -> anyhow::Result<()> {
    let functional = match data.class.functional() {
        radconst::Functional::Starlike => "zf'/f",
        radconst::Functional::Convex => "1 + zf''/f'",
    };
    writeln!(out, "# radconst {} plot-data", crate::VERSION)?;
    writeln!(
        out,
        "# class {} target {} ({}), r = {}",
        data.class,
        target_label(data.class, &data.region),
        data.region,
        data.radius
    )?;
    writeln!(
        out,
        "# series image: {functional} of the extremal function at r e^(2 pi i k/{IMAGE_POINTS})"
    )?;
    writeln!(out, "# series boundary: polyline of the region boundary")?;
    writeln!(out, "# min region margin on image: {}", data.min_margin)?;
    writeln!(out, "# columns: series, index, re, im")?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["series", "index", "re", "im"])?;
    for (series, points) in [("image", &data.image), ("boundary", &data.boundary)] {
        for (k, p) in points.iter().enumerate() {
            w.write_record([
                series.to_string(),
                k.to_string(),
                p.re.to_string(),
                p.im.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
