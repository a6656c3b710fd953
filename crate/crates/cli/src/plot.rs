//! Standalone SVG of a planar ray space: the two boundary half-lines of the
//! cone, the specific ray, and each sample `y` joined to `Q(y) = y + t₀x̂`.
//!
//! Geometry is drawn in data coordinates inside a flipped group, so the line
//! endpoints in the file are the actual points.

use std::fmt::Write as _;

use mixlat_core::sampling::{stream_rng, Sampler, DEFAULT_RADIUS};
use mixlat_core::{Element, SpaceHandle};

use crate::{CliResult, UsageError};

pub const MAX_POINTS: usize = 16;
const SIZE: f64 = 480.0;
const DEFAULT_POINTS: usize = 8;

fn num(v: f64) -> String {
    let r = (v * 1e9).round() / 1e9;
    if r == 0.0 {
        "0".to_string()
    } else {
        format!("{r}")
    }
}

pub fn render(space: &SpaceHandle, raw_points: &[String], seed: u64) -> CliResult<String> {
    let ray = space.as_ray()?;
    if ray.dim() != 2 {
        return Err(UsageError(format!(
            "plot needs a 2-D ray space, got dimension {}",
            ray.dim()
        )));
    }
    if raw_points.len() > MAX_POINTS {
        return Err(UsageError(format!(
            "at most {MAX_POINTS} points, got {}",
            raw_points.len()
        )));
    }
    let mut pts = Vec::new();
    for p in raw_points {
        let v: Vec<f64> =
            serde_json::from_str(p).map_err(|e| UsageError(format!("point {p}: {e}")))?;
        let e = Element::new(v);
        space.check(&e)?;
        pts.push(e);
    }
    if pts.is_empty() {
        let mut s = Sampler::new(space, stream_rng(seed, "plot", 0), DEFAULT_RADIUS / 2.0);
        pts = (0..DEFAULT_POINTS).map(|_| s.element()).collect();
    }
    let x_hat = ray.x_hat();
    let segs: Vec<(Element, Element, f64)> = pts
        .iter()
        .map(|y| {
            let t0 = ray.t_min_shift(y);
            (y.clone(), y.axpy(t0, x_hat), t0)
        })
        .collect();

    let extent = segs
        .iter()
        .flat_map(|(a, b, _)| [a.max_abs(), b.max_abs()])
        .fold(1.0_f64, f64::max)
        * 1.2;
    let scale = (SIZE / 2.0 - 20.0) / extent;
    let half = SIZE / 2.0;
    let far = extent * 3.0;
    let px = |p: &Element| (half + scale * p[0], half - scale * p[1]);

    let mut boundary = Vec::new();
    for a in ray.cone().facets() {
        for sign in [1.0, -1.0] {
            let d = Element::from([-a[1] * sign, a[0] * sign]);
            let inside = ray.cone().facets().iter().all(|b| b.dot(&d) >= -1e-9);
            if inside {
                boundary.push(d.scale(far / d.norm2()));
            }
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<g transform="translate({half} {half}) scale({} {})" fill="none" stroke-width="1.5">"#,
        num(scale),
        num(-scale)
    );
    for d in &boundary {
        let _ = writeln!(
            svg,
            r##"<line class="facet" x1="0" y1="0" x2="{}" y2="{}" stroke="#555" vector-effect="non-scaling-stroke"/>"##,
            num(d[0]),
            num(d[1])
        );
    }
    let r_end = x_hat.scale(far / x_hat.norm2());
    let _ = writeln!(
        svg,
        r##"<line class="ray" x1="0" y1="0" x2="{}" y2="{}" stroke="#c33" stroke-dasharray="6 4" vector-effect="non-scaling-stroke"/>"##,
        num(r_end[0]),
        num(r_end[1])
    );
    let dot = extent * 0.012;
    for (y, q, t0) in &segs {
        let _ = writeln!(
            svg,
            r##"<line class="q-segment" data-t0="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#36c" vector-effect="non-scaling-stroke"/>"##,
            num(*t0),
            num(y[0]),
            num(y[1]),
            num(q[0]),
            num(q[1])
        );
        let _ = writeln!(
            svg,
            r##"<circle class="y" cx="{}" cy="{}" r="{}" fill="#36c"/>"##,
            num(y[0]),
            num(y[1]),
            num(dot)
        );
        let _ = writeln!(
            svg,
            r##"<circle class="q" cx="{}" cy="{}" r="{}" fill="#c33"/>"##,
            num(q[0]),
            num(q[1]),
            num(dot)
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r##"<g font-family="monospace" font-size="10" fill="#222">"##
    );
    for (i, (y, q, _)) in segs.iter().enumerate() {
        let (ax, ay) = px(y);
        let (bx, by) = px(q);
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}">y{i} ({}, {})</text>"#,
            num(ax + 4.0),
            num(ay - 4.0),
            num(y[0]),
            num(y[1])
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}">Q(y{i})</text>"#,
            num(bx + 4.0),
            num(by + 12.0)
        );
    }
    let _ = writeln!(svg, "</g>");
    svg.push_str("</svg>\n");
    Ok(svg)
}
