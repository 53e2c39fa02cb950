//! SVG drawings of path families.
//!
//! Points are drawn on the rectangular-plus-diagonal layout with `y` pointing
//! up. Paths that share an edge with an earlier path get a small offset along
//! `(1,-1)` so that overlapping pieces stay visible. The offset only affects
//! the drawing.

use std::fmt::Write as _;

use crate::epgt::{shares_edge, Representation};
use crate::lattice::{bbox_of, GridPoint};

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    /// Pixels per grid unit.
    pub cell: f64,
    /// Pixels per offset level.
    pub offset: f64,
    pub margin: f64,
    pub grid: bool,
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            cell: 40.0,
            offset: 4.0,
            margin: 20.0,
            grid: true,
            labels: true,
        }
    }
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

/// Offset level of every path: the smallest level not used by an earlier
/// path it shares an edge with.
pub fn offset_levels(rep: &Representation) -> Vec<usize> {
    let mut levels: Vec<usize> = Vec::with_capacity(rep.len());
    for (i, p) in rep.paths.iter().enumerate() {
        let used: Vec<usize> = (0..i)
            .filter(|&j| shares_edge(p, &rep.paths[j]))
            .map(|j| levels[j])
            .collect();
        levels.push((0..).find(|k| !used.contains(k)).expect("unbounded range"));
    }
    levels
}

pub fn render_svg(rep: &Representation, opts: &RenderOptions) -> String {
    let (lo, hi) = bbox_of(rep.paths.iter().flat_map(|p| p.vertices().iter().copied()))
        .unwrap_or((GridPoint::new(0, 0), GridPoint::new(1, 1)));
    let levels = offset_levels(rep);
    let max_level = levels.iter().copied().max().unwrap_or(0) as f64;
    let pad = opts.margin + max_level * opts.offset;
    let width = f64::from(hi.x - lo.x) * opts.cell + 2.0 * pad;
    let height = f64::from(hi.y - lo.y) * opts.cell + 2.0 * pad;
    let sx = |x: f64| pad + (x - f64::from(lo.x)) * opts.cell;
    let sy = |y: f64| height - pad - (y - f64::from(lo.y)) * opts.cell;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    if opts.grid {
        let _ = writeln!(
            out,
            r##"<g class="grid" stroke="#cccccc" stroke-width="0.5">"##
        );
        for y in lo.y..=hi.y {
            let y = f64::from(y);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                sx(lo.x.into()),
                sy(y),
                sx(hi.x.into()),
                sy(y)
            );
        }
        for x in lo.x..=hi.x {
            let x = f64::from(x);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                sx(x),
                sy(lo.y.into()),
                sx(x),
                sy(hi.y.into())
            );
        }
        // Diagonal y - x = c clipped to the box.
        for c in (lo.y - hi.x)..=(hi.y - lo.x) {
            let x0 = lo.x.max(lo.y - c);
            let x1 = hi.x.min(hi.y - c);
            if x0 < x1 {
                let _ = writeln!(
                    out,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    sx(x0.into()),
                    sy((x0 + c).into()),
                    sx(x1.into()),
                    sy((x1 + c).into())
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }
    for (i, p) in rep.paths.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let d = levels[i] as f64 * opts.offset;
        let pt = |v: GridPoint| (sx(v.x.into()) + d, sy(v.y.into()) + d);
        let id = rep.labels().map_or(i, |l| l[i]);
        let _ = writeln!(out, r#"<g class="path" id="P{id}">"#);
        let pts: Vec<String> = p
            .vertices()
            .iter()
            .map(|&v| {
                let (x, y) = pt(v);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
            pts.join(" ")
        );
        for b in p.bend_points() {
            let (x, y) = pt(b);
            let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="3" fill="{color}"/>"#);
        }
        if opts.labels {
            let (x, y) = pt(p.first());
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="10" fill="{color}">P{id}</text>"#,
                x + 3.0,
                y - 3.0
            );
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{claw_witness, sun_representation};

    #[test]
    fn empty_has_grid_only() {
        let svg = render_svg(&Representation::new(vec![]), &RenderOptions::default());
        assert!(svg.contains(r#"class="grid""#));
        assert!(!svg.contains("<polyline"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn sun_has_one_polyline_per_path() {
        let svg = render_svg(&sun_representation(4).unwrap(), &RenderOptions::default());
        assert_eq!(svg.matches("<polyline").count(), 8);
    }

    #[test]
    fn overlapping_paths_get_distinct_levels() {
        let rep = claw_witness();
        let levels = offset_levels(&rep);
        for i in 0..rep.len() {
            for j in 0..i {
                if shares_edge(&rep.paths[i], &rep.paths[j]) {
                    assert_ne!(levels[i], levels[j]);
                }
            }
        }
    }

    #[test]
    fn deterministic_and_grid_optional() {
        let rep = claw_witness();
        let opts = RenderOptions {
            grid: false,
            ..RenderOptions::default()
        };
        let a = render_svg(&rep, &opts);
        assert_eq!(a, render_svg(&rep, &opts));
        assert!(!a.contains(r#"class="grid""#));
    }
}
