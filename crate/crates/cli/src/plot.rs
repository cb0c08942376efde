//! Standalone SVG rendering of base points over a fundamental region.
//!
//! Coordinates are computed exactly up to this point and rounded here, to six
//! decimals, so the output is byte-stable for a given input.

use std::fmt::Write;

use qforms::AlgebraicPoint;

/// Pixels per unit in the upper half plane.
const SCALE: f64 = 200.0;
const MARGIN: f64 = 0.25;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Region {
    /// `|Re z| ≤ 1/2`, `|z| ≥ 1`.
    Pi,
    /// The half with `0 ≤ Re z ≤ 1/2`.
    Pibar,
}

struct Frame {
    x_min: f64,
    y_max: f64,
}

impl Frame {
    fn px(&self, x: f64) -> f64 {
        (x - self.x_min) * SCALE
    }

    fn py(&self, y: f64) -> f64 {
        (self.y_max - y) * SCALE
    }
}

fn fmt6(v: f64) -> String {
    let s = format!("{v:.6}");
    // avoid "-0.000000"
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000000".to_string()
    } else {
        s
    }
}

pub fn render(points: &[AlgebraicPoint], region: Region) -> String {
    let coords: Vec<(f64, f64)> = points.iter().map(AlgebraicPoint::to_f64).collect();
    let x_min = coords.iter().map(|c| c.0).fold(-1.0f64, f64::min) - MARGIN;
    let x_max = coords.iter().map(|c| c.0).fold(1.0f64, f64::max) + MARGIN;
    let y_max = coords.iter().map(|c| c.1).fold(2.0f64, f64::max) + MARGIN;
    let frame = Frame { x_min, y_max };
    let width = (x_max - x_min) * SCALE;
    let height = y_max * SCALE;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt6(width),
        h = fmt6(height)
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
        fmt6(width),
        fmt6(height)
    );
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black" stroke-width="1"/>"#,
        fmt6(frame.px(x_min)),
        fmt6(frame.px(x_max)),
        y = fmt6(frame.py(0.0))
    );

    let (left, arc_from, arc_to) = match region {
        Region::Pi => ((-0.5, SQRT3_2), (-0.5, SQRT3_2), (0.5, SQRT3_2)),
        Region::Pibar => ((0.0, 1.0), (0.0, 1.0), (0.5, SQRT3_2)),
    };
    let right = (0.5, SQRT3_2);
    for (x, y0) in [left, right] {
        let _ = writeln!(
            svg,
            r#"<line class="boundary" x1="{x}" y1="{y0}" x2="{x}" y2="{y1}" stroke="blue" stroke-width="1.5"/>"#,
            x = fmt6(frame.px(x)),
            y0 = fmt6(frame.py(y0)),
            y1 = fmt6(frame.py(y_max))
        );
    }
    // unit circle arc, drawn left to right (clockwise on screen)
    let _ = writeln!(
        svg,
        r#"<path class="boundary" d="M {} {} A {r} {r} 0 0 1 {} {}" fill="none" stroke="blue" stroke-width="1.5"/>"#,
        fmt6(frame.px(arc_from.0)),
        fmt6(frame.py(arc_from.1)),
        fmt6(frame.px(arc_to.0)),
        fmt6(frame.py(arc_to.1)),
        r = fmt6(SCALE)
    );

    for (point, (x, y)) in points.iter().zip(&coords) {
        let _ = writeln!(
            svg,
            r#"<circle class="base-point" cx="{}" cy="{}" r="3" fill="red"><title>{}</title></circle>"#,
            fmt6(frame.px(*x)),
            fmt6(frame.py(*y)),
            point
        );
    }
    svg.push_str("</svg>\n");
    svg
}
