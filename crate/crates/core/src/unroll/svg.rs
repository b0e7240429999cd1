use std::fmt::Write;

use crate::error::{IconError, Result};
use crate::format::sig9;
use crate::geom::Vec2;
use crate::scalar::Scalar;

use super::element::{Element, TemplatePiece};

#[derive(Clone, Debug, PartialEq)]
pub struct SvgOptions {
    /// Outline stroke width (mm).
    pub stroke_width: f64,
    /// Draw seam labels and colour mated elements alike.
    pub labels: bool,
    /// Space around and between pieces (mm).
    pub margin: f64,
    pub font_size: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self { stroke_width: 0.25, labels: true, margin: 10.0, font_size: 3.0 }
    }
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];

/// Gaps below this are closed by reusing the start point (mm).
const CLOSE_TOL: f64 = 1e-9;

/// Coordinates are printed relative to the page, so anything this small is zero.
fn num(x: f64) -> String {
    if x.abs() < 1e-9 {
        "0".to_owned()
    } else {
        sig9(x)
    }
}

struct Page {
    offset: Vec2<f64>,
    top: f64,
}

impl Page {
    fn point(&self, p: Vec2<f64>) -> String {
        format!("{} {}", num(p.x + self.offset.x), num(self.top - p.y))
    }
}

fn to_f64<T: Scalar>(p: Vec2<T>) -> Vec2<f64> {
    Vec2::new(p.x.to_f64_lossy(), p.y.to_f64_lossy())
}

/// Path command drawing `e` from wherever the pen is, ending at `end`.
fn command<T: Scalar>(e: &Element<T>, end: &str) -> String {
    match *e {
        Element::Segment { .. } => format!("L {end}"),
        Element::Arc { radius, sweep, .. } => {
            let r = num(radius.to_f64_lossy());
            let sweep = sweep.to_f64_lossy();
            let large = u8::from(sweep.abs() > std::f64::consts::PI);
            // y is flipped on the page, so counterclockwise becomes sweep-flag 0
            let flag = u8::from(sweep < 0.0);
            format!("A {r} {r} 0 {large} {flag} {end}")
        }
    }
}

/// Renders the pieces side by side as one SVG document in millimetres.
///
/// Fails with `OpenBoundary` if a piece boundary does not close.
pub fn emit_svg<T: Scalar>(pieces: &[TemplatePiece<T>], options: &SvgOptions) -> Result<String> {
    let m = options.margin;
    let mut layout = Vec::with_capacity(pieces.len());
    let mut x = m;
    let mut height: f64 = 0.0;
    for piece in pieces {
        let gap = piece.closure_gap().to_f64_lossy();
        if !(gap < CLOSE_TOL) {
            return Err(IconError::OpenBoundary(gap));
        }
        let (lo, hi) = piece.bounds();
        let (lo, hi) = (to_f64(lo), to_f64(hi));
        layout.push(Page { offset: Vec2::new(x - lo.x, 0.0), top: m + hi.y });
        x += hi.x - lo.x + m;
        height = height.max(hi.y - lo.y);
    }
    let width = if pieces.is_empty() { 2.0 * m } else { x };
    let height = height + 2.0 * m;

    let mut out = String::new();
    let (w, h) = (num(width), num(height));
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}mm" height="{h}mm" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"  <defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="black"/></marker></defs>"#
    )
    .unwrap();
    let sw = num(options.stroke_width);
    for (i, (piece, page)) in pieces.iter().zip(&layout).enumerate() {
        writeln!(out, r#"  <g id="piece-{i}">"#).unwrap();
        let starts: Vec<String> = piece.boundary.iter().map(|e| page.point(to_f64(e.geometry.start()))).collect();
        let mut d = format!("M {}", starts[0]);
        for (j, e) in piece.boundary.iter().enumerate() {
            let end = if j + 1 == piece.boundary.len() {
                starts[0].clone()
            } else {
                starts[j + 1].clone()
            };
            write!(d, " {}", command(&e.geometry, &end)).unwrap();
        }
        d.push_str(" Z");
        writeln!(out, r#"    <path class="outline" d="{d}" fill="none" stroke="black" stroke-width="{sw}"/>"#).unwrap();

        if options.labels {
            for (j, (e, label)) in piece.boundary.iter().zip(&piece.seam_labels).enumerate() {
                let color = PALETTE[label.id as usize % PALETTE.len()];
                let end = if j + 1 == piece.boundary.len() { &starts[0] } else { &starts[j + 1] };
                let seg = format!("M {} {}", starts[j], command(&e.geometry, end));
                writeln!(
                    out,
                    r#"    <path class="seam" d="{seg}" fill="none" stroke="{color}" stroke-width="{}"/>"#,
                    num(4.0 * options.stroke_width)
                )
                .unwrap();
                let t = to_f64(e.geometry.mid_tangent());
                let inward = Vec2::new(-t.y, t.x);
                let at = to_f64(e.geometry.midpoint()) + inward * (1.5 * options.font_size);
                writeln!(
                    out,
                    r#"    <text x="{}" y="{}" font-size="{}" font-family="sans-serif" text-anchor="middle" fill="{color}">{}</text>"#,
                    num(at.x + page.offset.x),
                    num(page.top - at.y),
                    num(options.font_size),
                    label.text()
                )
                .unwrap();
            }
        }

        let marker = &piece.start_marker;
        let tip = to_f64(marker.position);
        let tail = tip + to_f64(marker.inward) * (4.0 * options.font_size);
        writeln!(
            out,
            r#"    <path class="start" d="M {} L {}" stroke="black" stroke-width="{sw}" marker-end="url(#arrow)"/>"#,
            page.point(tail),
            page.point(tip)
        )
        .unwrap();
        writeln!(out, "  </g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    Ok(out)
}
