//! Standalone SVG figures of a polygon, its side disks and the coloured
//! diagonals between disk centers.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Tolerance};
use crate::intersection::intersection_graph;
use crate::oracles::{corner_points, Quadruple};
use crate::polygon::{GreatPolygon, DEFAULT_MIN_GAP};

pub const RED: &str = "#d62728";
pub const BLUE: &str = "#1f77b4";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub width: u32,
    pub height: u32,
    pub show_disks: bool,
    pub show_chords: bool,
    /// Corner points X, Y, Z, T; only drawn for four vertices.
    pub show_corners: bool,
    pub show_labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 800,
            height: 800,
            show_disks: true,
            show_chords: true,
            show_corners: true,
            show_labels: true,
        }
    }
}

struct Canvas {
    cx: f64,
    cy: f64,
    scale: f64,
}

impl Canvas {
    fn x(&self, p: Point) -> f64 {
        self.cx + p.x * self.scale
    }
    fn y(&self, p: Point) -> f64 {
        self.cy - p.y * self.scale
    }
}

fn line(out: &mut String, canvas: &Canvas, p: Point, q: Point, class: &str, style: &str) {
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" {style}/>"#,
        canvas.x(p),
        canvas.y(p),
        canvas.x(q),
        canvas.y(q)
    );
}

fn dot(out: &mut String, canvas: &Canvas, p: Point, r: f64, class: &str, fill: &str) {
    let _ = writeln!(
        out,
        r#"  <circle class="{class}" cx="{:.3}" cy="{:.3}" r="{r:.1}" fill="{fill}"/>"#,
        canvas.x(p),
        canvas.y(p)
    );
}

fn label(out: &mut String, canvas: &Canvas, p: Point, text: &str, fill: &str) {
    let _ = writeln!(
        out,
        r#"  <text class="label" x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14" fill="{fill}" text-anchor="middle" dominant-baseline="middle">{text}</text>"#,
        canvas.x(p),
        canvas.y(p)
    );
}

pub fn render_svg(poly: &GreatPolygon, spec: &RenderSpec, tol: Tolerance) -> Result<String> {
    if spec.width < 100 || spec.height < 100 {
        return Err(Error::Precondition(format!(
            "canvas must be at least 100px, got {}x{}",
            spec.width, spec.height
        )));
    }
    let disks = poly.side_disks();
    let extent = disks
        .iter()
        .map(|d| d.center.norm() + d.radius)
        .fold(1.0f64, f64::max)
        * 1.08;
    let (w, h) = (spec.width as f64, spec.height as f64);
    let canvas = Canvas {
        cx: 0.5 * w,
        cy: 0.5 * h,
        scale: 0.5 * w.min(h) / extent,
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">"#,
        spec.width, spec.height
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"  <circle class="unit-circle" cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        canvas.cx, canvas.cy, canvas.scale
    );

    if spec.show_disks {
        for d in &disks {
            let _ = writeln!(
                out,
                r##"  <circle class="disk" cx="{:.3}" cy="{:.3}" r="{:.3}" fill="#888888" fill-opacity="0.08" stroke="#555555" stroke-width="1"/>"##,
                canvas.x(d.center),
                canvas.y(d.center),
                d.radius * canvas.scale
            );
        }
    }

    if spec.show_chords && poly.n() >= 3 {
        let graph = intersection_graph(poly, tol)?;
        for &(i, j) in &graph.neighbour_edges {
            line(
                &mut out,
                &canvas,
                disks[i].center,
                disks[j].center,
                "chord neighbour",
                r##"stroke="#999999" stroke-width="1""##,
            );
        }
        for &(i, j) in &graph.blue_diagonals {
            let style = format!(r#"stroke="{BLUE}" stroke-width="1.5" stroke-dasharray="6 4""#);
            line(
                &mut out,
                &canvas,
                disks[i].center,
                disks[j].center,
                "chord blue",
                &style,
            );
        }
        for &(i, j) in &graph.red_diagonals {
            let style = format!(r#"stroke="{RED}" stroke-width="2""#);
            line(
                &mut out,
                &canvas,
                disks[i].center,
                disks[j].center,
                "chord red",
                &style,
            );
        }
    }

    for d in &disks {
        dot(&mut out, &canvas, d.center, 2.5, "center", "#555555");
    }
    for i in 0..poly.n() {
        dot(&mut out, &canvas, poly.vertex(i), 4.0, "vertex", "black");
    }

    if spec.show_corners && poly.n() == 4 {
        let v = poly.vertex_angles();
        let quad = Quadruple::new(v[0], v[1], v[2], v[3], DEFAULT_MIN_GAP)?;
        let c = corner_points(&quad, tol)?;
        let pts = [c.x, c.y, c.z, c.t];
        let path: Vec<String> = pts
            .iter()
            .map(|&p| format!("{:.3},{:.3}", canvas.x(p), canvas.y(p)))
            .collect();
        let _ = writeln!(
            out,
            r##"  <polygon class="corner-rect" points="{}" fill="none" stroke="#2ca02c" stroke-width="1.5"/>"##,
            path.join(" ")
        );
        for (p, name) in pts.iter().zip(["X", "Y", "Z", "T"]) {
            dot(&mut out, &canvas, *p, 3.5, "corner", "#2ca02c");
            if spec.show_labels {
                let off = Point::new(0.0, 14.0 / canvas.scale);
                label(&mut out, &canvas, *p + off, name, "#2ca02c");
            }
        }
        dot(&mut out, &canvas, c.e, 2.5, "corner-e", "#2ca02c");
    }

    if spec.show_labels {
        let names = ["A", "B", "C", "D"];
        for i in 0..poly.n() {
            let p = poly.vertex(i);
            let text = match names.get(i) {
                Some(name) if poly.n() == 4 => name.to_string(),
                _ => format!("v{i}"),
            };
            label(&mut out, &canvas, p * (1.0 + 18.0 / canvas.scale), &text, "black");
        }
        for d in &disks {
            let p = d.center * (1.0 - 16.0 / canvas.scale);
            label(&mut out, &canvas, p, &d.index.to_string(), "#555555");
        }
    }

    out.push_str("</svg>\n");
    Ok(out)
}
