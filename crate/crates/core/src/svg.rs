//! Small deterministic SVG writer shared by the shadow and bump-diagram renderers.
//!
//! Conventions: Cartesian lattice with `x` growing to the right and `y`
//! growing upward, a fixed cell pitch (32px by default), and colors for
//! level `k` taken from an 8-entry palette that cycles with `k`. Elements are
//! emitted in a fixed order and numbers are printed with fixed precision, so
//! equal inputs give byte-identical documents.

use std::fmt::Write;

pub const DEFAULT_PITCH: u32 = 32;

pub const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];

/// Palette color for a 1-based level.
pub fn level_color(level: usize) -> &'static str {
    PALETTE[(level.max(1) - 1) % PALETTE.len()]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgOptions {
    /// Distance in pixels between neighbouring lattice lines.
    pub pitch: u32,
    /// Print exit labels / edge labels next to the drawing.
    pub labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { pitch: DEFAULT_PITCH, labels: true }
    }
}

pub(crate) struct SvgDoc {
    body: String,
    width: u32,
    height: u32,
    header_comment: String,
}

impl SvgDoc {
    pub(crate) fn new(width: u32, height: u32, header_comment: impl Into<String>) -> Self {
        SvgDoc { body: String::new(), width, height, header_comment: header_comment.into() }
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn line(&mut self, x1: f64, y1: f64, x2: f64, y2: f64, stroke: &str, width: f64, class: &str) {
        let _ = writeln!(
            self.body,
            r#"  <line class="{class}" x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{stroke}" stroke-width="{width:.1}"/>"#
        );
    }

    pub(crate) fn polyline(&mut self, points: &[(f64, f64)], stroke: &str, width: f64, class: &str) {
        let pts: Vec<String> = points.iter().map(|(x, y)| format!("{x:.1},{y:.1}")).collect();
        let _ = writeln!(
            self.body,
            r#"  <polyline class="{class}" points="{}" fill="none" stroke="{stroke}" stroke-width="{width:.1}"/>"#,
            pts.join(" ")
        );
    }

    pub(crate) fn circle(&mut self, cx: f64, cy: f64, r: f64, fill: &str, stroke: &str, class: &str) {
        let _ = writeln!(
            self.body,
            r#"  <circle class="{class}" cx="{cx:.1}" cy="{cy:.1}" r="{r:.1}" fill="{fill}" stroke="{stroke}" stroke-width="2.0"/>"#
        );
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn rect(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str, stroke: &str, class: &str) {
        let _ = writeln!(
            self.body,
            r#"  <rect class="{class}" x="{x:.1}" y="{y:.1}" width="{w:.1}" height="{h:.1}" fill="{fill}" stroke="{stroke}" stroke-width="1.0"/>"#
        );
    }

    pub(crate) fn text(&mut self, x: f64, y: f64, size: f64, fill: &str, class: &str, content: &str) {
        let _ = writeln!(
            self.body,
            r#"  <text class="{class}" x="{x:.1}" y="{y:.1}" font-family="monospace" font-size="{size:.1}" text-anchor="middle" dominant-baseline="central" fill="{fill}">{content}</text>"#
        );
    }

    pub(crate) fn finish(self) -> String {
        format!(
            concat!(
                "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
                "<!-- {} -->\n",
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
                "  <rect class=\"background\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
                "{}",
                "</svg>\n"
            ),
            self.header_comment.replace("--", "- -"),
            self.width,
            self.height,
            self.width,
            self.height,
            self.width,
            self.height,
            self.body
        )
    }
}
