//! Viennot's shadow construction of the RS correspondence.
//!
//! Points live on the lattice with `x` = position (rightward) and `y` =
//! value (upward). Each level partitions its dots into shadow lines: a dot
//! joins the `k`-th line when the longest north-east chain of dots ending at
//! it has `k` elements. Sweeping the dots by increasing `x` and keeping the
//! lowest `y` of every line in a sorted frontier assigns lines exactly like
//! patience sorting. Within a line the dots run south-east, and the
//! staircase drawn through them turns at the dots and at the outer corners
//! `(x_{j+1}, y_j)`; those outer corners are the intermediate points that
//! seed the next level.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::permutation::Permutation;
use crate::svg::{level_color, SvgDoc, SvgOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: usize,
    pub y: usize,
}

impl Point {
    pub fn new(x: usize, y: usize) -> Self {
        Point { x, y }
    }

    pub fn reflected(self) -> Self {
        Point { x: self.y, y: self.x }
    }
}

/// One shadow line: its dots from north-west to south-east.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowLine {
    pub dots: Vec<Point>,
}

impl ShadowLine {
    /// Staircase corners: `d_1, (x_2, y_1), d_2, (x_3, y_2), ..., d_m`.
    pub fn staircase(&self) -> Vec<Point> {
        let mut path = Vec::with_capacity(2 * self.dots.len());
        for (j, &dot) in self.dots.iter().enumerate() {
            if j > 0 {
                path.push(Point::new(dot.x, self.dots[j - 1].y));
            }
            path.push(dot);
        }
        path
    }

    pub fn intermediate_points(&self) -> impl Iterator<Item = Point> + '_ {
        self.dots.windows(2).map(|w| Point::new(w[1].x, w[0].y))
    }

    /// x-coordinate where the line leaves through the top edge.
    pub fn top_exit(&self) -> usize {
        self.dots[0].x
    }

    /// y-coordinate where the line leaves through the right edge.
    pub fn right_exit(&self) -> usize {
        self.dots[self.dots.len() - 1].y
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowLevel {
    /// 1-based shadow depth.
    pub index: usize,
    /// Input dots of this level, sorted by `x`.
    pub dots: Vec<Point>,
    pub lines: Vec<ShadowLine>,
    /// Right-side exits, increasing; row `index` of `P`.
    pub exit_rows_y: Vec<usize>,
    /// Top exits, increasing; row `index` of `Q`.
    pub exit_cols_x: Vec<usize>,
    /// Non-dot staircase corners, sorted by `x`.
    pub intermediate_points: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowDiagram {
    pub n: usize,
    pub levels: Vec<ShadowLevel>,
}

impl ShadowDiagram {
    pub fn intermediate_total(&self) -> usize {
        self.levels.iter().map(|l| l.intermediate_points.len()).sum()
    }

    /// The diagram obtained by reflecting every point in the main diagonal.
    pub fn reflected(&self) -> ShadowDiagram {
        shadow_levels_from_dots(
            self.n,
            self.levels.first().map(|l| l.dots.iter().map(|d| d.reflected()).collect()).unwrap_or_default(),
        )
    }
}

fn build_level(index: usize, mut dots: Vec<Point>) -> ShadowLevel {
    dots.sort();
    let mut lines: Vec<ShadowLine> = Vec::new();
    // frontier[k] = lowest y reached so far by line k; increasing in k
    let mut frontier: Vec<usize> = Vec::new();
    for &dot in &dots {
        let k = frontier.partition_point(|&y| y < dot.y);
        if k == frontier.len() {
            frontier.push(dot.y);
            lines.push(ShadowLine { dots: vec![dot] });
        } else {
            frontier[k] = dot.y;
            lines[k].dots.push(dot);
        }
    }
    let mut intermediate_points: Vec<Point> = lines.iter().flat_map(|l| l.intermediate_points()).collect();
    intermediate_points.sort();
    ShadowLevel {
        index,
        exit_rows_y: lines.iter().map(ShadowLine::right_exit).collect(),
        exit_cols_x: lines.iter().map(ShadowLine::top_exit).collect(),
        dots,
        lines,
        intermediate_points,
    }
}

fn shadow_levels_from_dots(n: usize, mut dots: Vec<Point>) -> ShadowDiagram {
    let mut levels = Vec::new();
    while !dots.is_empty() {
        let level = build_level(levels.len() + 1, dots);
        dots = level.intermediate_points.clone();
        levels.push(level);
    }
    ShadowDiagram { n, levels }
}

/// Iterates shadows starting from `Graph(π) = {(i, π_i)}` until no dots remain.
pub fn shadow_diagram(p: &Permutation) -> ShadowDiagram {
    let dots = p.as_slice().iter().enumerate().map(|(i, &v)| Point::new(i + 1, v)).collect();
    shadow_levels_from_dots(p.len(), dots)
}

/// Number of intermediate points over all shadow levels.
pub fn bump_via_shadows(p: &Permutation) -> usize {
    shadow_diagram(p).intermediate_total()
}

/// Intermediate points per level; trailing zeros dropped.
pub fn intermediate_count_per_level(p: &Permutation) -> Vec<usize> {
    let mut counts: Vec<usize> = shadow_diagram(p).levels.iter().map(|l| l.intermediate_points.len()).collect();
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

/// Draws the grid, the dots of `Graph(π)`, every level's shadow lines in its
/// palette color and a hollow marker on each intermediate point.
pub fn render_shadows_svg(d: &ShadowDiagram, opts: &SvgOptions) -> String {
    let pitch = f64::from(opts.pitch);
    let margin = pitch;
    let n = d.n as f64;
    let size = (2.0 * margin + (n + 1.0) * pitch).round() as u32;
    let px = |x: f64| margin + x * pitch;
    let py = |y: f64| margin + (n + 1.0 - y) * pitch;

    let mut header = String::new();
    let _ = write!(
        header,
        "Viennot shadows, n={}, levels={}, intermediate points={}; pitch {}px, x = position rightward, y = value upward, level k colored by palette[(k-1) mod 8]",
        d.n,
        d.levels.len(),
        d.intermediate_total(),
        opts.pitch
    );
    let mut doc = SvgDoc::new(size, size, header);

    // Grid: lattice lines through 1..n, framed by the boundary at 0.5 / n+0.5.
    doc.rect(px(0.5), py(n + 0.5), n * pitch, n * pitch, "none", "#999999", "frame");
    for k in 1..=d.n {
        let k = k as f64;
        doc.line(px(k), py(0.5), px(k), py(n + 0.5), "#dddddd", 1.0, "grid");
        doc.line(px(0.5), py(k), px(n + 0.5), py(k), "#dddddd", 1.0, "grid");
    }

    for level in &d.levels {
        let color = level_color(level.index);
        for line in &level.lines {
            let mut pts = Vec::new();
            pts.push((px(line.top_exit() as f64), py(n + 0.5)));
            for c in line.staircase() {
                pts.push((px(c.x as f64), py(c.y as f64)));
            }
            pts.push((px(n + 0.5), py(line.right_exit() as f64)));
            doc.polyline(&pts, color, 2.0, &format!("shadow level-{}", level.index));
        }
    }

    if let Some(first) = d.levels.first() {
        for dot in &first.dots {
            doc.circle(px(dot.x as f64), py(dot.y as f64), pitch * 0.18, "#000000", "#000000", "dot");
        }
    }
    for level in &d.levels {
        let color = level_color(level.index);
        for pt in &level.intermediate_points {
            doc.circle(px(pt.x as f64), py(pt.y as f64), pitch * 0.18, "#ffffff", color, "intermediate");
        }
    }

    if opts.labels {
        let font = pitch * 0.4;
        for level in &d.levels {
            let color = level_color(level.index);
            for &x in &level.exit_cols_x {
                doc.text(px(x as f64), py(n + 0.5) - pitch * 0.4, font, color, "exit-top", &x.to_string());
            }
            for &y in &level.exit_rows_y {
                doc.text(px(n + 0.5) + pitch * 0.4, py(y as f64), font, color, "exit-right", &y.to_string());
            }
        }
    }
    doc.finish()
}
