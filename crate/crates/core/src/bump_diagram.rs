//! Bump diagrams: an `n x n` grid whose scalar edge labels, propagated by
//! five local rules, spell out the bump sequences of `π` (top edge) and
//! `π⁻¹` (right edge) without running row insertion.
//!
//! Cells use Cartesian coordinates `(x, y)`, both 1-based, `y = 1` at the
//! bottom. Every edge is owned by exactly one cell as its top or right edge;
//! the left and bottom boundary edges of the grid are never labeled.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::svg::{SvgDoc, SvgOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BumpDiagram {
    pub n: usize,
    /// `fill[x-1][y-1]`.
    fill: Vec<Vec<Option<usize>>>,
    /// Label on the top edge of cell `(x, y)`.
    h_edge: Vec<Vec<Option<usize>>>,
    /// Label on the right edge of cell `(x, y)`.
    v_edge: Vec<Vec<Option<usize>>>,
    seeds: Vec<Vec<bool>>,
    /// Top boundary, left to right.
    pub top_reading: Vec<usize>,
    /// Right boundary, bottom to top.
    pub right_reading: Vec<usize>,
}

impl BumpDiagram {
    pub fn fill(&self, x: usize, y: usize) -> Option<usize> {
        self.fill[x - 1][y - 1]
    }

    pub fn top_label(&self, x: usize, y: usize) -> Option<usize> {
        self.h_edge[x - 1][y - 1]
    }

    pub fn right_label(&self, x: usize, y: usize) -> Option<usize> {
        self.v_edge[x - 1][y - 1]
    }

    /// True for the cells `(i, π_i)` that start out holding 0.
    pub fn is_seed(&self, x: usize, y: usize) -> bool {
        self.seeds[x - 1][y - 1]
    }

    /// Mirror image in the south-west/north-east diagonal.
    pub fn reflected(&self) -> BumpDiagram {
        let t = |grid: &Vec<Vec<Option<usize>>>| -> Vec<Vec<Option<usize>>> {
            (0..self.n).map(|y| (0..self.n).map(|x| grid[x][y]).collect()).collect()
        };
        BumpDiagram {
            n: self.n,
            fill: t(&self.fill),
            h_edge: t(&self.v_edge),
            v_edge: t(&self.h_edge),
            seeds: (0..self.n).map(|y| (0..self.n).map(|x| self.seeds[x][y]).collect()).collect(),
            top_reading: self.right_reading.clone(),
            right_reading: self.top_reading.clone(),
        }
    }
}

/// Builds the diagram row by row from the bottom, left to right within a row.
///
/// For every cell, in order:
/// 0. an unfilled cell with no incoming labels is left alone;
/// 1. an unfilled cell whose left and bottom edges both carry `x` is filled with `x + 1`;
/// 2. a filled cell labels its top and right edges with its value;
/// 3. an unfilled cell copies its left label to its right edge (3a) and its
///    bottom label to its top edge (3b).
///
/// A cell with a single incoming label, or two unequal ones, uses rule 3.
/// A seed cell never receives incoming labels; if one ever did, the build
/// fails instead of guessing which label should win.
pub fn build_bump_diagram(p: &Permutation) -> Result<BumpDiagram> {
    let n = p.len();
    let mut fill = vec![vec![None; n]; n];
    let mut seeds = vec![vec![false; n]; n];
    for (i, &v) in p.as_slice().iter().enumerate() {
        fill[i][v - 1] = Some(0);
        seeds[i][v - 1] = true;
    }
    let mut h_edge: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    let mut v_edge: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];

    for y in 0..n {
        for x in 0..n {
            let left = if x > 0 { v_edge[x - 1][y] } else { None };
            let bottom = if y > 0 { h_edge[x][y - 1] } else { None };
            if seeds[x][y] && (left.is_some() || bottom.is_some()) {
                return Err(Error::Internal(format!(
                    "seed cell ({}, {}) of {p} received labels left={left:?} bottom={bottom:?}",
                    x + 1,
                    y + 1
                )));
            }
            if fill[x][y].is_none() {
                if let (Some(a), Some(b)) = (left, bottom) {
                    if a == b {
                        fill[x][y] = Some(a + 1);
                    }
                }
            }
            match fill[x][y] {
                Some(value) => {
                    h_edge[x][y] = Some(value);
                    v_edge[x][y] = Some(value);
                }
                None => {
                    v_edge[x][y] = left;
                    h_edge[x][y] = bottom;
                }
            }
        }
    }

    let read = |label: Option<usize>, side: &str, k: usize| {
        label.ok_or_else(|| Error::Internal(format!("{side} boundary edge {k} of {p} is unlabeled")))
    };
    let top_reading = (0..n).map(|x| read(h_edge[x][n - 1], "top", x + 1)).collect::<Result<Vec<_>>>()?;
    let right_reading = (0..n).map(|y| read(v_edge[n - 1][y], "right", y + 1)).collect::<Result<Vec<_>>>()?;

    Ok(BumpDiagram { n, fill, h_edge, v_edge, seeds, top_reading, right_reading })
}

/// The bump sequence read off the top edge of the diagram.
pub fn bump_sequence_via_diagram(p: &Permutation) -> Result<Vec<usize>> {
    Ok(build_bump_diagram(p)?.top_reading)
}

fn label_width(d: &BumpDiagram) -> usize {
    let max = d.top_reading.iter().chain(&d.right_reading).copied().max().unwrap_or(0);
    max.to_string().len()
}

/// Fixed-width text grid. Cells show their fill; top edges carry labels on
/// the `+---+` borders and right edges carry labels in place of `|`.
pub fn render_diagram_ascii(d: &BumpDiagram) -> String {
    let w = label_width(d);
    let seg = w + 2;
    let mut out = String::new();
    let pad = |s: &str, c: char| {
        let left = (seg - s.len()) / 2;
        let right = seg - s.len() - left;
        format!("{}{}{}", c.to_string().repeat(left), s, c.to_string().repeat(right))
    };
    let row_label_width = d.n.to_string().len();

    for y in (1..=d.n).rev() {
        let mut border = format!("{:>row_label_width$} +", "");
        for x in 1..=d.n {
            match d.top_label(x, y) {
                Some(l) => border.push_str(&pad(&l.to_string(), '-')),
                None => border.push_str(&"-".repeat(seg)),
            }
            border.push('+');
        }
        let _ = writeln!(out, "{}", border.trim_end());

        let mut cells = format!("{y:>row_label_width$} |");
        for x in 1..=d.n {
            match d.fill(x, y) {
                Some(f) if d.is_seed(x, y) => cells.push_str(&pad(&format!("{f}"), ' ').replacen(' ', "*", 1)),
                Some(f) => cells.push_str(&pad(&f.to_string(), ' ')),
                None => cells.push_str(&" ".repeat(seg)),
            }
            match d.right_label(x, y) {
                Some(l) => {
                    let s = l.to_string();
                    cells.push_str(&s);
                    // wide labels overwrite the following cell padding
                    if s.len() > 1 {
                        cells.truncate(cells.len() - (s.len() - 1));
                    }
                }
                None => cells.push('|'),
            }
        }
        let _ = writeln!(out, "{cells}");
    }
    let mut bottom = format!("{:>row_label_width$} +", "");
    for _ in 1..=d.n {
        bottom.push_str(&"-".repeat(seg));
        bottom.push('+');
    }
    let _ = writeln!(out, "{bottom}");
    let mut axis = format!("{:>row_label_width$}  ", "");
    for x in 1..=d.n {
        axis.push_str(&pad(&x.to_string(), ' '));
        axis.push(' ');
    }
    let _ = writeln!(out, "{}", axis.trim_end());
    let join = |v: &[usize]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
    let _ = writeln!(out, "top (left to right):   ({})", join(&d.top_reading));
    let _ = writeln!(out, "right (bottom to top): ({})", join(&d.right_reading));
    let _ = writeln!(out, "* marks the seed cells (i, pi_i)");
    out
}

/// SVG rendering on the same lattice conventions as the shadow drawings.
pub fn render_diagram_svg(d: &BumpDiagram, opts: &SvgOptions) -> String {
    let pitch = f64::from(opts.pitch);
    let margin = pitch;
    let n = d.n as f64;
    let size = (2.0 * margin + n * pitch).round() as u32;
    // lower-left corner of cell (x, y)
    let left = |x: usize| margin + (x as f64 - 1.0) * pitch;
    let bottom = |y: usize| margin + (n - y as f64 + 1.0) * pitch;

    let header = format!(
        "Bump diagram, n={}, top reading=({}), right reading=({}); pitch {}px, cells (x, y) with y upward",
        d.n,
        d.top_reading.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
        d.right_reading.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
        opts.pitch
    );
    let mut doc = SvgDoc::new(size, size, header);
    for y in 1..=d.n {
        for x in 1..=d.n {
            let fill = if d.is_seed(x, y) {
                "#dddddd"
            } else if d.fill(x, y).is_some() {
                "#fff3c4"
            } else {
                "#ffffff"
            };
            doc.rect(left(x), bottom(y) - pitch, pitch, pitch, fill, "#999999", "cell");
        }
    }
    let font = pitch * 0.35;
    for y in 1..=d.n {
        for x in 1..=d.n {
            if let Some(f) = d.fill(x, y) {
                let class = if d.is_seed(x, y) { "seed" } else { "fill" };
                doc.text(left(x) + pitch / 2.0, bottom(y) - pitch / 2.0, font, "#000000", class, &f.to_string());
            }
        }
    }
    if opts.labels {
        for y in 1..=d.n {
            for x in 1..=d.n {
                if let Some(l) = d.top_label(x, y) {
                    doc.text(
                        left(x) + pitch / 2.0,
                        bottom(y) - pitch,
                        font * 0.9,
                        "#1f77b4",
                        "top-label",
                        &l.to_string(),
                    );
                }
                if let Some(l) = d.right_label(x, y) {
                    doc.text(
                        left(x) + pitch,
                        bottom(y) - pitch / 2.0,
                        font * 0.9,
                        "#d62728",
                        "right-label",
                        &l.to_string(),
                    );
                }
            }
        }
    }
    doc.finish()
}
