//! Deterministic ASCII and SVG emitters for foldings and trajectory
//! diagrams.
//!
//! ASCII uses one character cell per half-unit. SVG uses the lattice grid
//! directly (origin bottom-left, one unit per lattice unit) with all
//! coordinates written as exact integers or halves, so output is
//! byte-stable across runs and platforms.

use std::fmt::Write as _;

use crate::trajectory::{crossing_counts, Folding, TrajectoryDiagram};

/// Formats a doubled coordinate as `"3"` or `"3.5"`.
fn half(v2: i64) -> String {
    if v2 < 0 {
        format!("-{}", half(-v2))
    } else if v2 % 2 == 0 {
        format!("{}", v2 / 2)
    } else {
        format!("{}.5", v2 / 2)
    }
}

struct Canvas {
    rows: usize,
    cols: usize,
    cells: Vec<u8>,
}

impl Canvas {
    fn new(rows: usize, cols: usize) -> Canvas {
        Canvas { rows, cols, cells: vec![b' '; rows * cols] }
    }

    fn put(&mut self, row: usize, col: usize, ch: u8) {
        if row < self.rows && col < self.cols {
            self.cells[row * self.cols + col] = ch;
        }
    }

    fn render(&self) -> String {
        let mut out = String::new();
        for r in 0..self.rows {
            let line = &self.cells[r * self.cols..(r + 1) * self.cols];
            let trimmed = line
                .iter()
                .rposition(|&c| c != b' ')
                .map(|last| &line[..=last])
                .unwrap_or(&[]);
            out.push_str(std::str::from_utf8(trimmed).unwrap());
            out.push('\n');
        }
        out
    }
}

/// Zigzag picture of a folding, one character per half-unit.
pub fn render_folding_ascii(f: &Folding) -> String {
    let k = f.step;
    let mut canvas = Canvas::new(2 * k + 1, 2 * f.n + 1);
    for x in 0..f.n {
        let (a, b) = (f.heights[x], f.heights[x + 1]);
        let col = 2 * x + 1;
        if b > a {
            canvas.put(2 * (k - a) - 1, col, b'/');
        } else if b < a {
            canvas.put(2 * (k - a) + 1, col, b'\\');
        } else {
            canvas.put(2 * (k - a), col, b'_');
        }
    }
    for (x, &h) in f.heights.iter().enumerate() {
        canvas.put(2 * (k - h), 2 * x, b'o');
    }
    canvas.render()
}

/// Trajectory picture: points `o`, crossings `x`, segments drawn in
/// half-unit cells.
pub fn render_trajectory_ascii(d: &TrajectoryDiagram) -> String {
    let (k, l) = (d.height, d.base);
    let mut canvas = Canvas::new(2 * k + 1, 2 * l + 1);
    let row_of = |y2: i64| (2 * k as i64 - y2) as usize;
    for i in 0..d.segment_count() {
        let (a, b) = d.segment2(i);
        if a == b {
            continue;
        }
        let steps = (b.0 - a.0).abs().max((b.1 - a.1).abs());
        let (dx, dy) = ((b.0 - a.0) / steps, (b.1 - a.1) / steps);
        for t in 1..steps {
            let (x2, y2) = (a.0 + t * dx, a.1 + t * dy);
            let ch = if dy == 0 {
                b'-'
            } else if dx == 0 {
                b'|'
            } else if (dx > 0) == (dy > 0) {
                b'/'
            } else {
                b'\\'
            };
            canvas.put(row_of(y2), x2 as usize, ch);
        }
    }
    for c in &d.crossings {
        canvas.put(row_of(c.at2.1), c.at2.0 as usize, b'x');
    }
    for &(px, py) in &d.points {
        canvas.put(row_of(2 * py as i64), 2 * px, b'o');
    }
    canvas.render()
}

const SVG_LABEL_OFFSETS: [&str; 6] = ["-0.18", "0.5", "-0.78", "1.1", "-1.38", "1.7"];

fn svg_open(out: &mut String, width_units2: i64, height_units2: i64) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         viewBox=\"-1 -1 {} {}\" width=\"{}\" height=\"{}\">",
        half(width_units2 + 4),
        half(height_units2 + 4),
        (width_units2 + 4) * 16,
        (height_units2 + 4) * 16,
    );
}

fn svg_points_and_labels(out: &mut String, points2: &[(i64, i64)], flip_y2: i64) {
    let mut seen: Vec<(i64, i64)> = Vec::new();
    for (x, &(px2, py2)) in points2.iter().enumerate() {
        let occurrence = seen.iter().filter(|&&p| p == (px2, py2)).count();
        seen.push((px2, py2));
        let (cx, cy) = (half(px2), half(flip_y2 - py2));
        let _ = writeln!(out, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"0.07\" fill=\"#000000\"/>");
        let dy = SVG_LABEL_OFFSETS[occurrence.min(SVG_LABEL_OFFSETS.len() - 1)];
        let _ = writeln!(
            out,
            "<text x=\"{cx}\" y=\"{cy}\" dy=\"{dy}\" font-size=\"0.4\" \
             font-family=\"monospace\" text-anchor=\"middle\">{x}</text>",
        );
    }
}

/// SVG picture of a folding: the line drawn at its fold heights, labelled
/// `0…n`, rests as horizontal unit segments of the polyline.
pub fn render_folding_svg(f: &Folding) -> String {
    let mut out = String::new();
    let k2 = 2 * f.step as i64;
    svg_open(&mut out, 2 * f.n as i64, k2);
    let mut path = String::new();
    for (x, &h) in f.heights.iter().enumerate() {
        if x > 0 {
            path.push(' ');
        }
        let _ = write!(path, "{},{}", half(2 * x as i64), half(k2 - 2 * h as i64));
    }
    let _ = writeln!(
        out,
        "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"0.06\" points=\"{path}\"/>"
    );
    let points2: Vec<(i64, i64)> =
        f.heights.iter().enumerate().map(|(x, &h)| (2 * x as i64, 2 * h as i64)).collect();
    svg_points_and_labels(&mut out, &points2, k2);
    out.push_str("</svg>\n");
    out
}

/// SVG picture of a trajectory diagram: the bounding rectangle, the
/// trajectory polyline, labelled points, and crossings marked with rings.
pub fn render_trajectory_svg(d: &TrajectoryDiagram) -> String {
    let mut out = String::new();
    let (k2, l2) = (2 * d.height as i64, 2 * d.base as i64);
    svg_open(&mut out, l2, k2);
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"none\" \
         stroke=\"#999999\" stroke-width=\"0.03\"/>",
        half(l2),
        half(k2),
    );
    let mut path = String::new();
    for (i, &(px, py)) in d.points.iter().enumerate() {
        if i > 0 {
            path.push(' ');
        }
        let _ = write!(path, "{},{}", half(2 * px as i64), half(k2 - 2 * py as i64));
    }
    let _ = writeln!(
        out,
        "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"0.05\" points=\"{path}\"/>"
    );
    for c in &d.crossings {
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"0.14\" fill=\"none\" stroke=\"#cc0000\" \
             stroke-width=\"0.04\"/>",
            half(c.at2.0),
            half(k2 - c.at2.1),
        );
    }
    let points2: Vec<(i64, i64)> =
        d.points.iter().map(|&(px, py)| (2 * px as i64, 2 * py as i64)).collect();
    svg_points_and_labels(&mut out, &points2, k2);
    let counts = crossing_counts(d);
    let _ = writeln!(
        out,
        "<!-- crossings: {} integral, {} half-integral -->",
        counts.integral, counts.half_integral
    );
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::CanonicalCongruence;
    use crate::trajectory::{build_trajectory, folding};

    fn c(n: usize, text: &str) -> CanonicalCongruence {
        CanonicalCongruence::parse(n, text).unwrap()
    }

    #[test]
    fn tent_shape_for_l2() {
        let art = render_folding_ascii(&folding(&c(2, "1")));
        assert_eq!(art, "  o\n / \\\no   o\n");
    }

    #[test]
    fn folding_ascii_zigzag() {
        let art = render_folding_ascii(&folding(&c(5, "2;2")));
        // 6 points over 11 half-unit columns, rest drawn flat at the top
        let lines: Vec<&str> = art.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "    o_o");
        assert!(art.matches('o').count() == 6);
    }

    #[test]
    fn renders_are_deterministic() {
        let d = build_trajectory(&c(18, "4;4,13"), &c(18, "6"));
        assert_eq!(render_trajectory_svg(&d), render_trajectory_svg(&d));
        assert_eq!(render_trajectory_ascii(&d), render_trajectory_ascii(&d));
    }

    #[test]
    fn trajectory_svg_basics() {
        let d = build_trajectory(&c(18, "4;4,13"), &c(18, "6"));
        let svg = render_trajectory_svg(&d);
        assert_eq!(svg.matches("<text").count(), 19);
        assert_eq!(svg.matches("stroke=\"#cc0000\"").count(), 3);
        assert!(svg.contains("viewBox"));
        // half-integral crossing coordinates are rendered exactly
        assert!(svg.contains("cx=\"1.5\""));
    }

    #[test]
    fn half_formatting() {
        assert_eq!(half(6), "3");
        assert_eq!(half(7), "3.5");
        assert_eq!(half(0), "0");
    }
}
