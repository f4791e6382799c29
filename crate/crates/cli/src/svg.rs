//! Static SVG figures: points as circles (filled by color class), matching
//! segments as solid lines, an optional separator path dashed.

use conmatch::{Matching, PointSet};
use std::fmt::Write as _;

const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

pub fn render_svg(ps: &PointSet, matching: Option<&Matching>, separator: Option<&[usize]>) -> String {
    // SVG y grows downward; emitting (x, -y) keeps the integer coordinates
    // lossless and the picture upright.
    let xs: Vec<i64> = ps.points().iter().map(|p| p.x).collect();
    let ys: Vec<i64> = ps.points().iter().map(|p| -p.y).collect();
    let (min_x, max_x) = (
        xs.iter().min().copied().unwrap_or(0),
        xs.iter().max().copied().unwrap_or(1),
    );
    let (min_y, max_y) = (
        ys.iter().min().copied().unwrap_or(0),
        ys.iter().max().copied().unwrap_or(1),
    );
    let span = (max_x - min_x).max(max_y - min_y).max(1);
    let margin = span / 20 + 1;
    let radius = (span / 150).max(1);
    let stroke = (radius / 2).max(1);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        min_x - margin,
        min_y - margin,
        (max_x - min_x) + 2 * margin,
        (max_y - min_y) + 2 * margin
    );
    if let Some(path) = separator {
        for w in path.windows(2) {
            let (a, b) = (ps.point(w[0]), ps.point(w[1]));
            let _ = writeln!(
                out,
                r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#d62728" stroke-width="{}" stroke-dasharray="{},{}"/>"##,
                a.x,
                -a.y,
                b.x,
                -b.y,
                stroke,
                3 * stroke,
                2 * stroke
            );
        }
    }
    if let Some(m) = matching {
        for &(i, j) in m.edges() {
            let (a, b) = (ps.point(i), ps.point(j));
            let _ = writeln!(
                out,
                r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#111111" stroke-width="{}"/>"##,
                a.x, -a.y, b.x, -b.y, stroke
            );
        }
    }
    for i in 0..ps.len() {
        let p = ps.point(i);
        let fill = if ps.is_colored() {
            PALETTE[ps.color(i) % PALETTE.len()]
        } else {
            "#111111"
        };
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            p.x, -p.y, radius, fill
        );
    }
    out.push_str("</svg>\n");
    out
}
