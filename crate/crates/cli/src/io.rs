//! Plain-text point and matching formats.
//!
//! Points file: first non-comment line `n c` (c = 0 means uncolored), then n
//! lines `x y` or `x y color`. Matching file: lines `i j` of 0-based indices
//! with an optional trailing `# size=K` summary. Lines starting with `#` are
//! ignored everywhere.

use anyhow::{anyhow, bail, Context, Result};
use conmatch::{Matching, Point, PointSet};
use std::fmt::Write as _;
use std::path::Path;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| anyhow!("empty points file"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .ok_or_else(|| anyhow!("line {ln}: missing n"))?
        .parse()
        .with_context(|| format!("line {ln}: bad n"))?;
    let c: usize = it
        .next()
        .ok_or_else(|| anyhow!("line {ln}: missing c"))?
        .parse()
        .with_context(|| format!("line {ln}: bad c"))?;
    if it.next().is_some() {
        bail!("line {ln}: trailing tokens in header");
    }

    let mut points = Vec::with_capacity(n);
    let mut colors = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, row) = lines
            .next()
            .ok_or_else(|| anyhow!("expected {n} point rows"))?;
        let fields: Vec<&str> = row.split_whitespace().collect();
        let expected = if c > 0 { 3 } else { 2 };
        if fields.len() != expected {
            bail!("line {ln}: expected {expected} fields, found {}", fields.len());
        }
        let x: i64 = fields[0].parse().with_context(|| format!("line {ln}: bad x"))?;
        let y: i64 = fields[1].parse().with_context(|| format!("line {ln}: bad y"))?;
        points.push(Point::new(x, y));
        if c > 0 {
            let col: usize = fields[2]
                .parse()
                .with_context(|| format!("line {ln}: bad color"))?;
            colors.push(col);
        }
    }
    if let Some((ln, _)) = lines.next() {
        bail!("line {ln}: more rows than the declared n = {n}");
    }
    let ps = if c > 0 {
        PointSet::with_colors(points, colors, c)?
    } else {
        PointSet::new(points)?
    };
    Ok(ps)
}

pub fn format_points(ps: &PointSet) -> String {
    let mut out = String::new();
    let c = ps.color_count();
    let _ = writeln!(out, "{} {}", ps.len(), c);
    for i in 0..ps.len() {
        let p = ps.point(i);
        if c > 0 {
            let _ = writeln!(out, "{} {} {}", p.x, p.y, ps.color(i));
        } else {
            let _ = writeln!(out, "{} {}", p.x, p.y);
        }
    }
    out
}

pub fn read_points(path: &Path) -> Result<PointSet> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_points(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn parse_matching(text: &str) -> Result<Matching> {
    let mut edges = Vec::new();
    for (ln, row) in content_lines(text) {
        let fields: Vec<&str> = row.split_whitespace().collect();
        if fields.len() != 2 {
            bail!("line {ln}: expected `i j`");
        }
        let i: usize = fields[0].parse().with_context(|| format!("line {ln}: bad index"))?;
        let j: usize = fields[1].parse().with_context(|| format!("line {ln}: bad index"))?;
        if i == j {
            bail!("line {ln}: degenerate edge ({i}, {j})");
        }
        edges.push((i, j));
    }
    Ok(Matching::new(edges))
}

pub fn format_matching(m: &Matching) -> String {
    let mut out = String::new();
    for &(i, j) in m.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    let _ = writeln!(out, "# size={}", m.len());
    out
}

pub fn read_matching(path: &Path) -> Result<Matching> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_matching(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Separator path file: one line of whitespace-separated vertex indices.
pub fn parse_path(text: &str) -> Result<Vec<usize>> {
    let mut verts = Vec::new();
    for (ln, row) in content_lines(text) {
        for field in row.split_whitespace() {
            verts.push(
                field
                    .parse()
                    .with_context(|| format!("line {ln}: bad index"))?,
            );
        }
    }
    if verts.len() < 2 {
        bail!("a path needs at least two vertices");
    }
    Ok(verts)
}
