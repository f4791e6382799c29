use crate::error::{Error, Result};
use crate::geom::{cmp_angle_full, cross, segments_intersect, Point};

/// A segment between two indexed points of a [`PointSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: usize,
    pub b: usize,
}

impl Segment {
    pub fn new(a: usize, b: usize) -> Segment {
        assert_ne!(a, b, "segment endpoints must differ");
        Segment { a, b }
    }
}

/// An indexed planar point set, optionally carrying a balanced c-coloring.
///
/// Construction checks coordinate bounds, distinctness, color range and
/// color balance. General position is a separate, more expensive check
/// ([`PointSet::is_general_position`]); algorithms that require it state so.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
    colors: Option<Vec<usize>>,
    color_count: usize,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<PointSet> {
        for p in &points {
            Point::checked(p.x, p.y)?;
        }
        let mut sorted = points.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoints);
        }
        Ok(PointSet {
            points,
            colors: None,
            color_count: 0,
        })
    }

    pub fn with_colors(points: Vec<Point>, colors: Vec<usize>, c: usize) -> Result<PointSet> {
        let mut ps = PointSet::new(points)?;
        if c < 1 || colors.len() != ps.points.len() {
            return Err(Error::UnbalancedColoring(c));
        }
        let mut class_sizes = vec![0usize; c];
        for &col in &colors {
            if col >= c {
                return Err(Error::ColorOutOfRange(col, c));
            }
            class_sizes[col] += 1;
        }
        let (lo, hi) = (
            class_sizes.iter().min().copied().unwrap_or(0),
            class_sizes.iter().max().copied().unwrap_or(0),
        );
        if hi - lo > 1 {
            return Err(Error::UnbalancedColoring(c));
        }
        ps.colors = Some(colors);
        ps.color_count = c;
        Ok(ps)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn is_colored(&self) -> bool {
        self.colors.is_some()
    }

    /// Number of colors; 0 means uncolored.
    #[inline]
    pub fn color_count(&self) -> usize {
        self.color_count
    }

    #[inline]
    pub fn color(&self, i: usize) -> usize {
        self.colors.as_ref().expect("uncolored point set")[i]
    }

    #[inline]
    pub fn colors(&self) -> Option<&[usize]> {
        self.colors.as_deref()
    }

    /// Drop the coloring, keeping the points.
    pub fn uncolored(&self) -> PointSet {
        PointSet {
            points: self.points.clone(),
            colors: None,
            color_count: 0,
        }
    }

    /// True iff the closed segments s and t share at least one point.
    pub fn segments_cross(&self, s: Segment, t: Segment) -> bool {
        segments_intersect(
            self.points[s.a],
            self.points[s.b],
            self.points[t.a],
            self.points[t.b],
        )
    }

    /// No three points collinear. O(n^2 log n): sorts the remaining points
    /// angularly around each point and looks for repeated directions.
    pub fn is_general_position(&self) -> bool {
        let n = self.points.len();
        if n < 3 {
            return true;
        }
        let mut dirs: Vec<Point> = Vec::with_capacity(n - 1);
        for i in 0..n {
            let p = self.points[i];
            dirs.clear();
            for (j, &q) in self.points.iter().enumerate() {
                if j == i {
                    continue;
                }
                // Canonicalize the direction to the upper halfplane so that
                // opposite rays collide too.
                let (mut dx, mut dy) = (q.x - p.x, q.y - p.y);
                if dy < 0 || (dy == 0 && dx < 0) {
                    dx = -dx;
                    dy = -dy;
                }
                dirs.push(Point::new(dx, dy));
            }
            let origin = Point::new(0, 0);
            dirs.sort_by(|&u, &v| cmp_angle_full(origin, u, v));
            if dirs
                .windows(2)
                .any(|w| cross(origin, w[0], w[1]) == 0)
            {
                return false;
            }
        }
        true
    }
}
