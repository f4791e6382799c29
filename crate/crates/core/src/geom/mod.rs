//! Exact integer geometric primitives.
//!
//! All predicates are decided by signs of integer expressions evaluated in
//! `i128`. With coordinates bounded by ±2^30 every determinant used here
//! stays far below the 127-bit limit, so no test ever rounds.

mod depth;
mod hull;
mod ray;
mod select;

pub use depth::{deepest_point, point_depth};
pub use hull::convex_hull;
pub use ray::{last_ray_hull_intersection, RayHit};
pub use select::select_kth_by;

use crate::error::{Error, Result};

/// Inclusive bound on coordinate magnitude.
pub const COORD_LIMIT: i64 = 1 << 30;

/// A planar point with exact integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }

    pub fn checked(x: i64, y: i64) -> Result<Point> {
        for c in [x, y] {
            if c.abs() > COORD_LIMIT {
                return Err(Error::CoordinateOutOfRange(c));
            }
        }
        Ok(Point { x, y })
    }
}

/// Sign of the determinant |q-p r-p|.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// 2x2 cross product (b - a) x (c - a), exact.
#[inline]
pub fn cross(a: Point, b: Point, c: Point) -> i128 {
    let abx = (b.x - a.x) as i128;
    let aby = (b.y - a.y) as i128;
    let acx = (c.x - a.x) as i128;
    let acy = (c.y - a.y) as i128;
    abx * acy - aby * acx
}

/// Exact orientation of the triple (p, q, r).
#[inline]
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    match cross(p, q, r) {
        d if d > 0 => Orientation::Ccw,
        d if d < 0 => Orientation::Cw,
        _ => Orientation::Collinear,
    }
}

#[inline]
fn on_segment(a: Point, b: Point, p: Point) -> bool {
    // Assumes p collinear with a, b.
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// True iff the closed segments ab and cd share at least one point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let d1 = cross(c, d, a).signum();
    let d2 = cross(c, d, b).signum();
    let d3 = cross(a, b, c).signum();
    let d4 = cross(a, b, d).signum();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(c, d, a))
        || (d2 == 0 && on_segment(c, d, b))
        || (d3 == 0 && on_segment(a, b, c))
        || (d4 == 0 && on_segment(a, b, d))
}

/// True iff ab and cd cross in a single point interior to both segments.
pub fn segments_cross_properly(a: Point, b: Point, c: Point, d: Point) -> bool {
    cross(c, d, a).signum() * cross(c, d, b).signum() < 0
        && cross(a, b, c).signum() * cross(a, b, d).signum() < 0
}

/// Compare two points by angle around `center`, both restricted to the closed
/// halfplane reachable by sweeping counterclockwise from `base` by less than
/// pi. Ties mean a collinear triple and are reported as `Equal`.
///
/// Precondition: neither `u` nor `v` equals `center`, and both lie strictly
/// within the open halfplane on the counterclockwise side of the line through
/// `center` with direction `base`, or on the ray itself.
#[inline]
pub fn cmp_angle_in_halfplane(center: Point, u: Point, v: Point) -> std::cmp::Ordering {
    // Within a halfplane sweep of < pi the cross product orders angles.
    cross(center, v, u).cmp(&0)
}

/// Full-circle angular comparator around `center`, starting at the positive
/// x direction. Halfplane index first, then cross sign.
pub fn cmp_angle_full(center: Point, u: Point, v: Point) -> std::cmp::Ordering {
    let half = |p: Point| {
        if p.y > center.y || (p.y == center.y && p.x > center.x) {
            0
        } else {
            1
        }
    };
    half(u)
        .cmp(&half(v))
        .then_with(|| cross(center, v, u).cmp(&0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_axes() {
        let o = Point::new(0, 0);
        assert_eq!(
            orientation(o, Point::new(1, 0), Point::new(0, 1)),
            Orientation::Ccw
        );
        assert_eq!(
            orientation(o, Point::new(1, 0), Point::new(2, 0)),
            Orientation::Collinear
        );
        assert_eq!(
            orientation(o, Point::new(0, 1), Point::new(1, 0)),
            Orientation::Cw
        );
    }

    #[test]
    fn orientation_extreme_coordinates() {
        // Largest-magnitude determinant allowed by the coordinate bound.
        let a = Point::new(-COORD_LIMIT, -COORD_LIMIT);
        let b = Point::new(COORD_LIMIT, -COORD_LIMIT);
        let c = Point::new(0, COORD_LIMIT);
        assert_eq!(orientation(a, b, c), Orientation::Ccw);
        assert_eq!(orientation(a, c, b), Orientation::Cw);
    }

    #[test]
    fn segment_crossings() {
        let p = |x, y| Point::new(x, y);
        // axis cross
        assert!(segments_intersect(p(0, -1), p(0, 1), p(-1, 0), p(1, 0)));
        // parallel disjoint
        assert!(!segments_intersect(p(0, 0), p(1, 0), p(0, 2), p(1, 2)));
        // shared endpoint counts for the closed test but not the proper one
        assert!(segments_intersect(p(0, 0), p(2, 3), p(0, 0), p(5, 1)));
        assert!(!segments_cross_properly(p(0, 0), p(2, 3), p(0, 0), p(5, 1)));
        assert!(segments_cross_properly(p(0, -1), p(0, 1), p(-1, 0), p(1, 0)));
        // collinear overlap touches
        assert!(segments_intersect(p(0, 0), p(4, 0), p(2, 0), p(6, 0)));
    }
}
