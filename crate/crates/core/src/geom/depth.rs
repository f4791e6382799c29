use super::{cmp_angle_full, cross, Point};

/// Depth of `points[i]`: the minimum, over all lines through the point, of
/// the number of points strictly on one side. Equivalently, how many points
/// must be removed before `points[i]` reaches the hull boundary.
///
/// Sorts the other points angularly and sweeps a rotating halfplane,
/// O(n log n). Assumes general position (no collinear triple), under which
/// every line through two points has all others strictly on a side.
pub fn point_depth(points: &[Point], i: usize) -> usize {
    let p = points[i];
    let mut others: Vec<usize> = (0..points.len()).filter(|&j| j != i).collect();
    let m = others.len();
    if m <= 1 {
        return 0;
    }
    others.sort_by(|&a, &b| cmp_angle_full(p, points[a], points[b]));

    let mut depth = usize::MAX;
    let mut r = 1usize;
    for t in 0..m {
        if r < t + 1 {
            r = t + 1;
        }
        while r - t < m && cross(p, points[others[t]], points[others[r % m]]) > 0 {
            r += 1;
        }
        let left = r - t - 1;
        depth = depth.min(left.min(m - 1 - left));
    }
    depth
}

/// Index and depth of a point of maximum depth (smallest index on ties).
pub fn deepest_point(points: &[Point]) -> (usize, usize) {
    let mut best = (0usize, 0usize);
    for i in 0..points.len() {
        let d = point_depth(points, i);
        if d > best.1 {
            best = (i, d);
        }
    }
    best
}
