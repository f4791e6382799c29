use super::{cross, Point};

/// Convex hull of `subset` (indices into `points`) by monotone chain.
///
/// Returns the extreme indices in counterclockwise order starting from the
/// lexicographically smallest point. Under general position no three input
/// points are collinear, so strict turns suffice; collinear points on the
/// boundary are nevertheless dropped (not extreme).
pub fn convex_hull(points: &[Point], subset: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = subset.to_vec();
    idx.sort_by_key(|&i| (points[i].x, points[i].y));
    idx.dedup_by_key(|i| points[*i]);
    let n = idx.len();
    if n <= 2 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::with_capacity(n);
    for &i in &idx {
        while lower.len() >= 2
            && cross(
                points[lower[lower.len() - 2]],
                points[lower[lower.len() - 1]],
                points[i],
            ) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::with_capacity(n);
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && cross(
                points[upper[upper.len() - 2]],
                points[upper[upper.len() - 1]],
                points[i],
            ) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{orientation, Orientation};

    fn pts(raw: &[(i64, i64)]) -> Vec<Point> {
        raw.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn triangle_all_extreme() {
        let p = pts(&[(0, 0), (2, 0), (1, 1)]);
        let h = convex_hull(&p, &[0, 1, 2]);
        assert_eq!(h.len(), 3);
        for w in 0..3 {
            let (a, b, c) = (h[w], h[(w + 1) % 3], h[(w + 2) % 3]);
            assert_eq!(orientation(p[a], p[b], p[c]), Orientation::Ccw);
        }
    }

    #[test]
    fn interior_point_excluded() {
        let p = pts(&[(0, 0), (4, 0), (0, 4), (1, 1)]);
        let h = convex_hull(&p, &[0, 1, 2, 3]);
        assert_eq!(h.len(), 3);
        assert!(!h.contains(&3));
    }

    #[test]
    fn degenerate_sizes() {
        let p = pts(&[(3, 5), (9, -2)]);
        assert_eq!(convex_hull(&p, &[0]), vec![0]);
        assert_eq!(convex_hull(&p, &[0, 1]).len(), 2);
    }
}
