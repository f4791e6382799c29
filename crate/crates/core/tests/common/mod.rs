//! Test oracles, independent of the implementation paths they check.

#![allow(dead_code)]

use conmatch::geom::{cross, RayHit};
use conmatch::Point;

/// O(nh) gift-wrapping hull, counterclockwise from the lexicographic
/// minimum.
pub fn gift_wrap_hull(points: &[Point], subset: &[usize]) -> Vec<usize> {
    let mut idx: Vec<usize> = subset.to_vec();
    idx.sort_by_key(|&i| (points[i].x, points[i].y));
    idx.dedup_by_key(|i| points[*i]);
    if idx.len() <= 2 {
        return idx;
    }
    let start = idx[0];
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut best = usize::MAX;
        for &cand in &idx {
            if cand == cur {
                continue;
            }
            if best == usize::MAX {
                best = cand;
                continue;
            }
            let s = cross(points[cur], points[best], points[cand]);
            // Keep the most clockwise candidate; break collinear ties by
            // distance (farther wins) so collinear inputs do not loop.
            if s < 0
                || (s == 0
                    && (points[cand].x - points[cur].x).abs().max((points[cand].y - points[cur].y).abs())
                        > (points[best].x - points[cur].x).abs().max((points[best].y - points[cur].y).abs()))
            {
                best = cand;
            }
        }
        if best == start || best == usize::MAX {
            break;
        }
        hull.push(best);
        cur = best;
        if hull.len() > idx.len() {
            panic!("gift wrapping failed to close");
        }
    }
    hull
}

/// Exact fraction comparison helper for ray parameters.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Frac {
    num: i128,
    den: i128,
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Frac {
        assert!(den != 0);
        if den < 0 {
            Frac { num: -num, den: -den }
        } else {
            Frac { num, den }
        }
    }

    pub fn is_nonnegative(self) -> bool {
        self.num >= 0
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some((self.num * other.den).cmp(&(other.num * self.den)))
    }
}

/// Brute-force last ray-hull intersection: scan every hull feature. Ray
/// parameters are compared as exact fractions scaled by |dir|^2, which stays
/// within i128 for coordinates up to about 2^19.
pub fn brute_ray_exit(points: &[Point], origin: Point, dir: (i64, i64)) -> Option<RayHit> {
    assert!(points
        .iter()
        .chain(std::iter::once(&origin))
        .all(|p| p.x.abs() < (1 << 19) && p.y.abs() < (1 << 19)));
    let all: Vec<usize> = (0..points.len()).collect();
    let hull = gift_wrap_hull(points, &all);
    let along = |p: Point| {
        (p.x - origin.x) as i128 * dir.0 as i128 + (p.y - origin.y) as i128 * dir.1 as i128
    };
    let across = |p: Point| {
        (p.x - origin.x) as i128 * dir.1 as i128 - (p.y - origin.y) as i128 * dir.0 as i128
    };

    let mut best: Option<(Frac, RayHit)> = None;
    let mut push = |t: Frac, hit: RayHit| {
        if !t.is_nonnegative() {
            return;
        }
        if best.is_none_or(|(bt, _)| t > bt) {
            best = Some((t, hit));
        }
    };
    for &v in &hull {
        if across(points[v]) == 0 {
            push(Frac::new(along(points[v]), 1), RayHit::Vertex(v));
        }
    }
    if hull.len() >= 2 {
        for w in 0..hull.len() {
            let (u, v) = (hull[w], hull[(w + 1) % hull.len()]);
            if u == v {
                continue;
            }
            let (au, av) = (across(points[u]), across(points[v]));
            if (au > 0 && av < 0) || (au < 0 && av > 0) {
                // Parameter of the crossing of segment uv with the ray line,
                // in the same |dir|^2 scale as the vertex case.
                let den = au - av;
                let num = along(points[u]) * (-av) + along(points[v]) * au;
                push(Frac::new(num, den), RayHit::Edge(u, v));
            }
        }
    }
    best.map(|(_, hit)| hit)
}

/// Kuhn's augmenting-path maximum bipartite matching; adjacency indexed by
/// left vertex.
pub fn kuhn_max_matching(adj: &[Vec<usize>], right_count: usize) -> usize {
    let mut match_right: Vec<Option<usize>> = vec![None; right_count];
    let mut result = 0usize;
    for left in 0..adj.len() {
        let mut visited = vec![false; right_count];
        if try_augment(left, adj, &mut visited, &mut match_right) {
            result += 1;
        }
    }
    result
}

fn try_augment(
    left: usize,
    adj: &[Vec<usize>],
    visited: &mut [bool],
    match_right: &mut [Option<usize>],
) -> bool {
    for &r in &adj[left] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if match_right[r].is_none()
            || try_augment(match_right[r].unwrap(), adj, visited, match_right)
        {
            match_right[r] = Some(left);
            return true;
        }
    }
    false
}

/// O(n^2) depth oracle.
pub fn brute_depth(points: &[Point], i: usize) -> usize {
    let p = points[i];
    let mut best = usize::MAX;
    for j in 0..points.len() {
        if j == i {
            continue;
        }
        let mut left = 0usize;
        let mut right = 0usize;
        for k in 0..points.len() {
            if k == i || k == j {
                continue;
            }
            match cross(p, points[j], points[k]).signum() {
                1 => left += 1,
                -1 => right += 1,
                _ => panic!("collinear triple in general-position data"),
            }
        }
        best = best.min(left.min(right));
    }
    if best == usize::MAX {
        0
    } else {
        best
    }
}

/// O(n^3) collinearity scan.
pub fn brute_general_position(points: &[Point]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if cross(points[i], points[j], points[k]) == 0 {
                    return false;
                }
            }
        }
    }
    true
}
