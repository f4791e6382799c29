//! Independent checkers for every guarantee. These use only the geometric
//! primitives, never the constructions under test.

use crate::geom::segments_cross_properly;
use crate::matching::Matching;
use crate::pointset::{PointSet, Segment};
use crate::report::BoundReport;
use crate::separator::Separator;

/// Largest n for which separator checks run the exhaustive cross-pair scan.
pub const EXHAUSTIVE_LIMIT: usize = 60;

/// All 2|edges| endpoints distinct and in range.
pub fn is_matching(ps: &PointSet, m: &Matching) -> bool {
    let mut seen = vec![false; ps.len()];
    for &(a, b) in m.edges() {
        if a >= ps.len() || b >= ps.len() || a == b || seen[a] || seen[b] {
            return false;
        }
        seen[a] = true;
        seen[b] = true;
    }
    true
}

/// The intersection graph of the matching segments is connected (empty and
/// singleton matchings count as connected). Adjacency uses the closed
/// segment test, so endpoint-sharing near-matchings are treated gracefully.
pub fn is_connected(ps: &PointSet, m: &Matching) -> bool {
    let k = m.len();
    if k <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let edges = m.edges();
    for i in 0..k {
        for j in i + 1..k {
            let (a, b) = edges[i];
            let (x, y) = edges[j];
            if ps.segments_cross(Segment::new(a, b), Segment::new(x, y)) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let root = find(&mut parent, 0);
    (1..k).all(|i| find(&mut parent, i) == root)
}

/// Every edge joins two differently colored points.
pub fn is_polychromatic(ps: &PointSet, m: &Matching) -> bool {
    ps.is_colored() && m.edges().iter().all(|&(a, b)| ps.color(a) != ps.color(b))
}

/// Separator validity: both sides have at least k points, the path and the
/// sides partition the indices, a polychromatic flag implies bichromatic
/// path edges, and (exhaustively, for n <= 60) every side-to-side segment
/// crosses some path edge.
pub fn check_separator(ps: &PointSet, sep: &Separator, k: usize) -> bool {
    let n = ps.len();
    if sep.path.len() < 2 || sep.path.len() > 4 {
        return false;
    }
    let mut seen = vec![0u8; n];
    for &v in sep
        .path
        .iter()
        .chain(sep.side_a.iter())
        .chain(sep.side_b.iter())
    {
        if v >= n {
            return false;
        }
        seen[v] += 1;
    }
    if seen.iter().any(|&c| c != 1) {
        return false;
    }
    if sep.side_a.len() < k || sep.side_b.len() < k {
        return false;
    }
    if sep.polychromatic {
        if !ps.is_colored() {
            return false;
        }
        for (u, v) in sep.edges() {
            if ps.color(u) == ps.color(v) {
                return false;
            }
        }
    }
    if n <= EXHAUSTIVE_LIMIT {
        for &a in &sep.side_a {
            for &b in &sep.side_b {
                let crossed = sep.edges().any(|(u, v)| {
                    segments_cross_properly(ps.point(a), ps.point(b), ps.point(u), ps.point(v))
                });
                if !crossed {
                    return false;
                }
            }
        }
    }
    true
}

/// The report's guarantee matches its theorem's formula (for the closed-form
/// tags) and the achieved size clears the ceiling. Non-binding reports only
/// need internal consistency of the formula.
pub fn check_bound_report(r: &BoundReport) -> bool {
    if let Some(expected) = r.theorem.formula(r.n, r.c) {
        if expected != r.guaranteed {
            return false;
        }
    }
    if !r.binding {
        return true;
    }
    r.achieved as i64 >= r.required()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::report::{Rat, TheoremTag};

    fn ps(raw: &[(i64, i64)]) -> PointSet {
        PointSet::new(raw.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn matching_checks() {
        let set = ps(&[(0, 0), (10, 1), (11, 10), (1, 9)]);
        assert!(is_matching(&set, &Matching::new(vec![])));
        assert!(!is_matching(&set, &Matching::new(vec![(0, 1), (1, 2)])));
        assert!(is_matching(&set, &Matching::new(vec![(0, 1), (2, 3)])));
    }

    #[test]
    fn connectivity_checks() {
        let set = ps(&[(0, 0), (10, 0), (0, 1), (10, 1), (5, -5), (5, 5)]);
        // one edge
        assert!(is_connected(&set, &Matching::new(vec![(0, 1)])));
        // two parallel disjoint edges
        assert!(!is_connected(&set, &Matching::new(vec![(0, 1), (2, 3)])));
        // crossing pair
        assert!(is_connected(&set, &Matching::new(vec![(0, 3), (4, 5)])));
    }

    #[test]
    fn antipodal_octagon_is_connected() {
        let set = ps(&[
            (100, 0),
            (71, 71),
            (0, 100),
            (-71, 71),
            (-100, 0),
            (-71, -71),
            (0, -100),
            (71, -71),
        ]);
        let m = crate::matching::antipodal_connected_matching(&[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(m.len(), 4);
        assert!(is_matching(&set, &m));
        assert!(is_connected(&set, &m));
    }

    #[test]
    fn polychromatic_checks() {
        let set = PointSet::with_colors(
            vec![Point::new(0, 0), Point::new(1, 0), Point::new(0, 1), Point::new(5, 7)],
            vec![0, 1, 2, 2],
            3,
        )
        .unwrap();
        assert!(is_polychromatic(&set, &Matching::new(vec![(0, 1)])));
        assert!(!is_polychromatic(&set, &Matching::new(vec![(2, 3)])));
    }

    #[test]
    fn separator_negative_cases() {
        let set = ps(&[(0, 0), (10, 1), (11, 10), (1, 9), (5, 6)]);
        let sep = crate::separator::separating_path(&set).unwrap();
        assert!(check_separator(&set, &sep, 1));
        // A tampered separator: move a side point across.
        let mut bad = sep.clone();
        if let Some(x) = bad.side_a.pop() {
            bad.side_b.push(x);
            bad.side_b.sort_unstable();
            assert!(!check_separator(&set, &bad, 1));
        }
    }

    #[test]
    fn bound_report_checks() {
        let good = BoundReport {
            n: 27,
            c: 0,
            achieved: 6,
            guaranteed: Rat::new(136, 27),
            theorem: TheoremTag::Uncolored,
            binding: true,
        };
        assert!(check_bound_report(&good));
        let short = BoundReport {
            achieved: 5,
            ..good.clone()
        };
        assert!(!check_bound_report(&short));
        let wrong_formula = BoundReport {
            guaranteed: Rat::new(135, 27),
            ..good
        };
        assert!(!check_bound_report(&wrong_formula));
    }
}
