//! Maximal (and empirically maximum) matchings whose edges all cross a fixed
//! segment, via an exact slope sweep.

use crate::error::{Error, Result};
use crate::matching::Matching;
use crate::pointset::{PointSet, Segment};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// An exactly comparable slope in the frame where the reference segment is
/// vertical: never a computed quotient, always a (numerator, denominator)
/// pair compared by cross-multiplication in `i128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiKey {
    num: i128,
    den: i128,
}

impl PhiKey {
    fn new(num: i128, den: i128) -> PhiKey {
        debug_assert!(den != 0, "phi keys are undefined on the supporting line");
        if den < 0 {
            PhiKey {
                num: -num,
                den: -den,
            }
        } else {
            PhiKey { num, den }
        }
    }
}

impl Ord for PhiKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl PartialOrd for PhiKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A segment sigma plus the two point sets strictly on opposite sides of its
/// supporting line. Normalized so that `side_a` lies counterclockwise of the
/// directed segment u -> v.
#[derive(Debug, Clone)]
pub struct CrossingInstance<'a> {
    ps: &'a PointSet,
    pub sigma: Segment,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl<'a> CrossingInstance<'a> {
    pub fn new(
        ps: &'a PointSet,
        sigma: Segment,
        side_a: Vec<usize>,
        side_b: Vec<usize>,
    ) -> Result<CrossingInstance<'a>> {
        use crate::geom::cross;
        let (mut u, mut v) = (sigma.a, sigma.b);
        for &i in side_a.iter().chain(side_b.iter()) {
            if i == u || i == v {
                return Err(Error::Precondition("side point coincides with sigma"));
            }
        }
        let sign = |u: usize, v: usize, i: usize| cross(ps.point(u), ps.point(v), ps.point(i)).signum();
        if let Some(&first) = side_a.first().or(side_b.first()) {
            // Orient u -> v so that side A is the CCW side.
            let s = sign(u, v, first);
            if s == 0 {
                return Err(Error::Precondition("side point on the supporting line"));
            }
            let first_is_a = !side_a.is_empty();
            if (s > 0) != first_is_a {
                std::mem::swap(&mut u, &mut v);
            }
        }
        for &i in &side_a {
            if sign(u, v, i) <= 0 {
                return Err(Error::Precondition("side A not strictly on one side"));
            }
        }
        for &i in &side_b {
            if sign(u, v, i) >= 0 {
                return Err(Error::Precondition("side B not strictly on one side"));
            }
        }
        Ok(CrossingInstance {
            ps,
            sigma: Segment::new(u, v),
            side_a,
            side_b,
        })
    }

    #[inline]
    fn slope_from(&self, reference: usize, p: usize) -> PhiKey {
        let r = self.ps.point(reference);
        let q = self.ps.point(p);
        let d = self.ps.point(self.sigma.b);
        let o = self.ps.point(self.sigma.a);
        let (dx, dy) = ((d.x - o.x) as i128, (d.y - o.y) as i128);
        let (zx, zy) = ((q.x - r.x) as i128, (q.y - r.y) as i128);
        PhiKey::new(zx * dx + zy * dy, zx * dy - zy * dx)
    }

    /// Slope of the line through p and sigma's lower endpoint u.
    #[inline]
    pub fn phi1(&self, p: usize) -> PhiKey {
        self.slope_from(self.sigma.a, p)
    }

    /// Slope of the line through p and sigma's upper endpoint v.
    #[inline]
    pub fn phi2(&self, p: usize) -> PhiKey {
        self.slope_from(self.sigma.b, p)
    }
}

/// The crossing criterion of the sweep: for a in A and b in B, the segment
/// ab meets sigma iff phi1(a) <= phi1(b) and phi2(a) >= phi2(b).
pub fn edge_crosses_sigma(a: usize, b: usize, inst: &CrossingInstance) -> bool {
    inst.phi1(a) <= inst.phi1(b) && inst.phi2(a) >= inst.phi2(b)
}

/// Maximal matching in the bipartite graph of A-B pairs whose segments cross
/// sigma. Processes points by increasing phi1 and keeps the unmatched A
/// points in a search tree ordered by phi2; O(n log n).
pub fn maximal_crossing_matching(inst: &CrossingInstance) -> Matching {
    sweep(inst, false)
}

/// Same sweep, but each B point takes the unmatched A point with the
/// smallest phi2 at least its own. This tie-break is reported to produce a
/// maximum matching; the claim is tested against an augmenting-path oracle,
/// not assumed by any pipeline.
pub fn maximum_crossing_matching(inst: &CrossingInstance) -> Matching {
    sweep(inst, true)
}

fn sweep(inst: &CrossingInstance, smallest_phi2: bool) -> Matching {
    let mut events: Vec<(PhiKey, bool, usize)> = Vec::with_capacity(inst.side_a.len() + inst.side_b.len());
    for &a in &inst.side_a {
        events.push((inst.phi1(a), false, a));
    }
    for &b in &inst.side_b {
        events.push((inst.phi1(b), true, b));
    }
    // phi1 ties across sides would mean a collinear triple with u; under
    // general position they cannot occur. The index tiebreak keeps the sweep
    // total anyway.
    events.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));

    let mut available: BTreeMap<PhiKey, usize> = BTreeMap::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (_, is_b, i) in events {
        if !is_b {
            let prev = available.insert(inst.phi2(i), i);
            debug_assert!(prev.is_none(), "duplicate phi2 keys are collinear with v");
        } else {
            let threshold = inst.phi2(i);
            let found = if smallest_phi2 {
                available.range(threshold..).next().map(|(k, &a)| (*k, a))
            } else {
                available.range(threshold..).next_back().map(|(k, &a)| (*k, a))
            };
            if let Some((key, a)) = found {
                available.remove(&key);
                edges.push((a, i));
            }
        }
    }
    Matching::new(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn ps(raw: &[(i64, i64)]) -> PointSet {
        PointSet::new(raw.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn phi_signs_match_the_frame() {
        // u = index 0, v = index 1, sigma vertical.
        let set = ps(&[(0, 0), (0, 2), (-1, 1), (1, 1), (-1, 10), (1, 10)]);
        let inst = CrossingInstance::new(&set, Segment::new(0, 1), vec![2, 4], vec![3, 5]).unwrap();
        // For A points phi1 < phi2, for B points phi1 > phi2.
        for &a in &inst.side_a {
            assert!(inst.phi1(a) < inst.phi2(a));
        }
        for &b in &inst.side_b {
            assert!(inst.phi1(b) > inst.phi2(b));
        }
        assert!(edge_crosses_sigma(2, 3, &inst));
        assert!(!edge_crosses_sigma(4, 5, &inst));
    }

    #[test]
    fn singleton_pair() {
        let set = ps(&[(0, 0), (0, 2), (-1, 1), (1, 1)]);
        let inst = CrossingInstance::new(&set, Segment::new(0, 1), vec![2], vec![3]).unwrap();
        assert_eq!(maximal_crossing_matching(&inst).len(), 1);
        assert_eq!(maximum_crossing_matching(&inst).len(), 1);
    }

    #[test]
    fn maximality_with_contested_b() {
        // Two A points both compatible with the single B point.
        let set = ps(&[(0, 0), (0, 4), (-1, 1), (-1, 3), (1, 2)]);
        let inst =
            CrossingInstance::new(&set, Segment::new(0, 1), vec![2, 3], vec![4]).unwrap();
        let m = maximal_crossing_matching(&inst);
        assert_eq!(m.len(), 1);
        // the unmatched A point has no eligible partner left
        let matched_a = m.edges()[0].0;
        let other = if matched_a == 2 { 3 } else { 2 };
        assert!(edge_crosses_sigma(other, 4, &inst) || edge_crosses_sigma(matched_a, 4, &inst));
    }

    #[test]
    fn empty_side_gives_empty_matching() {
        let set = ps(&[(0, 0), (0, 2), (-1, 1)]);
        let inst = CrossingInstance::new(&set, Segment::new(0, 1), vec![2], vec![]).unwrap();
        assert!(maximal_crossing_matching(&inst).is_empty());
        assert!(maximum_crossing_matching(&inst).is_empty());
    }

    #[test]
    fn rejects_points_on_the_line() {
        let set = ps(&[(0, 0), (0, 2), (0, 5), (1, 1)]);
        assert!(CrossingInstance::new(&set, Segment::new(0, 1), vec![2], vec![3]).is_err());
    }
}
