use super::{cross, Point};
use crate::error::{Error, Result};
use rand::{rngs::StdRng, seq::SliceRandom, SeedableRng};

/// Hull feature containing the last intersection of a ray with the hull
/// boundary: either a vertex of the hull or an edge crossed properly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RayHit {
    Vertex(usize),
    Edge(usize, usize),
}

/// Rotated-frame coordinates relative to the ray: `across` is signed distance
/// from the ray line (positive on the clockwise side of `dir`), `along` is
/// progress in the ray direction. Signs and comparisons are exact; the common
/// |dir| scale factor cancels everywhere.
struct Frame {
    origin: Point,
    dx: i64,
    dy: i64,
}

impl Frame {
    #[inline]
    fn across(&self, p: Point) -> i128 {
        (p.x - self.origin.x) as i128 * self.dy as i128
            - (p.y - self.origin.y) as i128 * self.dx as i128
    }

    #[inline]
    fn along(&self, p: Point) -> i128 {
        (p.x - self.origin.x) as i128 * self.dx as i128
            + (p.y - self.origin.y) as i128 * self.dy as i128
    }

    /// A synthetic point one ray-direction step beyond `p`.
    #[inline]
    fn lifted(&self, p: Point) -> Point {
        Point::new(p.x + self.dx, p.y + self.dy)
    }
}

/// Last intersection of the ray `origin + t*dir`, `t >= 0`, with the boundary
/// of the convex hull of `points`.
///
/// Randomized incremental two-variable LP: after conceptually rotating the
/// ray upright, it minimizes the height at which a line `y = ax + b` lying
/// above every point crosses the ray. The optimum is the hull feature the ray
/// exits through. All primitive decisions are orientation tests on the
/// original integer coordinates, so the answer is exact; expected time is
/// linear in `points.len()`.
///
/// If the ray is tangent to the hull along its supporting line, the farthest
/// input point on the ray is returned, per the tangency convention.
pub fn last_ray_hull_intersection(
    points: &[Point],
    origin: Point,
    dir: (i64, i64),
    seed: u64,
) -> Result<RayHit> {
    assert!(dir != (0, 0), "ray direction must be nonzero");
    debug_assert!(dir.0.abs() <= 1 << 31 && dir.1.abs() <= 1 << 31);
    if points.is_empty() {
        return Err(Error::RayMissesHull);
    }
    let frame = Frame {
        origin,
        dx: dir.0,
        dy: dir.1,
    };

    let mut lefts = 0usize;
    let mut rights = 0usize;
    let mut best_axis: Option<usize> = None;
    let mut off_axis: Vec<usize> = Vec::with_capacity(points.len());
    for (i, &p) in points.iter().enumerate() {
        let a = frame.across(p);
        if a == 0 {
            let better = match best_axis {
                None => true,
                Some(j) => frame.along(p) > frame.along(points[j]),
            };
            if better {
                best_axis = Some(i);
            }
        } else {
            if a < 0 {
                lefts += 1;
            } else {
                rights += 1;
            }
            off_axis.push(i);
        }
    }

    if lefts == 0 || rights == 0 {
        // Tangent (or missing) ray: the hull meets the ray line, if at all,
        // only along points of the input on that line.
        return match best_axis {
            Some(v) if frame.along(points[v]) >= 0 => Ok(RayHit::Vertex(v)),
            _ => Err(Error::RayMissesHull),
        };
    }

    let mut rng = StdRng::seed_from_u64(seed);
    off_axis.shuffle(&mut rng);

    // Current optimal line, as the input points it passes through.
    let mut anchor: usize;
    let mut partner: Option<usize>;
    let mut processed: Vec<usize> = Vec::with_capacity(points.len());
    for (i, &p) in points.iter().enumerate() {
        if frame.across(p) == 0 {
            processed.push(i);
        }
    }
    let mut start_at = 0usize;
    if let Some(v) = best_axis {
        anchor = v;
        partner = None;
    } else {
        // No input point on the ray line: seed with one point per side.
        let u0 = off_axis[0];
        let w0_pos = off_axis[1..]
            .iter()
            .position(|&q| (frame.across(points[q]) > 0) != (frame.across(points[u0]) > 0))
            .expect("both sides nonempty")
            + 1;
        let w0 = off_axis[w0_pos];
        off_axis.swap(1, w0_pos);
        anchor = u0;
        partner = Some(w0);
        processed.push(u0);
        processed.push(w0);
        start_at = 2;
    }

    for &p in &off_axis[start_at..] {
        if violates(&frame, points, anchor, partner, p) {
            let (a, q) = resolve(&frame, points, &processed, p);
            anchor = a;
            partner = q;
        }
        processed.push(p);
    }

    // The optimum line crosses the ray line at the hull exit; reject exits
    // behind the ray start.
    let hit = match partner {
        None => RayHit::Vertex(anchor),
        Some(q) => {
            if frame.across(points[anchor]) == 0 {
                RayHit::Vertex(anchor)
            } else if frame.across(points[q]) == 0 {
                RayHit::Vertex(q)
            } else {
                debug_assert!(
                    (frame.across(points[anchor]) < 0) != (frame.across(points[q]) < 0),
                    "optimal basis must straddle the ray line"
                );
                RayHit::Edge(anchor, q)
            }
        }
    };
    let forward = match hit {
        RayHit::Vertex(v) => frame.along(points[v]) >= 0,
        RayHit::Edge(u, w) => {
            let (pu, pw) = (points[u], points[w]);
            let num = frame.along(pu) * frame.across(pw) - frame.along(pw) * frame.across(pu);
            let den = frame.across(pw) - frame.across(pu);
            num.signum() * den.signum() >= 0
        }
    };
    if forward {
        Ok(hit)
    } else {
        Err(Error::RayMissesHull)
    }
}

/// Is `p` strictly above the current optimal line?
fn violates(frame: &Frame, points: &[Point], anchor: usize, partner: Option<usize>, p: usize) -> bool {
    match partner {
        None => frame.along(points[p]) > frame.along(points[anchor]),
        Some(q) => {
            let (a, b) = (points[anchor], points[q]);
            let up = cross(a, b, frame.lifted(a));
            debug_assert!(up != 0, "optimal line cannot be parallel to the ray");
            let s = cross(a, b, points[p]);
            s != 0 && s.signum() == up.signum()
        }
    }
}

/// One-dimensional re-optimization over lines through the violating point.
fn resolve(frame: &Frame, points: &[Point], processed: &[usize], p: usize) -> (usize, Option<usize>) {
    let xp = frame.across(points[p]);
    let mut best: Option<usize> = None;
    if xp == 0 {
        // New top point on the ray line; tilt to the tightest constraint.
        for side in [1i128, -1] {
            for &q in processed {
                let xq = frame.across(points[q]);
                if xq.signum() != side.signum() {
                    continue;
                }
                best = Some(match best {
                    None => q,
                    Some(b) => binding(points, p, b, q, side as i32),
                });
            }
            if best.is_some() {
                break;
            }
        }
        (p, best)
    } else {
        // Binding constraint among points strictly beyond p toward the axis
        // side; feasibility of the sub-LP is guaranteed.
        let side = if xp < 0 { 1i32 } else { -1 };
        for &q in processed {
            let xq = frame.across(points[q]);
            let beyond = if xp < 0 { xq > xp } else { xq < xp };
            if !beyond {
                continue;
            }
            best = Some(match best {
                None => q,
                Some(b) => binding(points, p, b, q, side),
            });
        }
        (p, Some(best.expect("sub-LP candidate set is never empty")))
    }
}

/// Of two candidate binding points (both on the `side` of p along the
/// rotated x axis), keep the one lying above the other's line through p.
/// Above means counterclockwise for rightward candidates and clockwise for
/// leftward ones; rotation preserves orientation, so the original-coordinate
/// sign decides.
#[inline]
fn binding(points: &[Point], p: usize, b: usize, c: usize, side: i32) -> usize {
    if cross(points[p], points[b], points[c]).signum() == side as i128 {
        c
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_exit_through_top_edge() {
        let pts = vec![
            Point::new(-1, -1),
            Point::new(1, -1),
            Point::new(1, 1),
            Point::new(-1, 1),
        ];
        let hit = last_ray_hull_intersection(&pts, Point::new(0, 0), (0, 1), 3).unwrap();
        match hit {
            RayHit::Edge(u, w) => {
                let mut e = [u, w];
                e.sort_unstable();
                assert_eq!(e, [2, 3]);
            }
            other => panic!("expected the top edge, got {other:?}"),
        }
    }

    #[test]
    fn vertex_exit_when_the_target_is_extreme() {
        // Ray through a hull vertex with points on both sides of its line.
        let pts = vec![
            Point::new(0, 0),
            Point::new(3, 7),
            Point::new(-4, 2),
            Point::new(5, 1),
        ];
        let hit = last_ray_hull_intersection(&pts, pts[0], (3, 7), 9).unwrap();
        assert_eq!(hit, RayHit::Vertex(1));
    }

    #[test]
    fn miss_is_reported() {
        let pts = vec![Point::new(5, 5), Point::new(7, 9), Point::new(9, 6)];
        assert!(matches!(
            last_ray_hull_intersection(&pts, Point::new(0, 0), (0, -1), 1),
            Err(Error::RayMissesHull)
        ));
    }
}
