//! Balanced separation with a short path: weighted triangle splitting, the
//! length-1/2 separating path, and the two colored separator constructions.

use crate::error::{Error, Result};
use crate::geom::{
    cmp_angle_in_halfplane, convex_hull, cross, last_ray_hull_intersection, orientation,
    segments_cross_properly, select_kth_by, Orientation, Point, RayHit,
};
use crate::pointset::PointSet;
use crate::report::Rat;

/// Size threshold factor for the colored constructions: the colored bounds
/// are only promised for n >= 60 * c. Below that the constructions still run
/// (via the pipeline) but the bound is not binding.
pub const COLORED_SIZE_FACTOR: usize = 60;

/// Minimum n for which the colored separator bounds are enforced.
pub fn colored_threshold(c: usize) -> usize {
    COLORED_SIZE_FACTOR * c
}

const LP_SEED: u64 = 0x636f_6e6d_6174u64;

/// A triangle with weighted corners and the points strictly inside it.
#[derive(Debug, Clone)]
pub struct TriangleSplitRequest {
    pub corners: [usize; 3],
    pub interior: Vec<usize>,
    pub weights: [usize; 3],
}

/// A 1-3 edge path on point-set vertices together with the two sets it
/// separates: every segment from `side_a` to `side_b` crosses the path.
/// `side_a` is always the smaller side (ties by lexicographic index order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    pub path: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    pub polychromatic: bool,
}

impl Separator {
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.path.windows(2).map(|w| (w[0], w[1]))
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    if a >= 0 {
        (a + b - 1) / b
    } else {
        a / b
    }
}

/// Splitting points of a weighted triangle.
///
/// Given corners p0, p1, p2 with interior set P (|P| = m) and weights
/// 0 <= w_i < m with w0+w1+w2 > 2m-3, returns all points q of P such that
/// for each i the triangle (p_i, q, p_{i+1}) keeps at most w_{i+2} interior
/// points. At least w0+w1+w2 - 2m + 3 points qualify. Three selection passes
/// rotate a ray around each corner, O(m) each.
pub fn split_triangle(req: &TriangleSplitRequest, ps: &PointSet) -> Result<Vec<usize>> {
    let m = req.interior.len();
    if m == 0 {
        return Err(Error::Precondition("split_triangle needs interior points"));
    }
    let ell: i64 = req.weights.iter().map(|&w| w as i64).sum();
    if req.weights.iter().any(|&w| w >= m) || ell <= 2 * m as i64 - 3 {
        return Err(Error::Precondition("split_triangle weight hypotheses"));
    }
    let [p0, p1, p2] = req.corners;
    let tri = [ps.point(p0), ps.point(p1), ps.point(p2)];
    if orientation(tri[0], tri[1], tri[2]) == Orientation::Collinear {
        return Err(Error::Precondition("degenerate triangle"));
    }
    for &q in &req.interior {
        if !strictly_inside(tri, ps.point(q)) {
            return Err(Error::Precondition("interior point not inside triangle"));
        }
    }

    let mut scanned = vec![false; m];
    for i in 0..3 {
        // Ray from p_{i-1} through p_i, rotating toward p_{i+1}; sweep over
        // the m - w_i - 1 angularly nearest interior points.
        let scan_count = m - req.weights[i] - 1;
        if scan_count == 0 {
            continue;
        }
        let apex = ps.point(req.corners[(i + 2) % 3]);
        let from = ps.point(req.corners[i]);
        let toward = ps.point(req.corners[(i + 1) % 3]);
        let turn = cross(apex, from, toward).signum();
        debug_assert!(turn != 0);
        let earlier = |x: Point, y: Point| (cross(apex, x, y).signum() * turn).cmp(&0).reverse();
        let mut scratch: Vec<usize> = req.interior.clone();
        let pivot = select_kth_by(&mut scratch, scan_count, |&x, &y| {
            earlier(ps.point(x), ps.point(y))
        })?;
        let pv = ps.point(pivot);
        for (slot, &q) in req.interior.iter().enumerate() {
            if q == pivot || earlier(ps.point(q), pv) == std::cmp::Ordering::Less {
                scanned[slot] = true;
            }
        }
    }

    let keep: Vec<usize> = req
        .interior
        .iter()
        .enumerate()
        .filter(|&(slot, _)| !scanned[slot])
        .map(|(_, &q)| q)
        .collect();
    debug_assert!(keep.len() as i64 >= ell - 2 * m as i64 + 3);
    Ok(keep)
}

fn strictly_inside(tri: [Point; 3], q: Point) -> bool {
    let s0 = cross(tri[0], tri[1], q).signum();
    let s1 = cross(tri[1], tri[2], q).signum();
    let s2 = cross(tri[2], tri[0], q).signum();
    s0 != 0 && s0 == s1 && s1 == s2
}

/// The equal-weight special case: a point of `interior` splitting the
/// triangle so that no subtriangle keeps more than ceil((2m-2)/3) points.
pub fn corollary_split_point(
    corners: [usize; 3],
    interior: &[usize],
    ps: &PointSet,
) -> Result<usize> {
    let m = interior.len();
    if m == 0 {
        return Err(Error::Precondition("corollary needs interior points"));
    }
    let w = ceil_div(2 * m as i64 - 2, 3) as usize;
    let req = TriangleSplitRequest {
        corners,
        interior: interior.to_vec(),
        weights: [w, w, w],
    };
    let q = split_triangle(&req, ps)?
        .into_iter()
        .min()
        .expect("split guarantees at least one point");
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Uncolored,
    HighC,
    LowC,
}

impl Mode {
    fn triangle_weight(self, n: usize, c: usize) -> i64 {
        let n = n as i64;
        let c = c as i64;
        match self {
            // r = ceil((2n-8)/3), the corollary bound for n-3 interior points.
            Mode::Uncolored => ceil_div(2 * n - 8, 3),
            // ceil((1/c + 2/3) n)
            Mode::HighC => ceil_div((2 * c + 3) * n, 3 * c),
            // ceil((1/(3c) + 2/3) n)
            Mode::LowC => ceil_div((2 * c + 1) * n, 3 * c),
        }
    }

    /// The side-size bound the construction must certify.
    fn side_target(self, n: usize, c: usize) -> i64 {
        let n = n as i64;
        let c = c as i64;
        let bound = match self {
            Mode::Uncolored => Rat::new(n - 4, 3),
            Mode::HighC => Rat::new((c - 3) * n, 3 * c) - Rat::from_integer(3),
            Mode::LowC => Rat::new((c - 1) * n, 3 * c) - Rat::from_integer(4),
        };
        bound.ceil().to_integer()
    }
}

/// A separating path of length 1 or 2 with both sides of size at least
/// ceil((n-4)/3), per the balanced-separation theorem. Expected O(n).
pub fn separating_path(ps: &PointSet) -> Result<Separator> {
    if ps.len() < 2 {
        return Err(Error::Precondition("separating_path needs n >= 2"));
    }
    if ps.len() <= 4 {
        return trivial_path(ps, false);
    }
    skeleton(ps, Mode::Uncolored)
}

/// Polychromatic separating path of length 1 or 2 for c >= 4 colors, with
/// both sides of size at least ceil((c-3)n/(3c) - 3). Requires n >= 60c.
pub fn polychromatic_separating_path_c4(ps: &PointSet) -> Result<Separator> {
    if !ps.is_colored() || ps.color_count() < 4 {
        return Err(Error::Precondition("needs a balanced coloring with c >= 4"));
    }
    if ps.len() < colored_threshold(ps.color_count()) {
        return Err(Error::Precondition("n below the colored size threshold"));
    }
    polychromatic_separating_path_c4_relaxed(ps)
}

/// Same construction without the size threshold; below it only validity is
/// guaranteed, not the side bound.
pub fn polychromatic_separating_path_c4_relaxed(ps: &PointSet) -> Result<Separator> {
    if !ps.is_colored() || ps.color_count() < 4 {
        return Err(Error::Precondition("needs a balanced coloring with c >= 4"));
    }
    if ps.len() <= 4 {
        return trivial_path(ps, true);
    }
    skeleton(ps, Mode::HighC)
}

/// Polychromatic separator with at most 3 edges for c >= 2 colors: two sets
/// of size at least ceil((c-1)n/(3c) - 4) such that every segment between
/// them crosses the path. The path may self-intersect. Requires n >= 60c.
pub fn polychromatic_separator_3edges(ps: &PointSet) -> Result<Separator> {
    if !ps.is_colored() || ps.color_count() < 2 {
        return Err(Error::Precondition("needs a balanced coloring with c >= 2"));
    }
    if ps.len() < colored_threshold(ps.color_count()) {
        return Err(Error::Precondition("n below the colored size threshold"));
    }
    polychromatic_separator_3edges_relaxed(ps)
}

/// The 3-edge construction without the size threshold; below it only
/// validity is guaranteed, not the side bound.
pub fn polychromatic_separator_3edges_relaxed(ps: &PointSet) -> Result<Separator> {
    if !ps.is_colored() || ps.color_count() < 2 {
        return Err(Error::Precondition("needs a balanced coloring with c >= 2"));
    }
    if ps.len() <= 4 {
        return trivial_path(ps, true);
    }
    skeleton(ps, Mode::LowC)
}

/// For n <= 4 any hull edge separates trivially (k <= 0). The polychromatic
/// variant needs a bichromatic hull edge.
fn trivial_path(ps: &PointSet, polychromatic: bool) -> Result<Separator> {
    let n = ps.len();
    let hull = convex_hull(ps.points(), &(0..n).collect::<Vec<_>>());
    let mut edge = None;
    for w in 0..hull.len() {
        let (a, b) = (hull[w], hull[(w + 1) % hull.len()]);
        if a == b {
            continue;
        }
        if !polychromatic || ps.color(a) != ps.color(b) {
            edge = Some((a.min(b), a.max(b)));
            break;
        }
    }
    let (a, b) = edge.ok_or(Error::Construction("no usable hull edge"))?;
    let (mut s1, mut s2) = (Vec::new(), Vec::new());
    for i in 0..n {
        if i == a || i == b {
            continue;
        }
        if cross(ps.point(a), ps.point(b), ps.point(i)) > 0 {
            s1.push(i);
        } else {
            s2.push(i);
        }
    }
    Ok(finish(vec![a, b], s1, s2, polychromatic))
}

fn finish(path: Vec<usize>, s1: Vec<usize>, s2: Vec<usize>, polychromatic: bool) -> Separator {
    let mut a = s1;
    let mut b = s2;
    a.sort_unstable();
    b.sort_unstable();
    if b.len() < a.len() || (a.len() == b.len() && b < a) {
        std::mem::swap(&mut a, &mut b);
    }
    Separator {
        path,
        side_a: a,
        side_b: b,
        polychromatic,
    }
}

/// Common scaffolding for all three constructions: pick the lowest point,
/// locate the angular k-th and (n-k)-th points by selection, shoot both rays
/// at the hull, and branch on whether an extremal point lies between them.
fn skeleton(ps: &PointSet, mode: Mode) -> Result<Separator> {
    let n = ps.len();
    let pts = ps.points();
    let k = ceil_div(n as i64 - 4, 3) as usize;
    debug_assert!(k >= 1);

    let q0 = (0..n)
        .min_by_key(|&i| (pts[i].y, pts[i].x))
        .expect("nonempty");
    let o = pts[q0];
    let angle_cmp = |&x: &usize, &y: &usize| cmp_angle_in_halfplane(o, pts[x], pts[y]);
    let others: Vec<usize> = (0..n).filter(|&i| i != q0).collect();

    let mut scratch = others.clone();
    let qk = select_kth_by(&mut scratch, k, angle_cmp)?;
    scratch.copy_from_slice(&others);
    let qnk = select_kth_by(&mut scratch, n - k, angle_cmp)?;

    let hit1 = last_ray_hull_intersection(pts, o, (pts[qk].x - o.x, pts[qk].y - o.y), LP_SEED)?;
    let hit2 = last_ray_hull_intersection(pts, o, (pts[qnk].x - o.x, pts[qnk].y - o.y), LP_SEED)?;

    match cone_feature(ps, q0, qk, qnk, hit1, hit2) {
        ConeFeature::Extremal(qj) => extremal_case(ps, mode, q0, qj, k),
        ConeFeature::HullEdge(a_idx, b_idx) => triangle_case(ps, mode, q0, a_idx, b_idx, k),
    }
}

enum ConeFeature {
    /// A hull vertex angularly strictly between q_k and q_{n-k}.
    Extremal(usize),
    /// The hull edge whose angular span covers [q_k, q_{n-k}].
    HullEdge(usize, usize),
}

fn cone_feature(
    ps: &PointSet,
    q0: usize,
    qk: usize,
    qnk: usize,
    hit1: RayHit,
    hit2: RayHit,
) -> ConeFeature {
    let pts = ps.points();
    let o = pts[q0];
    let between = |x: usize| -> bool {
        x != qk && x != qnk && cross(o, pts[qk], pts[x]) > 0 && cross(o, pts[x], pts[qnk]) > 0
    };
    let mut candidates: Vec<usize> = Vec::new();
    for hit in [hit1, hit2] {
        match hit {
            RayHit::Vertex(v) => candidates.push(v),
            RayHit::Edge(u, w) => {
                candidates.push(u);
                candidates.push(w);
            }
        }
    }
    if let Some(&qj) = candidates.iter().filter(|&&x| between(x)).min() {
        return ConeFeature::Extremal(qj);
    }
    match (hit1, hit2) {
        (RayHit::Edge(u1, w1), RayHit::Edge(u2, w2)) => {
            if u1.min(w1) != u2.min(w2) || u1.max(w1) != u2.max(w2) {
                // Distinct exit edges expose a cone vertex; with none found
                // something degenerate happened, so fall back to the hull.
                return brute_cone_feature(ps, q0, qk, qnk);
            }
            ConeFeature::HullEdge(angular_min(ps, q0, u1, w1), angular_max(ps, q0, u1, w1))
        }
        (RayHit::Vertex(v1), RayHit::Vertex(v2)) => {
            // Both angular pivots are extremal. Any point strictly beyond
            // their chord is an extremal point inside the cone.
            let far_sign = -cross(pts[v1], pts[v2], o).signum();
            debug_assert!(far_sign != 0);
            let mut best: Option<(i128, usize)> = None;
            for i in 0..ps.len() {
                if i == v1 || i == v2 || i == q0 {
                    continue;
                }
                let s = cross(pts[v1], pts[v2], pts[i]);
                if s.signum() == far_sign {
                    let key = s.abs();
                    if best.is_none_or(|(bk, bi)| key > bk || (key == bk && i < bi)) {
                        best = Some((key, i));
                    }
                }
            }
            match best {
                Some((_, qj)) => ConeFeature::Extremal(qj),
                None => ConeFeature::HullEdge(
                    angular_min(ps, q0, v1, v2),
                    angular_max(ps, q0, v1, v2),
                ),
            }
        }
        (RayHit::Vertex(v), RayHit::Edge(u, w)) | (RayHit::Edge(u, w), RayHit::Vertex(v)) => {
            if v != u && v != w {
                return brute_cone_feature(ps, q0, qk, qnk);
            }
            ConeFeature::HullEdge(angular_min(ps, q0, u, w), angular_max(ps, q0, u, w))
        }
    }
}

/// O(n log n) fallback: read the answer off the convex hull directly.
fn brute_cone_feature(ps: &PointSet, q0: usize, qk: usize, qnk: usize) -> ConeFeature {
    let pts = ps.points();
    let o = pts[q0];
    let between = |x: usize| -> bool {
        x != qk && x != qnk && cross(o, pts[qk], pts[x]) > 0 && cross(o, pts[x], pts[qnk]) > 0
    };
    let hull = convex_hull(pts, &(0..ps.len()).collect::<Vec<_>>());
    if let Some(&qj) = hull.iter().filter(|&&x| between(x)).min() {
        return ConeFeature::Extremal(qj);
    }
    let at_most_k = |x: usize| x == qk || cross(o, pts[x], pts[qk]) > 0;
    let at_least_nk = |x: usize| x == qnk || cross(o, pts[qnk], pts[x]) > 0;
    for w in 0..hull.len() {
        let (x, y) = (hull[w], hull[(w + 1) % hull.len()]);
        if x == q0 || y == q0 {
            continue;
        }
        let (lo, hi) = (angular_min(ps, q0, x, y), angular_max(ps, q0, x, y));
        if at_most_k(lo) && at_least_nk(hi) {
            return ConeFeature::HullEdge(lo, hi);
        }
    }
    unreachable!("the angular pivots always sit under a hull feature");
}

fn angular_min(ps: &PointSet, q0: usize, x: usize, y: usize) -> usize {
    if cmp_angle_in_halfplane(ps.point(q0), ps.point(x), ps.point(y)).is_lt() {
        x
    } else {
        y
    }
}

fn angular_max(ps: &PointSet, q0: usize, x: usize, y: usize) -> usize {
    if cmp_angle_in_halfplane(ps.point(q0), ps.point(x), ps.point(y)).is_lt() {
        y
    } else {
        x
    }
}

/// An extremal point q_j lies in the cone: the chord q0-q_j separates by
/// angular rank. The colored modes may need a detour vertex when q0 and q_j
/// share a color.
fn extremal_case(ps: &PointSet, mode: Mode, q0: usize, qj: usize, k: usize) -> Result<Separator> {
    let n = ps.len();
    let pts = ps.points();
    let o = pts[q0];
    let chord_sides = |a: usize, b: usize| {
        let (mut s1, mut s2) = (Vec::new(), Vec::new());
        for i in 0..n {
            if i == a || i == b {
                continue;
            }
            if cross(pts[a], pts[b], pts[i]) > 0 {
                s1.push(i);
            } else {
                s2.push(i);
            }
        }
        (s1, s2)
    };

    if mode == Mode::Uncolored || ps.color(q0) != ps.color(qj) {
        let (s1, s2) = chord_sides(q0, qj);
        // q_j sits angularly strictly between q_k and q_{n-k}, so both
        // chord sides hold at least k points.
        debug_assert!(s1.len().min(s2.len()) >= k);
        return Ok(finish(vec![q0, qj], s1, s2, mode != Mode::Uncolored));
    }

    // Detour: a middle-ranked vertex q_l of a different color makes
    // q0 - q_l - q_j polychromatic. Candidates come from an angular window
    // wide enough to contain every color class.
    let target = mode.side_target(n, ps.color_count()).max(0) as usize;
    let others: Vec<usize> = (0..n).filter(|&i| i != q0).collect();
    let angle_cmp = |&x: &usize, &y: &usize| cmp_angle_in_halfplane(o, pts[x], pts[y]);
    let lo_rank = (target + 1).clamp(1, n - 1);
    let hi_rank = (n - 1 - target).clamp(lo_rank, n - 1);
    let mut scratch = others.clone();
    let z_lo = select_kth_by(&mut scratch, lo_rank, angle_cmp)?;
    scratch.copy_from_slice(&others);
    let z_hi = select_kth_by(&mut scratch, hi_rank, angle_cmp)?;

    let in_window = |x: usize| {
        x != q0
            && cmp_angle_in_halfplane(o, pts[z_lo], pts[x]).is_le()
            && cmp_angle_in_halfplane(o, pts[x], pts[z_hi]).is_le()
    };
    let witness = (0..n)
        .filter(|&i| i != q0 && i != qj)
        .min_by(|&x, &y| cmp_angle_in_halfplane(o, pts[x], pts[y]))
        .expect("n >= 5");

    let mut attempts = 0usize;
    for ql in 0..n {
        if ql == q0 || ql == qj || ps.color(ql) == ps.color(q0) || !in_window(ql) {
            continue;
        }
        attempts += 1;
        if attempts > 64 {
            break;
        }
        let path = vec![q0, ql, qj];
        let w = if witness == ql {
            (0..n)
                .filter(|&i| i != q0 && i != qj && i != ql)
                .min_by(|&x, &y| cmp_angle_in_halfplane(o, pts[x], pts[y]))
                .expect("n >= 5")
        } else {
            witness
        };
        let (s1, s2) = parity_sides(ps, &path, w);
        if s1.len().min(s2.len()) >= target {
            return Ok(finish(path, s1, s2, true));
        }
    }
    Err(Error::Construction(
        "no polychromatic detour vertex satisfies the side bound",
    ))
}

/// No extremal point between the angular pivots: split the triangle spanned
/// by q0 and the covering hull edge and route the path through a splitting
/// point.
fn triangle_case(
    ps: &PointSet,
    mode: Mode,
    q0: usize,
    a_idx: usize,
    b_idx: usize,
    k: usize,
) -> Result<Separator> {
    let n = ps.len();
    let pts = ps.points();
    let o = pts[q0];
    let before = |x: usize, y: usize| cross(o, pts[x], pts[y]) > 0; // angle(x) < angle(y)

    let mut before_a = 0usize;
    let mut after_b = 0usize;
    let mut interior: Vec<usize> = Vec::new();
    for i in 0..n {
        if i == q0 || i == a_idx || i == b_idx {
            continue;
        }
        if before(i, a_idx) {
            before_a += 1;
        } else if before(b_idx, i) {
            after_b += 1;
        } else {
            interior.push(i);
        }
    }
    let m = interior.len();
    debug_assert_eq!(m, n - 3 - before_a - after_b);
    if m == 0 {
        return Err(Error::Construction("empty splitting triangle"));
    }

    let w0 = mode.triangle_weight(n, ps.color_count());
    let clamp = |w: i64| w.clamp(0, m as i64 - 1) as usize;
    let weights = [
        clamp(w0),
        clamp(w0 - after_b as i64),
        clamp(w0 - before_a as i64),
    ];
    let ell: i64 = weights.iter().map(|&w| w as i64).sum();
    if ell <= 2 * m as i64 - 3 {
        return Err(Error::Construction("triangle split hypotheses failed"));
    }
    let req = TriangleSplitRequest {
        corners: [q0, a_idx, b_idx],
        interior,
        weights,
    };
    let q_set = split_triangle(&req, ps)?;
    debug_assert!(!q_set.is_empty());

    let corners = [q0, a_idx, b_idx];
    match mode {
        Mode::Uncolored => {
            let q = *q_set.iter().min().expect("nonempty");
            let (path, s1, s2) = fan_path(ps, q, corners);
            debug_assert!(s1.len().min(s2.len()) >= k, "pigeonhole bound violated");
            Ok(finish(path, s1, s2, false))
        }
        Mode::HighC | Mode::LowC => {
            colored_triangle_path(ps, mode, corners, &q_set, k)
        }
    }
}

/// Split the hull along the fan q-p_{j-1}, q-p_{j+1} around the largest
/// wedge. Returns (path, largest wedge, the rest including p_j).
fn fan_path(ps: &PointSet, q: usize, corners: [usize; 3]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let parts = wedge_parts(ps, q, corners);
    let j = (0..3)
        .max_by_key(|&i| (parts[i].len(), std::cmp::Reverse(i)))
        .expect("three parts");
    let path = vec![corners[(j + 2) % 3], q, corners[(j + 1) % 3]];
    let mut rest: Vec<usize> = vec![corners[j]];
    for (i, part) in parts.iter().enumerate() {
        if i != j {
            rest.extend_from_slice(part);
        }
    }
    (path, parts[j].clone(), rest)
}

/// Wedge classification around the splitting point q: part i is the open
/// sector avoiding the segment q - corners[i].
fn wedge_parts(ps: &PointSet, q: usize, corners: [usize; 3]) -> [Vec<usize>; 3] {
    let pts = ps.points();
    let qq = pts[q];
    let mut parts: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    'outer: for x in 0..ps.len() {
        if x == q || corners.contains(&x) {
            continue;
        }
        for i in 0..3 {
            let u = corners[(i + 1) % 3];
            let v = corners[(i + 2) % 3];
            let su = cross(qq, pts[u], pts[x]).signum();
            let ru = cross(qq, pts[u], pts[v]).signum();
            let sv = cross(qq, pts[v], pts[x]).signum();
            let rv = cross(qq, pts[v], pts[u]).signum();
            if su == ru && sv == rv {
                parts[i].push(x);
                continue 'outer;
            }
        }
        unreachable!("every point falls in exactly one wedge under general position");
    }
    parts
}

fn colored_triangle_path(
    ps: &PointSet,
    mode: Mode,
    corners: [usize; 3],
    q_set: &[usize],
    _k: usize,
) -> Result<Separator> {
    let corner_colors: Vec<usize> = corners.iter().map(|&i| ps.color(i)).collect();
    let target = mode.side_target(ps.len(), ps.color_count()).max(0) as usize;

    // Preferred: a splitting point avoiding all three corner colors, so the
    // fan around any wedge is polychromatic.
    if let Some(&q) = q_set
        .iter()
        .find(|&&q| !corner_colors.contains(&ps.color(q)))
    {
        let (path, s1, s2) = fan_path(ps, q, corners);
        return Ok(finish(path, s1, s2, true));
    }

    // Fallback within the same construction: a splitting point whose color
    // merely avoids the two path corners of its own largest wedge.
    for (tries, &q) in q_set.iter().enumerate() {
        if tries > 256 {
            break;
        }
        let (path, s1, s2) = fan_path(ps, q, corners);
        if ps.color(path[0]) != ps.color(q) && ps.color(path[2]) != ps.color(q) {
            return Ok(finish(path, s1, s2, true));
        }
    }

    if mode == Mode::HighC {
        return Err(Error::Construction(
            "no splitting point admits a polychromatic fan",
        ));
    }

    // Low-c route: two splitting points with different colors; each corner
    // connects to one of them, plus the edge between them. The three
    // candidate paths may self-intersect; sides come from crossing parity.
    let q1 = q_set[0];
    let q2 = match q_set.iter().find(|&&q| ps.color(q) != ps.color(q1)) {
        Some(&q) => q,
        None => {
            return Err(Error::Construction(
                "splitting points are monochromatic",
            ))
        }
    };
    let pick = |corner: usize| {
        if ps.color(corner) != ps.color(q1) {
            q1
        } else {
            q2
        }
    };

    type Candidate = (usize, Vec<usize>, Vec<usize>, Vec<usize>);
    let mut best: Option<Candidate> = None;
    for i in 0..3 {
        let ca = corners[(i + 2) % 3];
        let cb = corners[(i + 1) % 3];
        let (fa, fb) = (pick(ca), pick(cb));
        let mut path = vec![ca, fa];
        if fa != fb {
            path.push(fb);
        }
        path.push(cb);
        let witness = corners[i];
        let (s1, s2) = parity_sides(ps, &path, witness);
        let score = s1.len().min(s2.len());
        if best.as_ref().is_none_or(|(b, ..)| score > *b) {
            best = Some((score, path, s1, s2));
        }
    }
    let (score, path, s1, s2) = best.expect("three candidates");
    if score < target && ps.len() >= colored_threshold(ps.color_count()) {
        return Err(Error::Construction("three-edge separator below its bound"));
    }
    Ok(finish(path, s1, s2, true))
}

/// Classify every non-path point by the parity of proper crossings between
/// its segment to `witness` and the path edges. Points with even parity are
/// on the witness side. Exact under general position: a tested segment never
/// meets a path vertex.
fn parity_sides(ps: &PointSet, path: &[usize], witness: usize) -> (Vec<usize>, Vec<usize>) {
    debug_assert!(!path.contains(&witness));
    let pts = ps.points();
    let w = pts[witness];
    let mut even = vec![witness];
    let mut odd = Vec::new();
    for x in 0..ps.len() {
        if x == witness || path.contains(&x) {
            continue;
        }
        let mut crossings = 0usize;
        for e in path.windows(2) {
            if segments_cross_properly(pts[x], w, pts[e[0]], pts[e[1]]) {
                crossings += 1;
            }
        }
        if crossings.is_multiple_of(2) {
            even.push(x);
        } else {
            odd.push(x);
        }
    }
    (even, odd)
}
