//! Instance generators: the extremal windmill configurations, random
//! general-position sets, balanced colorings, and the exhaustive small-n
//! oracle for maximum connected matchings.

use crate::error::{Error, Result};
use crate::geom::{cross, segments_cross_properly, Point, COORD_LIMIT};
use crate::matching::Matching;
use crate::pointset::PointSet;
use rand::{rngs::StdRng, seq::SliceRandom, Rng, SeedableRng};

/// Largest n the exhaustive oracle accepts; the number of matchings grows
/// like (n-1)!!, and 14 keeps the test suite in seconds.
pub const ORACLE_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Windmill3,
    Windmill4,
    Random,
    Convex,
    HexCenter,
}

/// A generator request; `c = 0` means uncolored.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub c: usize,
    pub seed: u64,
    pub coord_max: i64,
}

pub fn generate(spec: &GenSpec) -> Result<PointSet> {
    if spec.n < 2 {
        return Err(Error::Precondition("generators need n >= 2"));
    }
    if spec.coord_max > COORD_LIMIT {
        return Err(Error::CoordinateOutOfRange(spec.coord_max));
    }
    match spec.kind {
        GenKind::Windmill3 => {
            if spec.c != 0 {
                return Err(Error::Precondition("windmill3 is uncolored"));
            }
            windmill_uncolored(spec.n, spec.coord_max)
        }
        GenKind::Windmill4 => {
            if spec.c != 2 {
                return Err(Error::Precondition("windmill4 requires c = 2"));
            }
            windmill_bicolored(spec.n, spec.coord_max)
        }
        GenKind::Random => {
            let ps = random_general_position(spec.n, spec.seed, spec.coord_max)?;
            maybe_color(ps, spec.c, spec.seed)
        }
        GenKind::Convex => {
            let ps = convex_position(spec.n, spec.seed, spec.coord_max)?;
            maybe_color(ps, spec.c, spec.seed)
        }
        GenKind::HexCenter => {
            if spec.n != 7 {
                return Err(Error::Precondition("hexcenter is a fixed 7-point set"));
            }
            let ps = hex_center()?;
            maybe_color(ps, spec.c, spec.seed)
        }
    }
}

fn maybe_color(ps: PointSet, c: usize, seed: u64) -> Result<PointSet> {
    if c == 0 {
        Ok(ps)
    } else {
        random_balanced_coloring(&ps, c, seed)
    }
}

/// Uniform integer points, resampled until no pair collides and no triple is
/// collinear. Deterministic per seed.
pub fn random_general_position(n: usize, seed: u64, coord_max: i64) -> Result<PointSet> {
    if coord_max < 4 * n as i64 + 16 || coord_max > COORD_LIMIT {
        return Err(Error::Precondition("coordinate range too small for n"));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut attempts = 0usize;
    while points.len() < n {
        attempts += 1;
        if attempts > 1000 * n + 100_000 {
            return Err(Error::Resolution);
        }
        let cand = Point::new(
            rng.gen_range(-coord_max..=coord_max),
            rng.gen_range(-coord_max..=coord_max),
        );
        if points.contains(&cand) {
            continue;
        }
        let mut ok = true;
        'pairs: for i in 0..points.len() {
            for j in i + 1..points.len() {
                if cross(points[i], points[j], cand) == 0 {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            points.push(cand);
        }
    }
    PointSet::new(points)
}

/// Prime used by the large general-position construction.
const GP_PRIME: i64 = 999_999_937;

/// Deterministic general-position set for sizes where rejection sampling is
/// impractical: distinct parameters t on the parabola (t, t^2 mod p) for a
/// prime p. Any three such points are affinely independent mod p, so no
/// integer collinearity can occur. Centered to keep coordinates within
/// bounds.
pub fn large_general_position(n: usize, seed: u64) -> PointSet {
    assert!((n as i64) < GP_PRIME);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::with_capacity(n * 2);
    let mut points = Vec::with_capacity(n);
    let half = GP_PRIME / 2;
    while points.len() < n {
        let t = rng.gen_range(0..GP_PRIME);
        if !seen.insert(t) {
            continue;
        }
        let sq = ((t as i128 * t as i128) % GP_PRIME as i128) as i64;
        points.push(Point::new(t - half, sq - half));
    }
    PointSet::new(points).expect("distinct by construction")
}

/// n points in convex position: a seeded sample of the integer parabola.
pub fn convex_position(n: usize, seed: u64, coord_max: i64) -> Result<PointSet> {
    let t_max = (coord_max.min(COORD_LIMIT) as f64).sqrt() as i64 - 1;
    if t_max < n as i64 {
        return Err(Error::Precondition("coordinate range too small for n"));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut ts = std::collections::BTreeSet::new();
    while ts.len() < n {
        ts.insert(rng.gen_range(-t_max..=t_max));
    }
    let points = ts.into_iter().map(|t| Point::new(t, t * t)).collect();
    PointSet::new(points)
}

/// A near-regular hexagon around a perturbed center. The center realizes the
/// maximum possible depth floor((n-2)/2) = 2 for n = 7.
pub fn hex_center() -> Result<PointSet> {
    let raw = [
        (200, 0),
        (100, 200),
        (-100, 200),
        (-200, 0),
        (-100, -200),
        (100, -200),
        (0, 100),
    ];
    PointSet::new(raw.iter().map(|&(x, y)| Point::new(x, y)).collect())
}

/// Uniformly random balanced c-coloring (which classes get the extra point
/// is randomized too).
pub fn random_balanced_coloring(ps: &PointSet, c: usize, seed: u64) -> Result<PointSet> {
    let n = ps.len();
    if c < 2 || c > n {
        return Err(Error::Precondition("coloring needs 2 <= c <= n"));
    }
    let mut rng = StdRng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut ids: Vec<usize> = (0..c).collect();
    ids.shuffle(&mut rng);
    let base = n / c;
    let extra = n % c;
    let mut labels: Vec<usize> = Vec::with_capacity(n);
    for (rank, &col) in ids.iter().enumerate() {
        let count = base + usize::from(rank < extra);
        labels.extend(std::iter::repeat_n(col, count));
    }
    labels.shuffle(&mut rng);
    PointSet::with_colors(ps.points().to_vec(), labels, c)
}

// ---------------------------------------------------------------------------
// Windmills
// ---------------------------------------------------------------------------

/// Blade sizes: near-balanced, extras on the earlier blades.
pub fn windmill_blade_sizes(n: usize, blades: usize) -> Vec<usize> {
    let base = n / blades;
    (0..blades).map(|i| base + usize::from(i < n % blades)).collect()
}

/// Order-3 integer map conjugate to a 120-degree rotation.
fn rot3(p: Point) -> Point {
    Point::new(-p.y, p.x - p.y)
}

/// Exact 90-degree rotation.
fn rot4(p: Point) -> Point {
    Point::new(-p.y, p.x)
}

/// Points along a shallow strictly convex arc: center + j*step*axis +
/// j*(k-1-j)*eta*bulge. The bulge peaks mid-blade and vanishes at the ends.
fn blade_points(center: Point, axis: (i64, i64), bulge: (i64, i64), step: i64, eta: i64, k: usize) -> Vec<Point> {
    let kk = k as i64 - 1;
    (0..k as i64)
        .map(|j| {
            let h = eta * j * (kk - j);
            Point::new(
                center.x + step * j * axis.0 + h * bulge.0,
                center.y + step * j * axis.1 + h * bulge.1,
            )
        })
        .collect()
}

/// The three-bladed windmill: three near-balanced groups, each on a shallow
/// convex arc, arranged with threefold rotational symmetry so that (i) every
/// line through two points of one blade separates the other two blades and
/// (ii) segments from different parts never cross, where part i consists of
/// segments inside blade i plus blade i to blade i+1 segments. Both
/// properties are verified exhaustively at generation time for n <= 60. The
/// largest connected matching of the result has size ceil((n-1)/3).
pub fn windmill_uncolored(n: usize, coord_max: i64) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::Precondition("windmill3 needs n >= 3"));
    }
    let sizes = windmill_blade_sizes(n, 3);
    let k_max = sizes[0];
    let step: i64 = 4096;
    let eta: i64 = 3;
    let radius: i64 = (32 * step * k_max as i64).max(1_500_000);
    let center = Point::new(radius, 0);
    let axis = (-2i64, 1i64);
    let bulge = (-1i64, -2i64);

    let mut points: Vec<Point> = Vec::with_capacity(n);
    for (i, &k) in sizes.iter().enumerate() {
        let base = blade_points(center, axis, bulge, step, eta, k);
        for p in base {
            let q = match i {
                0 => p,
                1 => rot3(p),
                _ => rot3(rot3(p)),
            };
            points.push(q);
        }
    }
    if points
        .iter()
        .any(|p| p.x.abs() > coord_max || p.y.abs() > coord_max)
    {
        return Err(Error::Resolution);
    }
    let ps = PointSet::new(points)?;
    if !ps.is_general_position() {
        return Err(Error::Resolution);
    }
    if n <= 60
        && (!windmill_parts_disjoint(&ps, &sizes, false) || !windmill_secants_separate(&ps, &sizes)) {
            return Err(Error::Resolution);
        }
    Ok(ps)
}

/// The four-bladed bicolored windmill: blades at 90-degree spacing with
/// alternating single-color classes. Only consecutive-blade segments are
/// bichromatic and segments of different consecutive-blade parts never
/// cross, capping the polychromatic connected matching at ceil((n-1)/4).
pub fn windmill_bicolored(n: usize, coord_max: i64) -> Result<PointSet> {
    if n < 4 {
        return Err(Error::Precondition("windmill4 needs n >= 4"));
    }
    let sizes = windmill_blade_sizes(n, 4);
    let k_max = sizes[0];
    let step: i64 = 4096;
    let eta: i64 = 3;
    let radius: i64 = (32 * step * k_max as i64).max(1_500_000);
    let center = Point::new(radius, 0);
    let axis = (-2i64, 1i64);
    let bulge = (-1i64, -2i64);

    let mut points: Vec<Point> = Vec::with_capacity(n);
    let mut colors: Vec<usize> = Vec::with_capacity(n);
    for (i, &k) in sizes.iter().enumerate() {
        let base = blade_points(center, axis, bulge, step, eta, k);
        for p in base {
            let mut q = p;
            for _ in 0..i {
                q = rot4(q);
            }
            points.push(q);
            colors.push(i % 2);
        }
    }
    if points
        .iter()
        .any(|p| p.x.abs() > coord_max || p.y.abs() > coord_max)
    {
        return Err(Error::Resolution);
    }
    let ps = PointSet::with_colors(points, colors, 2)?;
    if !ps.is_general_position() {
        return Err(Error::Resolution);
    }
    if n <= 60 && !windmill_parts_disjoint(&ps, &sizes, true) {
        return Err(Error::Resolution);
    }
    Ok(ps)
}

fn blade_of(sizes: &[usize], idx: usize) -> usize {
    let mut acc = 0usize;
    for (b, &s) in sizes.iter().enumerate() {
        acc += s;
        if idx < acc {
            return b;
        }
    }
    unreachable!("index within total size")
}

/// Part of a segment (i, j), if any: within-blade segments and segments to
/// the next blade belong to the lower blade's part. For the bicolored
/// windmill only consecutive-blade (bichromatic) segments form parts.
fn part_of(sizes: &[usize], bichromatic_only: bool, i: usize, j: usize) -> Option<usize> {
    let blades = sizes.len();
    let (bi, bj) = (blade_of(sizes, i), blade_of(sizes, j));
    if bi == bj {
        return if bichromatic_only { None } else { Some(bi) };
    }
    if (bi + 1) % blades == bj {
        Some(bi)
    } else if (bj + 1) % blades == bi {
        Some(bj)
    } else {
        None
    }
}

/// Exhaustive check that segments from different parts never properly cross.
pub fn windmill_parts_disjoint(ps: &PointSet, sizes: &[usize], bichromatic_only: bool) -> bool {
    let n = ps.len();
    let mut segs: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(part) = part_of(sizes, bichromatic_only, i, j) {
                segs.push((i, j, part));
            }
        }
    }
    for (a, &(i, j, part)) in segs.iter().enumerate() {
        for &(x, y, part2) in &segs[a + 1..] {
            if part == part2 || i == x || i == y || j == x || j == y {
                continue;
            }
            if segments_cross_properly(ps.point(i), ps.point(j), ps.point(x), ps.point(y)) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive check of the line-separation property of the three-bladed
/// windmill: every line through two points of blade i has blade i+1 and
/// blade i+2 strictly on opposite sides.
pub fn windmill_secants_separate(ps: &PointSet, sizes: &[usize]) -> bool {
    let n = ps.len();
    for i in 0..n {
        for j in i + 1..n {
            let b = blade_of(sizes, i);
            if blade_of(sizes, j) != b {
                continue;
            }
            let (next_b, prev_b) = ((b + 1) % 3, (b + 2) % 3);
            let mut next_sign = 0i128;
            let mut prev_sign = 0i128;
            for x in 0..n {
                if x == i || x == j {
                    continue;
                }
                let bx = blade_of(sizes, x);
                if bx == b {
                    continue;
                }
                let s = cross(ps.point(i), ps.point(j), ps.point(x)).signum();
                if s == 0 {
                    return false;
                }
                let slot = if bx == next_b {
                    &mut next_sign
                } else {
                    debug_assert_eq!(bx, prev_b);
                    &mut prev_sign
                };
                if *slot == 0 {
                    *slot = s;
                } else if *slot != s {
                    return false;
                }
            }
            if next_sign != 0 && next_sign == prev_sign {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

/// Exact maximum connected matching size (honoring colors when present) by
/// branch-and-bound over all matchings, with union-find connectivity over
/// pairwise segment crossings. Limited to n <= 14.
pub fn oracle_max_connected_matching(ps: &PointSet) -> Result<(usize, Matching)> {
    let n = ps.len();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeLimit(n, ORACLE_LIMIT));
    }
    if n < 2 {
        return Ok((0, Matching::empty()));
    }
    let allowed = |i: usize, j: usize| !ps.is_colored() || ps.color(i) != ps.color(j);

    let mut search = OracleSearch {
        ps,
        decided: vec![false; n],
        stack: Vec::new(),
        parent: Vec::new(),
        comp_size: Vec::new(),
        components: 0,
        undo: Vec::new(),
        best_size: 0,
        best: Vec::new(),
    };
    // Greedy connectivity means any single allowed edge is a size-1 start.
    search.run(&allowed);
    let (size, edges) = (search.best_size, search.best.clone());
    Ok((size, Matching::new(edges)))
}

struct OracleSearch<'a> {
    ps: &'a PointSet,
    decided: Vec<bool>,
    stack: Vec<(usize, usize)>,
    parent: Vec<usize>,
    comp_size: Vec<usize>,
    components: usize,
    undo: Vec<(usize, usize)>, // (child root, parent root) unions to revert
    best_size: usize,
    best: Vec<(usize, usize)>,
}

impl<'a> OracleSearch<'a> {
    fn run(&mut self, allowed: &dyn Fn(usize, usize) -> bool) {
        self.dfs(allowed);
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn push_edge(&mut self, i: usize, j: usize) -> usize {
        let id = self.stack.len();
        self.stack.push((i, j));
        self.parent.push(id);
        self.comp_size.push(1);
        self.components += 1;
        let mut merged = 0usize;
        for e in 0..id {
            let (x, y) = self.stack[e];
            if self
                .ps
                .segments_cross(crate::pointset::Segment::new(i, j), crate::pointset::Segment::new(x, y))
            {
                let (mut ra, mut rb) = (self.find(e), self.find(id));
                if ra != rb {
                    if self.comp_size[ra] < self.comp_size[rb] {
                        std::mem::swap(&mut ra, &mut rb);
                    }
                    self.parent[rb] = ra;
                    self.comp_size[ra] += self.comp_size[rb];
                    self.undo.push((rb, ra));
                    self.components -= 1;
                    merged += 1;
                }
            }
        }
        merged
    }

    fn pop_edge(&mut self, merged: usize) {
        for _ in 0..merged {
            let (child, root) = self.undo.pop().expect("undo stack");
            self.parent[child] = child;
            self.comp_size[root] -= self.comp_size[child];
            self.components += 1;
        }
        self.stack.pop();
        self.parent.pop();
        self.comp_size.pop();
        self.components -= 1;
    }

    fn dfs(&mut self, allowed: &dyn Fn(usize, usize) -> bool) {
        // Record the current matching if it is connected.
        if self.components <= 1 && self.stack.len() > self.best_size {
            self.best_size = self.stack.len();
            self.best = self.stack.clone();
        }
        let n = self.decided.len();
        let undecided = self.decided.iter().filter(|&&d| !d).count();
        if self.stack.len() + undecided / 2 <= self.best_size {
            return;
        }
        let i = match (0..n).find(|&i| !self.decided[i]) {
            Some(i) => i,
            None => return,
        };
        self.decided[i] = true;
        for j in i + 1..n {
            if self.decided[j] || !allowed(i, j) {
                continue;
            }
            self.decided[j] = true;
            let merged = self.push_edge(i, j);
            self.dfs(allowed);
            self.pop_edge(merged);
            self.decided[j] = false;
        }
        // Leave i unmatched.
        self.dfs(allowed);
        self.decided[i] = false;
    }
}
