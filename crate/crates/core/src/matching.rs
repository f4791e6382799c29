//! Connected-matching constructions: the across-segment machine with its
//! m(a,b) bound, the uncolored pipeline, the depth-based matching, and the
//! colored pipelines.

use crate::crossing::{maximal_crossing_matching, CrossingInstance};
use crate::error::{Error, Result};
use crate::geom::{
    convex_hull, cross, deepest_point, segments_cross_properly, Point,
};
use crate::pointset::{PointSet, Segment};
use crate::report::{BoundReport, Rat, TheoremTag};
use crate::separator::{
    colored_threshold, polychromatic_separating_path_c4_relaxed,
    polychromatic_separator_3edges_relaxed, separating_path, Separator,
};

/// A straight-line matching: index pairs with pairwise distinct endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: Vec<(usize, usize)>) -> Matching {
        let edges = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        Matching { edges }
    }

    pub fn empty() -> Matching {
        Matching { edges: Vec::new() }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn push(&mut self, a: usize, b: usize) {
        self.edges.push((a.min(b), a.max(b)));
    }

    /// Canonical form: pairs ordered, edge list sorted.
    pub fn normalized(mut self) -> Matching {
        self.edges.sort_unstable();
        self
    }
}

/// The across-segment lower bound m(a,b): the guaranteed connected matching
/// size for a points above and b <= a points below a segment all of whose
/// above-below pairs cross it.
pub fn m_bound(a: usize, b: usize) -> Result<Rat> {
    if b > a {
        return Err(Error::Precondition("m(a,b) needs b <= a"));
    }
    let (a, b) = (a as i64, b as i64);
    Ok(if a <= 2 * b + 3 {
        Rat::from_integer(1 + b)
    } else if a <= 7 * b + 3 {
        Rat::new(a + 3 * b + 2, 5)
    } else {
        Rat::from_integer(1 + 2 * b)
    })
}

/// Matching of antipodal chords of a convex polygon: vertex i is paired with
/// vertex i + floor(k/2). Any two such chords cross, so the matching is
/// connected.
pub fn antipodal_connected_matching(convex_order: &[usize]) -> Matching {
    let k = convex_order.len();
    let mut edges = Vec::with_capacity(k / 2);
    for i in 0..k / 2 {
        edges.push((convex_order[i], convex_order[i + k / 2]));
    }
    Matching::new(edges)
}

/// Connected matching across the segment uv containing uv itself, of size at
/// least ceil(m(a, b)).
///
/// Preconditions are validated: the sides are strict with respect to the
/// supporting line, b <= a, and every A-B segment crosses uv (checked in
/// O(n) through the slope window).
pub fn connected_matching_across_segment(
    u: usize,
    v: usize,
    side_a: &[usize],
    side_b: &[usize],
    ps: &PointSet,
) -> Result<Matching> {
    if side_b.len() > side_a.len() {
        return Err(Error::Precondition("side B may not outnumber side A"));
    }
    let inst = CrossingInstance::new(ps, Segment::new(u, v), side_a.to_vec(), side_b.to_vec())?;
    if !side_a.is_empty() && !side_b.is_empty() {
        let max_phi1_a = side_a.iter().map(|&i| inst.phi1(i)).max().expect("nonempty");
        let min_phi1_b = side_b.iter().map(|&i| inst.phi1(i)).min().expect("nonempty");
        let min_phi2_a = side_a.iter().map(|&i| inst.phi2(i)).min().expect("nonempty");
        let max_phi2_b = side_b.iter().map(|&i| inst.phi2(i)).max().expect("nonempty");
        if max_phi1_a > min_phi1_b || min_phi2_a < max_phi2_b {
            return Err(Error::Precondition(
                "some A-B segment misses the reference segment",
            ));
        }
    }
    Ok(across_segment_unchecked(u, v, side_a, side_b, ps))
}

/// The incremental-hull construction behind the across-segment bound. The
/// caller guarantees that every A-B segment crosses uv; the sides need not be
/// separated by the supporting line of uv (the pipeline's residual sides are
/// not).
pub(crate) fn across_segment_unchecked(
    u: usize,
    v: usize,
    side_a: &[usize],
    side_b: &[usize],
    ps: &PointSet,
) -> Matching {
    let a0 = side_a.len();
    let b0 = side_b.len();
    debug_assert!(b0 <= a0);

    let mut matching = Matching::empty();
    matching.push(u, v);

    // A sorted lexicographically: each inserted point is outside the hull of
    // the previous ones.
    let mut sorted_a: Vec<usize> = side_a.to_vec();
    sorted_a.sort_by_key(|&i| (ps.point(i).x, ps.point(i).y));
    let mut b_queue: Vec<usize> = side_b.to_vec();
    b_queue.sort_unstable();
    let mut b_cursor = 0usize;

    let mut ring = HullRing::new(&sorted_a, ps);
    let mut a_remaining = a0;
    let mut b_remaining = b0;
    let mut ops = 0usize;

    let mut next_slot = 0usize;
    let mut pending: Option<usize> = None;
    'outer: while next_slot < sorted_a.len() {
        let p = next_slot;
        next_slot += 1;
        loop {
            if ring.size < 3 {
                ring.seed_insert(p);
                break;
            }
            match ring.probe(p) {
                Probe::Clean { t1, t2 } => {
                    ring.splice(t1, p, t2);
                    break;
                }
                Probe::Deleted { t1, q, nq } => {
                    if b_remaining == 0 || a_remaining <= b_remaining {
                        pending = Some(p);
                        break 'outer;
                    }
                    // One extraction round: match the covered vertex q to a
                    // B point and add the triangle edge its segment exits
                    // through; two edges in, three A points and one B point
                    // out.
                    let r = b_queue[b_cursor];
                    b_cursor += 1;
                    let q_pt = ps.point(sorted_a[q]);
                    let r_pt = ps.point(r);
                    let tri = [p, t1, nq];
                    let crossed = tri_exit_edge(ps, &sorted_a, tri, q_pt, r_pt);
                    matching.push(sorted_a[q], r);
                    matching.push(sorted_a[crossed.0], sorted_a[crossed.1]);
                    ring.remove(q);
                    let mut p_consumed = false;
                    for &s in &[crossed.0, crossed.1] {
                        if s == p {
                            p_consumed = true;
                        } else {
                            ring.remove(s);
                        }
                    }
                    a_remaining -= 3;
                    b_remaining -= 1;
                    ops += 1;
                    debug_assert_eq!(a_remaining, a0 - 3 * ops);
                    debug_assert_eq!(b_remaining, b0 - ops);
                    debug_assert_eq!(matching.len(), 1 + 2 * ops);
                    if p_consumed {
                        break;
                    }
                }
            }
        }
    }

    // Remaining A points: the convex set in the ring, plus whatever was
    // never inserted.
    let mut remaining_a: Vec<usize> = ring.alive_slots().iter().map(|&s| sorted_a[s]).collect();
    if let Some(p) = pending {
        remaining_a.push(sorted_a[p]);
    }
    remaining_a.extend_from_slice(&sorted_a[next_slot..]);
    remaining_a.sort_unstable();
    debug_assert_eq!(remaining_a.len(), a_remaining);
    let remaining_b = &b_queue[b_cursor..];
    debug_assert_eq!(remaining_b.len(), b_remaining);

    if b_remaining == 0 {
        return matching;
    }
    if a_remaining <= b_remaining {
        // The counts move in steps of 3 and 1, so the stop is tight.
        debug_assert!(b_remaining <= a_remaining + 1);
        debug_assert_eq!(ops, (a0 - b0).div_ceil(2));
        for (&a, &b) in remaining_a.iter().zip(remaining_b.iter()) {
            matching.push(a, b);
        }
        return matching;
    }

    // Remaining A is in convex position: either match every leftover B point
    // into it, or take the antipodal matching inside A, whichever is larger.
    let mut with_b = matching.clone();
    for (&b, &a) in remaining_b.iter().zip(remaining_a.iter()) {
        with_b.push(a, b);
    }
    let hull_order: Vec<usize> = ring.cycle_order().iter().map(|&s| sorted_a[s]).collect();
    let antipodal = antipodal_connected_matching(&hull_order);
    if antipodal.len() > with_b.len() {
        antipodal
    } else {
        with_b
    }
}

/// Which edge of the triangle (slots) does the segment q->r exit through?
fn tri_exit_edge(
    ps: &PointSet,
    sorted_a: &[usize],
    tri: [usize; 3],
    q_pt: Point,
    r_pt: Point,
) -> (usize, usize) {
    let mut found: Option<(usize, usize)> = None;
    for i in 0..3 {
        let (s, t) = (tri[i], tri[(i + 1) % 3]);
        if segments_cross_properly(q_pt, r_pt, ps.point(sorted_a[s]), ps.point(sorted_a[t])) {
            debug_assert!(found.is_none(), "segment exits through one edge only");
            found = Some((s, t));
            #[cfg(not(debug_assertions))]
            break;
        }
    }
    found.expect("q lies inside the triangle and r outside")
}

enum Probe {
    Clean { t1: usize, t2: usize },
    Deleted { t1: usize, q: usize, nq: usize },
}

/// Convex polygon over a prefix of the lexicographically sorted A points,
/// stored as a circular doubly linked list in CCW order with a finger at the
/// lexicographic maximum.
struct HullRing<'a> {
    next: Vec<usize>,
    prev: Vec<usize>,
    alive: Vec<bool>,
    size: usize,
    finger: usize,
    sorted_a: &'a [usize],
    ps: &'a PointSet,
}

impl<'a> HullRing<'a> {
    fn new(sorted_a: &'a [usize], ps: &'a PointSet) -> HullRing<'a> {
        let n = sorted_a.len();
        HullRing {
            next: vec![usize::MAX; n],
            prev: vec![usize::MAX; n],
            alive: vec![false; n],
            size: 0,
            finger: usize::MAX,
            sorted_a,
            ps,
        }
    }

    #[inline]
    fn pt(&self, slot: usize) -> Point {
        self.ps.point(self.sorted_a[slot])
    }

    #[inline]
    fn lex(&self, slot: usize) -> (i64, i64) {
        let p = self.pt(slot);
        (p.x, p.y)
    }

    fn seed_insert(&mut self, p: usize) {
        debug_assert!(self.size < 3);
        self.alive[p] = true;
        match self.size {
            0 => {
                self.next[p] = p;
                self.prev[p] = p;
            }
            1 => {
                let f = self.finger;
                self.next[p] = f;
                self.prev[p] = f;
                self.next[f] = p;
                self.prev[f] = p;
            }
            _ => {
                let f = self.finger;
                let g = self.next[f];
                // Wind the triangle counterclockwise.
                if cross(self.pt(g), self.pt(f), self.pt(p)) > 0 {
                    self.link(g, f);
                    self.link(f, p);
                    self.link(p, g);
                } else {
                    self.link(g, p);
                    self.link(p, f);
                    self.link(f, g);
                }
            }
        }
        self.size += 1;
        self.finger = p; // inserted in lex order, so p is the new maximum
    }

    #[inline]
    fn link(&mut self, a: usize, b: usize) {
        self.next[a] = b;
        self.prev[b] = a;
    }

    /// Edge (x, next(x)) is visible from p iff p lies strictly outside its
    /// supporting line.
    #[inline]
    fn visible(&self, x: usize, p_pt: Point) -> bool {
        cross(self.pt(x), self.pt(self.next[x]), p_pt) < 0
    }

    /// Find the chain of hull edges visible from slot p (alive vertices
    /// only; p is not yet inserted).
    fn probe(&self, p: usize) -> Probe {
        let p_pt = self.pt(p);
        let f = self.finger;
        let start = if self.visible(f, p_pt) {
            f
        } else if self.visible(self.prev[f], p_pt) {
            self.prev[f]
        } else {
            // The lexicographic maximum always exposes an incident visible
            // edge to a lexicographically larger outside point; scan as a
            // defensive fallback.
            let mut found = usize::MAX;
            let mut x = f;
            loop {
                if self.visible(x, p_pt) {
                    found = x;
                    break;
                }
                x = self.next[x];
                if x == f {
                    break;
                }
            }
            debug_assert_ne!(found, usize::MAX, "outside point sees some edge");
            found
        };
        let mut t2 = self.next[start];
        while self.visible(t2, p_pt) {
            t2 = self.next[t2];
        }
        let mut t1 = start;
        while self.visible(self.prev[t1], p_pt) {
            t1 = self.prev[t1];
        }
        if self.next[t1] == t2 {
            Probe::Clean { t1, t2 }
        } else {
            let q = self.next[t1];
            Probe::Deleted {
                t1,
                q,
                nq: self.next[q],
            }
        }
    }

    fn splice(&mut self, t1: usize, p: usize, t2: usize) {
        debug_assert_eq!(self.next[t1], t2);
        self.alive[p] = true;
        self.link(t1, p);
        self.link(p, t2);
        self.size += 1;
        if self.lex(p) > self.lex(self.finger) {
            self.finger = p;
        }
    }

    fn remove(&mut self, slot: usize) {
        debug_assert!(self.alive[slot]);
        let (pr, nx) = (self.prev[slot], self.next[slot]);
        self.alive[slot] = false;
        self.size -= 1;
        if self.size == 0 {
            self.finger = usize::MAX;
            return;
        }
        self.link(pr, nx);
        if self.finger == slot {
            // In a convex polygon the runner-up in lex order is adjacent to
            // the maximum.
            self.finger = if self.size == 1 || self.lex(pr) > self.lex(nx) {
                pr
            } else {
                nx
            };
        }
    }

    fn alive_slots(&self) -> Vec<usize> {
        (0..self.alive.len()).filter(|&s| self.alive[s]).collect()
    }

    /// CCW vertex order, starting at the finger.
    fn cycle_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.size);
        if self.size == 0 {
            return out;
        }
        let mut x = self.finger;
        loop {
            out.push(x);
            x = self.next[x];
            if x == self.finger {
                break;
            }
        }
        debug_assert_eq!(out.len(), self.size);
        out
    }
}

/// The uncolored pipeline: separate, then take the best of the maximal
/// crossing matching, the plain residual matching, and the across-segment
/// construction. Guarantees size at least ceil((5n+1)/27); O(n log n).
pub fn connected_matching_uncolored(ps: &PointSet) -> Result<(Matching, BoundReport)> {
    let n = ps.len();
    if n < 2 {
        return Err(Error::Precondition("need at least two points"));
    }
    let sep = separating_path(ps)?;
    let small = &sep.side_a;
    let big = &sep.side_b;

    let matching = if sep.path.len() == 2 {
        // Single separating edge: every cross segment meets it.
        let mut m = Matching::empty();
        m.push(sep.path[0], sep.path[1]);
        for (&b, &a) in small.iter().zip(big.iter()) {
            m.push(a, b);
        }
        m
    } else {
        let e1 = (sep.path[0], sep.path[1]);
        let e2 = (sep.path[1], sep.path[2]);

        let m1_core = crossing_matching_across_edge(ps, e1, big, small);
        let mut m1 = Matching::empty();
        m1.push(e1.0, e1.1);
        let mut matched: Vec<bool> = vec![false; n];
        for &(x, y) in m1_core.edges() {
            m1.push(x, y);
            matched[x] = true;
            matched[y] = true;
        }
        let a2: Vec<usize> = big.iter().copied().filter(|&i| !matched[i]).collect();
        let b2: Vec<usize> = small.iter().copied().filter(|&i| !matched[i]).collect();
        debug_assert!(b2.len() <= a2.len());

        // Residual pairs all cross e2: they cross the path but not e1, by
        // maximality of m1.
        let mut m2 = Matching::empty();
        m2.push(e2.0, e2.1);
        for (&b, &a) in b2.iter().zip(a2.iter()) {
            m2.push(a, b);
        }

        let m3 = across_segment_unchecked(e2.0, e2.1, &a2, &b2, ps);

        [m1, m2, m3]
            .into_iter()
            .max_by_key(Matching::len)
            .expect("three candidates")
    };

    let report = BoundReport {
        n,
        c: 0,
        achieved: matching.len(),
        guaranteed: TheoremTag::Uncolored.formula(n, 0).expect("closed form"),
        theorem: TheoremTag::Uncolored,
        binding: true,
    };
    Ok((matching, report))
}

/// Maximal matching between xs and ys with every edge crossing the segment
/// (u, v). Crossing pairs straddle the supporting line, so the sweep runs
/// once per orientation of the sides.
fn crossing_matching_across_edge(
    ps: &PointSet,
    (u, v): (usize, usize),
    xs: &[usize],
    ys: &[usize],
) -> Matching {
    let (pu, pv) = (ps.point(u), ps.point(v));
    let side = |i: usize| cross(pu, pv, ps.point(i)) > 0;
    let (xs_l, xs_r): (Vec<usize>, Vec<usize>) = xs.iter().partition(|&&i| side(i));
    let (ys_l, ys_r): (Vec<usize>, Vec<usize>) = ys.iter().partition(|&&i| side(i));
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (a_side, b_side) in [(xs_l, ys_r), (xs_r, ys_l)] {
        if a_side.is_empty() || b_side.is_empty() {
            continue;
        }
        let inst = CrossingInstance::new(ps, Segment::new(u, v), a_side, b_side)
            .expect("sides are strict by construction");
        edges.extend_from_slice(maximal_crossing_matching(&inst).edges());
    }
    Matching::new(edges)
}

/// Depth-based connected matching: size at least the maximum point depth.
pub fn deep_point_matching(ps: &PointSet) -> Result<(Matching, BoundReport)> {
    let n = ps.len();
    if n < 2 {
        return Err(Error::Precondition("need at least two points"));
    }
    let (p, depth) = deepest_point(ps.points());
    let hull = convex_hull(ps.points(), &(0..n).collect::<Vec<_>>());
    let anchor = hull
        .iter()
        .copied()
        .filter(|&i| i != p)
        .min()
        .expect("hull of n >= 2 points has another vertex");

    let mut matching = Matching::empty();
    matching.push(p, anchor);
    if depth > 0 {
        let (pp, pa) = (ps.point(p), ps.point(anchor));
        let mut above: Vec<usize> = Vec::new();
        let mut below: Vec<usize> = Vec::new();
        for i in 0..n {
            if i == p || i == anchor {
                continue;
            }
            match cross(pp, pa, ps.point(i)).signum() {
                1 => above.push(i),
                -1 => below.push(i),
                _ => unreachable!("collinear triple under general position"),
            }
        }
        debug_assert!(above.len() >= depth && below.len() >= depth);
        // v_1.. counterclockwise from the anchor direction, u_1.. clockwise.
        above.sort_by(|&x, &y| {
            cross(pp, ps.point(x), ps.point(y))
                .cmp(&0)
                .reverse()
        });
        below.sort_by(|&x, &y| cross(pp, ps.point(x), ps.point(y)).cmp(&0));
        for i in 1..depth {
            matching.push(below[i - 1], above[depth - i - 1]);
        }
    }

    let report = BoundReport {
        n,
        c: ps.color_count(),
        achieved: matching.len(),
        guaranteed: Rat::from_integer(depth as i64),
        theorem: TheoremTag::Deep,
        binding: true,
    };
    Ok((matching, report))
}

/// Greedy bichromatic matching between the two sides, always drawing from
/// the most popular remaining color class of each. Errors if it stalls
/// before matching the smaller side completely.
pub fn greedy_polychromatic_matching(
    side_a: &[usize],
    side_b: &[usize],
    ps: &PointSet,
) -> Result<Matching> {
    let m = greedy_polychromatic_partial(side_a, side_b, ps)?;
    if m.len() < side_a.len().min(side_b.len()) {
        return Err(Error::InfeasiblePairing);
    }
    Ok(m)
}

/// Greedy matching that stops quietly when only one shared color remains on
/// both sides; the pipelines tolerate the shortfall.
pub(crate) fn greedy_polychromatic_partial(
    side_a: &[usize],
    side_b: &[usize],
    ps: &PointSet,
) -> Result<Matching> {
    if !ps.is_colored() {
        return Err(Error::Precondition("greedy matching needs colors"));
    }
    let c = ps.color_count();
    let bucketize = |side: &[usize]| {
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); c];
        let mut sorted = side.to_vec();
        sorted.sort_unstable();
        for &i in sorted.iter().rev() {
            buckets[ps.color(i)].push(i); // popped smallest-first
        }
        buckets
    };
    let mut a_buckets = bucketize(side_a);
    let mut b_buckets = bucketize(side_b);
    let top = |buckets: &[Vec<usize>], avoid: Option<usize>| -> Option<usize> {
        (0..buckets.len())
            .filter(|&col| Some(col) != avoid && !buckets[col].is_empty())
            .max_by_key(|&col| (buckets[col].len(), std::cmp::Reverse(col)))
    };

    let mut edges = Vec::new();
    while let (Some(ta), Some(tb)) = (top(&a_buckets, None), top(&b_buckets, None)) {
        let (ca, cb) = if ta != tb {
            (ta, tb)
        } else if let Some(second_b) = top(&b_buckets, Some(tb)) {
            (ta, second_b)
        } else if let Some(second_a) = top(&a_buckets, Some(ta)) {
            (second_a, tb)
        } else {
            break; // both sides monochromatic in the same color
        };
        let a = a_buckets[ca].pop().expect("nonempty bucket");
        let b = b_buckets[cb].pop().expect("nonempty bucket");
        edges.push((a, b));
    }
    Ok(Matching::new(edges))
}

/// The colored pipeline. Routes through the 3-edge separator for any c >= 2;
/// for c > 7 additionally tries the length-2 polychromatic path and keeps the
/// larger matching, reporting the larger certified guarantee.
pub fn connected_matching_colored(ps: &PointSet) -> Result<(Matching, BoundReport)> {
    let n = ps.len();
    let c = ps.color_count();
    if !ps.is_colored() || c < 2 {
        return Err(Error::Precondition("needs a balanced coloring with c >= 2"));
    }
    if n < 2 {
        return Err(Error::Precondition("need at least two points"));
    }
    let binding = n >= colored_threshold(c);

    let low = colored_route(ps, TheoremTag::ColoredLowC);
    let high = if c > 7 {
        colored_route(ps, TheoremTag::ColoredHighC)
    } else {
        Err(Error::Precondition("high-c route needs c > 7"))
    };

    // Keep the largest matching among the routes that ran to completion and
    // report the strongest guarantee any completed route certifies.
    let mut matching: Option<Matching> = None;
    let mut tag: Option<TheoremTag> = None;
    for (result, route_tag) in [
        (low, TheoremTag::ColoredLowC),
        (high, TheoremTag::ColoredHighC),
    ] {
        if let Ok(m) = result {
            if matching.as_ref().is_none_or(|bm| m.len() > bm.len()) {
                matching = Some(m);
            }
            if tag.is_none_or(|t| guarantee(route_tag, n, c) > guarantee(t, n, c)) {
                tag = Some(route_tag);
            }
        }
    }

    match matching.zip(tag) {
        Some((matching, tag)) => {
            let report = BoundReport {
                n,
                c,
                achieved: matching.len(),
                guaranteed: guarantee(tag, n, c),
                theorem: tag,
                binding,
            };
            Ok((matching, report))
        }
        None if !binding => {
            // Below the size threshold the constructions may degenerate;
            // fall back to a single bichromatic edge, which is a valid
            // connected polychromatic matching.
            let mut edge = None;
            'search: for i in 0..n {
                for j in i + 1..n {
                    if ps.color(i) != ps.color(j) {
                        edge = Some((i, j));
                        break 'search;
                    }
                }
            }
            let (i, j) = edge.ok_or(Error::InfeasiblePairing)?;
            let matching = Matching::new(vec![(i, j)]);
            let report = BoundReport {
                n,
                c,
                achieved: 1,
                guaranteed: guarantee(TheoremTag::ColoredLowC, n, c),
                theorem: TheoremTag::ColoredLowC,
                binding: false,
            };
            Ok((matching, report))
        }
        None => Err(Error::Construction(
            "no colored separator route succeeded above the size threshold",
        )),
    }
}

fn guarantee(tag: TheoremTag, n: usize, c: usize) -> Rat {
    tag.formula(n, c).expect("colored tags have closed forms")
}

fn colored_route(ps: &PointSet, tag: TheoremTag) -> Result<Matching> {
    let sep: Separator = match tag {
        TheoremTag::ColoredHighC => polychromatic_separating_path_c4_relaxed(ps)?,
        TheoremTag::ColoredLowC => polychromatic_separator_3edges_relaxed(ps)?,
        _ => unreachable!("colored routes only"),
    };
    let m = greedy_polychromatic_partial(&sep.side_a, &sep.side_b, ps)?;

    // Keep the path edge crossed by the most matching edges, then the star
    // of matching edges through it.
    let mut best_edge = None;
    let mut best_through: Vec<(usize, usize)> = Vec::new();
    for (eu, ev) in sep.edges() {
        let (pu, pv) = (ps.point(eu), ps.point(ev));
        let through: Vec<(usize, usize)> = m
            .edges()
            .iter()
            .copied()
            .filter(|&(x, y)| segments_cross_properly(ps.point(x), ps.point(y), pu, pv))
            .collect();
        if best_edge.is_none() || through.len() > best_through.len() {
            best_edge = Some((eu, ev));
            best_through = through;
        }
    }
    let (eu, ev) = best_edge.expect("separator paths have at least one edge");
    debug_assert_ne!(ps.color(eu), ps.color(ev));
    let mut out = Matching::empty();
    out.push(eu, ev);
    for (x, y) in best_through {
        out.push(x, y);
    }
    Ok(out)
}
