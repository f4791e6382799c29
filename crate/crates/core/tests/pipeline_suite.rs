//! End-to-end matching pipelines against their guarantees, the verifiers,
//! and the exhaustive oracle at small n.

mod common;

use common::brute_depth;
use conmatch::instances::{
    large_general_position, oracle_max_connected_matching, random_balanced_coloring,
    random_general_position,
};
use conmatch::matching::{
    antipodal_connected_matching, connected_matching_across_segment, connected_matching_colored,
    connected_matching_uncolored, deep_point_matching, greedy_polychromatic_matching, m_bound,
};
use conmatch::verify::{
    check_bound_report, is_connected, is_matching, is_polychromatic,
};
use conmatch::{Point, PointSet};
use rand::{rngs::StdRng, Rng, SeedableRng};

/// Random across-segment instance: u, v on the x axis, A above in a narrow
/// slab, B below. The slab keeps every A-B crossing through uv.
fn across_instance(
    a: usize,
    b: usize,
    seed: u64,
) -> (PointSet, usize, usize, Vec<usize>, Vec<usize>) {
    let mut rng = StdRng::seed_from_u64(seed);
    let span = 3000i64;
    let mut pts = vec![Point::new(-span, 0), Point::new(span, 0)];
    let mut add = |count: usize, lo: i64, hi: i64, pts: &mut Vec<Point>| {
        let mut made = 0usize;
        while made < count {
            let cand = Point::new(rng.gen_range(-span / 3..=span / 3), rng.gen_range(lo..=hi));
            if pts.contains(&cand) {
                continue;
            }
            let collinear = (0..pts.len()).any(|i| {
                (i + 1..pts.len()).any(|j| conmatch::geom::cross(pts[i], pts[j], cand) == 0)
            });
            if collinear {
                continue;
            }
            pts.push(cand);
            made += 1;
        }
    };
    add(a, 50, 4000, &mut pts);
    add(b, -4000, -50, &mut pts);
    let ps = PointSet::new(pts).unwrap();
    let side_a: Vec<usize> = (2..2 + a).collect();
    let side_b: Vec<usize> = (2 + a..2 + a + b).collect();
    (ps, 0, 1, side_a, side_b)
}

#[test]
fn across_segment_meets_m_bound() {
    let mut rng = StdRng::seed_from_u64(4242);
    for _ in 0..120 {
        let a = rng.gen_range(0usize..=40);
        let b = rng.gen_range(0usize..=a.min(20));
        let seed = rng.gen::<u64>();
        let (ps, u, v, side_a, side_b) = across_instance(a, b, seed);
        let m = connected_matching_across_segment(u, v, &side_a, &side_b, &ps)
            .expect("valid instance");
        let bound = m_bound(a, b).unwrap().ceil().to_integer();
        assert!(is_matching(&ps, &m), "a={a} b={b} seed={seed}");
        assert!(is_connected(&ps, &m), "a={a} b={b} seed={seed}");
        assert!(
            m.len() as i64 >= bound,
            "a={a} b={b} seed={seed}: got {} < {bound}",
            m.len()
        );
    }
}

#[test]
fn across_segment_trivial_and_convex_cases() {
    // a = b = 0: just the segment.
    let (ps, u, v, sa, sb) = across_instance(0, 0, 1);
    let m = connected_matching_across_segment(u, v, &sa, &sb, &ps).unwrap();
    assert_eq!(m.len(), 1);

    // A in convex position, b = 1: the machine ends in the convex endgame.
    let pts = vec![
        Point::new(-3000, 0),
        Point::new(3000, 0),
        Point::new(-900, 600),
        Point::new(0, 210),
        Point::new(900, 620),
        Point::new(-10, -500),
    ];
    let ps = PointSet::new(pts).unwrap();
    let m = connected_matching_across_segment(0, 1, &[2, 3, 4], &[5], &ps).unwrap();
    assert!(m.len() as i64 >= m_bound(3, 1).unwrap().ceil().to_integer());
    assert!(is_connected(&ps, &m));
}

#[test]
fn across_segment_validates_preconditions() {
    let (ps, u, v, sa, sb) = across_instance(3, 2, 9);
    // b > a rejected
    assert!(connected_matching_across_segment(u, v, &sb, &sa, &ps).is_err());
    // far-out point breaks the all-pairs-crossing window
    let mut pts = ps.points().to_vec();
    pts.push(Point::new(30_000, 40));
    let ps2 = PointSet::new(pts).unwrap();
    let mut sa2 = sa.clone();
    sa2.push(ps2.len() - 1);
    assert!(connected_matching_across_segment(u, v, &sa2, &sb, &ps2).is_err());
}

#[test]
fn antipodal_matching_is_connected() {
    // Convex positions of several sizes, including the odd case.
    for n in [2usize, 5, 8, 13] {
        let ps = conmatch::instances::convex_position(n, 3, 1 << 20).unwrap();
        let hull = conmatch::geom::convex_hull(ps.points(), &(0..n).collect::<Vec<_>>());
        let m = antipodal_connected_matching(&hull);
        assert_eq!(m.len(), n / 2);
        assert!(is_matching(&ps, &m));
        assert!(is_connected(&ps, &m));
    }
}

#[test]
fn uncolored_pipeline_meets_bound_on_random_sets() {
    let mut rng = StdRng::seed_from_u64(31415);
    for _ in 0..150 {
        let n = rng.gen_range(2usize..=120);
        let seed = rng.gen::<u64>();
        let ps = random_general_position(n, seed, 8192).unwrap();
        let (m, report) = connected_matching_uncolored(&ps).expect("pipeline runs");
        assert!(is_matching(&ps, &m), "n={n} seed={seed}");
        assert!(is_connected(&ps, &m), "n={n} seed={seed}");
        assert_eq!(report.achieved, m.len());
        assert!(
            check_bound_report(&report),
            "n={n} seed={seed}: {report}"
        );
    }
}

#[test]
fn uncolored_pipeline_vs_oracle_small() {
    let mut rng = StdRng::seed_from_u64(2718);
    for _ in 0..60 {
        let n = rng.gen_range(2usize..=12);
        let seed = rng.gen::<u64>();
        let ps = random_general_position(n, seed, 2048).unwrap();
        let (m, _) = connected_matching_uncolored(&ps).unwrap();
        let (best, _) = oracle_max_connected_matching(&ps).unwrap();
        assert!(
            m.len() <= best,
            "pipeline exceeded the exhaustive optimum?! n={n} seed={seed}"
        );
    }
}

#[test]
fn deep_matching_meets_depth_bound() {
    let mut rng = StdRng::seed_from_u64(999);
    for _ in 0..80 {
        let n = rng.gen_range(2usize..=60);
        let seed = rng.gen::<u64>();
        let ps = random_general_position(n, seed, 4096).unwrap();
        let (m, report) = deep_point_matching(&ps).unwrap();
        let depth = (0..n).map(|i| brute_depth(ps.points(), i)).max().unwrap();
        assert!(is_matching(&ps, &m) && is_connected(&ps, &m), "n={n} seed={seed}");
        assert!(
            m.len() >= depth,
            "n={n} seed={seed}: matching {} below max depth {depth}",
            m.len()
        );
        assert!(check_bound_report(&report));
    }
    // Convex position: depth 0 everywhere, still one edge returned.
    let ps = conmatch::instances::convex_position(8, 1, 1 << 20).unwrap();
    let (m, _) = deep_point_matching(&ps).unwrap();
    assert_eq!(m.len(), 1);
}

#[test]
fn deep_matching_auxiliary_edges_cross_the_anchor_edge() {
    let ps = conmatch::instances::hex_center().unwrap();
    let (m, report) = deep_point_matching(&ps).unwrap();
    // depth 2 for the hexagon-plus-center realization (the maximum for n=7)
    assert_eq!(report.guaranteed, conmatch::Rat::from_integer(2));
    assert!(m.len() >= 2);
    let edges = m.edges();
    let (p, a) = edges[0];
    for &(x, y) in &edges[1..] {
        assert!(conmatch::geom::segments_intersect(
            ps.point(x),
            ps.point(y),
            ps.point(p),
            ps.point(a)
        ));
    }
}

#[test]
fn greedy_matching_is_bichromatic_and_complete() {
    // Directed example: A colors {0,0,1}, B colors {1,2,2}.
    let pts: Vec<Point> = (0..6).map(|i| Point::new(i, i * i + 1)).collect();
    let ps = PointSet::with_colors(pts, vec![0, 0, 1, 1, 2, 2], 3).unwrap();
    let m = greedy_polychromatic_matching(&[0, 1, 2], &[3, 4, 5], &ps).unwrap();
    assert_eq!(m.len(), 3);
    assert!(is_polychromatic(&ps, &m));

    // |A| = 0 gives the empty matching.
    let m = greedy_polychromatic_matching(&[], &[3, 4], &ps).unwrap();
    assert!(m.is_empty());

    // Random balanced sides complete to min(|A|, |B|).
    let mut rng = StdRng::seed_from_u64(77);
    for c in 2..=6usize {
        let n = rng.gen_range(3 * c..=60.max(3 * c));
        let seed = rng.gen::<u64>();
        let base = random_general_position(n, seed, 4096).unwrap();
        let ps = random_balanced_coloring(&base, c, seed).unwrap();
        let cut = rng.gen_range(1..n);
        let side_a: Vec<usize> = (0..cut).collect();
        let side_b: Vec<usize> = (cut..n).collect();
        match greedy_polychromatic_matching(&side_a, &side_b, &ps) {
            Ok(m) => {
                assert_eq!(m.len(), side_a.len().min(side_b.len()));
                assert!(is_polychromatic(&ps, &m));
            }
            Err(conmatch::Error::InfeasiblePairing) => {
                // legal when one color dominates both sides
            }
            Err(e) => panic!("unexpected error {e}"),
        }
    }

    // The same single color on both sides: infeasible.
    let pts: Vec<Point> = (0..4).map(|i| Point::new(i, i * i + 1)).collect();
    let ps = PointSet::with_colors(pts, vec![0, 0, 1, 1], 2).unwrap();
    assert!(matches!(
        greedy_polychromatic_matching(&[0], &[1], &ps),
        Err(conmatch::Error::InfeasiblePairing)
    ));
}

#[test]
fn colored_pipeline_meets_bounds_at_threshold() {
    for (c, seed) in [(2usize, 1u64), (5, 2), (7, 3), (8, 4), (10, 5)] {
        let n = 60 * c;
        let base = large_general_position(n, seed);
        let ps = random_balanced_coloring(&base, c, seed).unwrap();
        let (m, report) = connected_matching_colored(&ps).expect("pipeline runs");
        assert!(is_matching(&ps, &m));
        assert!(is_connected(&ps, &m));
        assert!(is_polychromatic(&ps, &m));
        assert!(report.binding);
        assert!(
            check_bound_report(&report),
            "c={c} seed={seed}: {report}"
        );
    }
}

#[test]
fn colored_pipeline_below_threshold_still_valid() {
    let mut rng = StdRng::seed_from_u64(13);
    for _ in 0..30 {
        let n = rng.gen_range(4usize..=40);
        let c = rng.gen_range(2usize..=4.min(n));
        let seed = rng.gen::<u64>();
        let base = random_general_position(n, seed, 4096).unwrap();
        let ps = random_balanced_coloring(&base, c, seed).unwrap();
        let (m, report) = connected_matching_colored(&ps).unwrap();
        assert!(!report.binding);
        assert!(is_matching(&ps, &m));
        assert!(is_connected(&ps, &m));
        assert!(is_polychromatic(&ps, &m));
        assert!(check_bound_report(&report));
    }
}

#[test]
fn colored_pipeline_vs_oracle_small() {
    let mut rng = StdRng::seed_from_u64(4321);
    for _ in 0..40 {
        let n = rng.gen_range(4usize..=12);
        let seed = rng.gen::<u64>();
        let base = random_general_position(n, seed, 2048).unwrap();
        let ps = random_balanced_coloring(&base, 2, seed).unwrap();
        let (m, _) = connected_matching_colored(&ps).unwrap();
        let (best, om) = oracle_max_connected_matching(&ps).unwrap();
        assert!(om.is_empty() || is_polychromatic(&ps, &om));
        assert!(m.len() <= best, "n={n} seed={seed}");
    }
}

#[test]
fn pipeline_reports_print_like_reports() {
    let ps = random_general_position(27, 4, 2048).unwrap();
    let (_, report) = connected_matching_uncolored(&ps).unwrap();
    let line = report.to_string();
    assert!(line.contains("n=27") && line.contains("guaranteed=136/27"));
}

/// Every across-segment output edge either crosses uv or lies within A; at
/// tiny sizes the result never beats the exhaustive oracle.
#[test]
fn across_segment_edge_locations_and_small_oracle() {
    let mut rng = StdRng::seed_from_u64(0xAB5E);
    for _ in 0..200 {
        let a = rng.gen_range(0usize..=40);
        let b = rng.gen_range(0usize..=a.min(12));
        let seed = rng.gen::<u64>();
        let (ps, u, v, side_a, side_b) = across_instance(a, b, seed);
        let m = connected_matching_across_segment(u, v, &side_a, &side_b, &ps).unwrap();
        let in_a = |i: usize| side_a.contains(&i);
        for &(x, y) in m.edges() {
            if (x, y) == (u.min(v), u.max(v)) {
                continue;
            }
            let crosses_uv = conmatch::geom::segments_intersect(
                ps.point(x),
                ps.point(y),
                ps.point(u),
                ps.point(v),
            );
            assert!(
                crosses_uv || (in_a(x) && in_a(y)),
                "edge ({x},{y}) neither crosses uv nor stays within A"
            );
        }
        if a <= 8 && ps.len() <= 12 {
            let (best, _) = oracle_max_connected_matching(&ps).unwrap();
            assert!(m.len() <= best, "a={a} b={b} seed={seed}");
        }
    }
}

/// Trivial separating paths for n <= 4: any hull edge works since the bound
/// is zero.
#[test]
fn separating_path_trivial_sizes() {
    use conmatch::separator::separating_path;
    for n in 2..=4usize {
        let ps = random_general_position(n, 77, 1024).unwrap();
        let sep = separating_path(&ps).unwrap();
        assert_eq!(sep.path.len(), 2);
        assert_eq!(sep.side_a.len() + sep.side_b.len(), n - 2);
        assert!(conmatch::verify::check_separator(&ps, &sep, 0));
    }
}

/// Four points with one inside the others' triangle: the depth bound is
/// tight, and one edge is the exact optimum.
#[test]
fn depth_bound_tight_on_four_points() {
    let ps = PointSet::new(vec![
        Point::new(0, 0),
        Point::new(40, 2),
        Point::new(18, 37),
        Point::new(19, 13),
    ])
    .unwrap();
    assert_eq!(brute_depth(ps.points(), 3), 1);
    let (m, report) = deep_point_matching(&ps).unwrap();
    assert_eq!(report.guaranteed, conmatch::Rat::from_integer(1));
    assert_eq!(m.len(), 1);
    let (best, _) = oracle_max_connected_matching(&ps).unwrap();
    assert_eq!(best, 1, "no two disjoint segments of this set cross");
}
