//! The extremal windmill configurations: structural properties and
//! oracle-verified tightness of the upper bounds.

mod common;

use common::brute_general_position;
use conmatch::instances::{
    oracle_max_connected_matching, windmill_bicolored, windmill_blade_sizes,
    windmill_parts_disjoint, windmill_secants_separate, windmill_uncolored,
};
use conmatch::verify::{is_connected, is_matching, is_polychromatic};

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

#[test]
fn windmill3_blade_properties() {
    for n in [6usize, 9, 12, 20, 31, 45, 60] {
        let ps = windmill_uncolored(n, 1 << 30).unwrap();
        assert_eq!(ps.len(), n);
        assert!(brute_general_position(ps.points()) || n > 40, "n={n}");
        let sizes = windmill_blade_sizes(n, 3);
        assert!(windmill_parts_disjoint(&ps, &sizes, false), "parts cross at n={n}");
        assert!(windmill_secants_separate(&ps, &sizes), "secant separation fails at n={n}");
    }
}

#[test]
fn windmill3_oracle_tightness() {
    for n in 6..=12 {
        let ps = windmill_uncolored(n, 1 << 30).unwrap();
        let (size, m) = oracle_max_connected_matching(&ps).unwrap();
        assert!(is_matching(&ps, &m) && is_connected(&ps, &m));
        assert_eq!(size, ceil_div(n - 1, 3), "windmill3 n={n}");
    }
}

#[test]
fn windmill4_structure_and_tightness() {
    for n in [8usize, 11, 12, 20, 41, 60] {
        let ps = windmill_bicolored(n, 1 << 30).unwrap();
        assert_eq!(ps.len(), n);
        let sizes = windmill_blade_sizes(n, 4);
        assert!(windmill_parts_disjoint(&ps, &sizes, true), "parts cross at n={n}");
        // balanced two-coloring
        let blue = (0..n).filter(|&i| ps.color(i) == 0).count();
        let red = n - blue;
        assert!(blue.abs_diff(red) <= 1, "n={n}: {blue}/{red}");
    }
    for n in 6..=12 {
        let ps = windmill_bicolored(n, 1 << 30).unwrap();
        let (size, m) = oracle_max_connected_matching(&ps).unwrap();
        assert!(is_matching(&ps, &m) && is_connected(&ps, &m));
        assert!(m.is_empty() || is_polychromatic(&ps, &m));
        assert_eq!(size, ceil_div(n - 1, 4), "windmill4 n={n}");
    }
}

#[test]
fn windmill_rejects_undersized_requests() {
    assert!(windmill_uncolored(2, 1 << 30).is_err());
    assert!(windmill_bicolored(3, 1 << 30).is_err());
    // Coordinate budget too small for the construction.
    assert!(windmill_uncolored(9, 1000).is_err());
}

/// Removing any point never increases the oracle optimum.
#[test]
fn oracle_monotone_under_deletion() {
    use conmatch::instances::random_general_position;
    use conmatch::PointSet;
    for seed in 0..6u64 {
        let ps = random_general_position(8, seed ^ 0xdead, 1024).unwrap();
        let (full, _) = oracle_max_connected_matching(&ps).unwrap();
        for drop in 0..ps.len() {
            let remaining: Vec<_> = (0..ps.len())
                .filter(|&i| i != drop)
                .map(|i| ps.point(i))
                .collect();
            let sub = PointSet::new(remaining).unwrap();
            let (smaller, _) = oracle_max_connected_matching(&sub).unwrap();
            assert!(full >= smaller, "seed {seed}, dropped {drop}");
        }
    }
}
