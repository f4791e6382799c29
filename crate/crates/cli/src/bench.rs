//! Wall-clock scaling measurements for the matching pipelines.

use anyhow::{bail, Result};
use conmatch::instances::{large_general_position, random_balanced_coloring};
use conmatch::matching::{
    connected_matching_colored, connected_matching_uncolored, deep_point_matching,
};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMethod {
    Uncolored,
    Colored,
    Deep,
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub mean_size: f64,
    /// Smallest size consistent with the applicable guarantee.
    pub required: i64,
    pub mean_seconds: f64,
    /// Median across seeds; the scaling ratios use this, since a single
    /// instance with a different separator shape can skew the mean.
    pub median_seconds: f64,
}

/// Generate (outside the clock), run the pipeline per seed, and average.
pub fn run_bench(method: BenchMethod, ns: &[usize], seeds: &[u64], c: usize) -> Result<Vec<BenchRow>> {
    if method == BenchMethod::Colored && c < 2 {
        bail!("colored benchmarks need --c >= 2");
    }
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let mut total_size = 0usize;
        let mut times = Vec::with_capacity(seeds.len());
        let mut required = 0i64;
        for &seed in seeds {
            let base = large_general_position(n, seed);
            let ps = if method == BenchMethod::Colored {
                random_balanced_coloring(&base, c, seed)?
            } else {
                base
            };
            let start = Instant::now();
            let (m, report) = match method {
                BenchMethod::Uncolored => connected_matching_uncolored(&ps)?,
                BenchMethod::Colored => connected_matching_colored(&ps)?,
                BenchMethod::Deep => deep_point_matching(&ps)?,
            };
            times.push(start.elapsed().as_secs_f64());
            total_size += m.len();
            required = required.max(report.required().max(0));
        }
        let mean_seconds = times.iter().sum::<f64>() / times.len() as f64;
        times.sort_by(f64::total_cmp);
        rows.push(BenchRow {
            n,
            mean_size: total_size as f64 / seeds.len() as f64,
            required,
            mean_seconds,
            median_seconds: times[times.len() / 2],
        });
    }
    Ok(rows)
}

/// Median-time ratios between consecutive rows (callers pass doubling n
/// lists).
pub fn doubling_ratios(rows: &[BenchRow]) -> Vec<f64> {
    rows.windows(2)
        .map(|w| w[1].median_seconds / w[0].median_seconds.max(1e-9))
        .collect()
}
