//! Subcommand implementations. Each returns the process exit code: 0 for
//! success, 1 for a failed verification, 2 for usage and precondition
//! errors (mapped by `main` from `Err`).

use crate::bench::{doubling_ratios, run_bench, BenchMethod};
use crate::io;
use crate::svg::render_svg;
use anyhow::{anyhow, bail, Context, Result};
use conmatch::instances::{generate, oracle_max_connected_matching, GenKind, GenSpec, ORACLE_LIMIT};
use conmatch::matching::{
    connected_matching_colored, connected_matching_uncolored, deep_point_matching,
};
use conmatch::verify::{is_connected, is_matching, is_polychromatic};
use conmatch::{BoundReport, Matching, PointSet};
use std::path::{Path, PathBuf};

/// Point sets at or below this size are always checked for general position
/// on load; larger ones only when the caller does not pass --trust-gp (the
/// check is O(n^2 log n)).
const GP_CHECK_NOTE: usize = 5000;

pub fn cmd_gen(
    kind: GenKind,
    n: usize,
    c: usize,
    seed: u64,
    coord_max: i64,
    out: Option<&Path>,
) -> Result<i32> {
    let spec = GenSpec {
        kind,
        n,
        c,
        seed,
        coord_max,
    };
    let ps = generate(&spec)?;
    write_or_print(out, &io::format_points(&ps))?;
    Ok(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchMethod {
    Auto,
    Uncolored,
    Deep,
    Colored,
}

pub fn cmd_match(
    points: &Path,
    method: MatchMethod,
    trust_gp: bool,
    out: Option<&Path>,
) -> Result<i32> {
    let ps = io::read_points(points)?;
    ensure_general_position(&ps, trust_gp)?;

    let mut candidates: Vec<(Matching, BoundReport)> = Vec::new();
    match method {
        MatchMethod::Uncolored => candidates.push(connected_matching_uncolored(&ps)?),
        MatchMethod::Deep => candidates.push(deep_point_matching(&ps)?),
        MatchMethod::Colored => {
            if !ps.is_colored() {
                bail!("--method colored needs a colored points file");
            }
            candidates.push(connected_matching_colored(&ps)?);
        }
        MatchMethod::Auto => {
            if ps.is_colored() {
                candidates.push(connected_matching_colored(&ps)?);
            } else {
                candidates.push(connected_matching_uncolored(&ps)?);
                candidates.push(deep_point_matching(&ps)?);
            }
        }
    }

    for (_, report) in &candidates {
        println!("# {report}");
    }
    let (matching, report) = candidates
        .into_iter()
        .max_by_key(|(m, _)| m.len())
        .expect("at least one method ran");
    println!("# selected theorem={:?} size={}", report.theorem, matching.len());

    // The output must satisfy the verifiers it will be checked with.
    if !is_matching(&ps, &matching)
        || !is_connected(&ps, &matching)
        || (ps.is_colored() && method == MatchMethod::Colored && !is_polychromatic(&ps, &matching))
    {
        bail!("internal error: constructed matching failed verification");
    }
    write_or_print(out, &io::format_matching(&matching))?;
    Ok(0)
}

pub fn cmd_verify(points: &Path, matching: &Path) -> Result<i32> {
    let ps = io::read_points(points)?;
    let m = io::read_matching(matching)?;

    for &(i, j) in m.edges() {
        if i >= ps.len() || j >= ps.len() {
            println!("invalid: edge ({i}, {j}) out of range for n={}", ps.len());
            return Ok(1);
        }
    }
    if !is_matching(&ps, &m) {
        let mut seen = vec![false; ps.len()];
        for &(i, j) in m.edges() {
            for v in [i, j] {
                if seen[v] {
                    println!("invalid: endpoint {v} is shared by two edges");
                    return Ok(1);
                }
                seen[v] = true;
            }
        }
        println!("invalid: not a matching");
        return Ok(1);
    }
    if !is_connected(&ps, &m) {
        println!("invalid: the segment intersection graph is disconnected");
        return Ok(1);
    }
    let poly = if ps.is_colored() {
        if let Some(&(i, j)) = m
            .edges()
            .iter()
            .find(|&&(i, j)| ps.color(i) == ps.color(j))
        {
            println!(
                "invalid: edge ({i}, {j}) is monochromatic (color {})",
                ps.color(i)
            );
            return Ok(1);
        }
        "true"
    } else {
        "n/a"
    };
    println!("size={} connected=true polychromatic={poly}", m.len());
    Ok(0)
}

pub fn cmd_oracle(points: &Path) -> Result<i32> {
    let ps = io::read_points(points)?;
    if ps.len() > ORACLE_LIMIT {
        bail!(
            "oracle limited to n <= {ORACLE_LIMIT} (got n = {}); the search is exhaustive",
            ps.len()
        );
    }
    let (size, m) = oracle_max_connected_matching(&ps)?;
    println!("# oracle exact maximum connected matching");
    print!("{}", io::format_matching(&m));
    debug_assert_eq!(size, m.len());
    Ok(0)
}

pub fn cmd_svg(
    points: &Path,
    matching: Option<&Path>,
    separator: Option<&Path>,
    out: &Path,
) -> Result<i32> {
    let ps = io::read_points(points)?;
    let m = matching.map(io::read_matching).transpose()?;
    let sep = separator
        .map(|p| -> Result<Vec<usize>> {
            let text = std::fs::read_to_string(p)
                .with_context(|| format!("reading {}", p.display()))?;
            io::parse_path(&text)
        })
        .transpose()?;
    for idx in sep.iter().flatten() {
        if *idx >= ps.len() {
            bail!("separator vertex {idx} out of range");
        }
    }
    let svg = render_svg(&ps, m.as_ref(), sep.as_deref());
    std::fs::write(out, svg).with_context(|| format!("writing {}", out.display()))?;
    Ok(0)
}

pub fn cmd_bench(method: BenchMethod, ns: &[usize], seeds: &[u64], c: usize) -> Result<i32> {
    if ns.is_empty() || seeds.is_empty() {
        bail!("--n-list and --seeds must be nonempty");
    }
    let rows = run_bench(method, ns, seeds, c)?;
    println!(
        "{:>10} {:>12} {:>10} {:>12} {:>12}",
        "n", "mean_size", "required", "mean_ms", "median_ms"
    );
    for row in &rows {
        println!(
            "{:>10} {:>12.1} {:>10} {:>12.3} {:>12.3}",
            row.n,
            row.mean_size,
            row.required,
            row.mean_seconds * 1e3,
            row.median_seconds * 1e3
        );
    }
    let ratios = doubling_ratios(&rows);
    if !ratios.is_empty() {
        let formatted: Vec<String> = ratios.iter().map(|r| format!("{r:.2}")).collect();
        println!("time ratios between consecutive sizes: {}", formatted.join(", "));
    }
    Ok(0)
}

fn ensure_general_position(ps: &PointSet, trust_gp: bool) -> Result<()> {
    if trust_gp && ps.len() > GP_CHECK_NOTE {
        return Ok(());
    }
    if !ps.is_general_position() {
        return Err(anyhow!(conmatch::Error::NotGeneralPosition));
    }
    Ok(())
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

pub fn parse_kind(s: &str) -> Result<GenKind> {
    Ok(match s {
        "windmill3" => GenKind::Windmill3,
        "windmill4" => GenKind::Windmill4,
        "random" => GenKind::Random,
        "convex" => GenKind::Convex,
        "hexcenter" => GenKind::HexCenter,
        other => bail!("unknown kind `{other}`"),
    })
}

pub fn default_out(points: &Path, ext: &str) -> PathBuf {
    points.with_extension(ext)
}
