use anyhow::Result;
use clap::{Parser, Subcommand};
use conmatch_cli::bench::BenchMethod;
use conmatch_cli::commands::{
    cmd_bench, cmd_gen, cmd_match, cmd_oracle, cmd_svg, cmd_verify, parse_kind, MatchMethod,
};
use std::path::PathBuf;
use std::process::ExitCode;

/// Connected straight-line matchings for planar point sets: generation,
/// construction, verification, exhaustive small-n optima, benchmarks, and
/// SVG figures.
#[derive(Parser)]
#[command(name = "conmatch", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point set (windmill3, windmill4, random, convex, hexcenter).
    Gen {
        /// Instance family.
        #[arg(long)]
        kind: String,
        /// Number of points.
        #[arg(long)]
        n: usize,
        /// Colors; 0 means uncolored (windmill4 requires 2).
        #[arg(long, default_value_t = 0)]
        c: usize,
        /// RNG seed; defaults to $CM_SEED, then 1.
        #[arg(long)]
        seed: Option<u64>,
        /// Coordinate bound.
        #[arg(long, default_value_t = 1 << 30)]
        coord_max: i64,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute a connected matching with its guarantee report.
    Match {
        points: PathBuf,
        /// auto | uncolored | deep | colored
        #[arg(long, default_value = "auto")]
        method: String,
        /// Skip the O(n^2 log n) general-position check on large inputs.
        #[arg(long)]
        trust_gp: bool,
        /// Matching output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a matching file: validity, connectivity, polychromaticity.
    Verify { points: PathBuf, matching: PathBuf },
    /// Exact maximum connected matching by exhaustive search (n <= 14).
    Oracle { points: PathBuf },
    /// Emit an SVG figure of points, matching, and separator path.
    Svg {
        points: PathBuf,
        #[arg(long)]
        matching: Option<PathBuf>,
        /// File holding separator path vertices (drawn dashed).
        #[arg(long)]
        separator: Option<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Wall-clock scaling of the pipelines over generated instances.
    Bench {
        /// Comma-separated instance sizes.
        #[arg(long, default_value = "10000,20000,40000")]
        n_list: String,
        /// Comma-separated seeds.
        #[arg(long, default_value = "1,2,3")]
        seeds: String,
        /// uncolored | colored | deep
        #[arg(long, default_value = "uncolored")]
        method: String,
        /// Colors for the colored method.
        #[arg(long, default_value_t = 2)]
        c: usize,
    },
}

fn default_seed() -> u64 {
    std::env::var("CM_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1)
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| Ok(t.trim().parse::<T>()?))
        .collect()
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen {
            kind,
            n,
            c,
            seed,
            coord_max,
            out,
        } => cmd_gen(
            parse_kind(&kind)?,
            n,
            c,
            seed.unwrap_or_else(default_seed),
            coord_max,
            out.as_deref(),
        ),
        Command::Match {
            points,
            method,
            trust_gp,
            out,
        } => {
            let method = match method.as_str() {
                "auto" => MatchMethod::Auto,
                "uncolored" => MatchMethod::Uncolored,
                "deep" => MatchMethod::Deep,
                "colored" => MatchMethod::Colored,
                other => anyhow::bail!("unknown method `{other}`"),
            };
            cmd_match(&points, method, trust_gp, out.as_deref())
        }
        Command::Verify { points, matching } => cmd_verify(&points, &matching),
        Command::Oracle { points } => cmd_oracle(&points),
        Command::Svg {
            points,
            matching,
            separator,
            out,
        } => cmd_svg(&points, matching.as_deref(), separator.as_deref(), &out),
        Command::Bench {
            n_list,
            seeds,
            method,
            c,
        } => {
            let method = match method.as_str() {
                "uncolored" => BenchMethod::Uncolored,
                "colored" => BenchMethod::Colored,
                "deep" => BenchMethod::Deep,
                other => anyhow::bail!("unknown method `{other}`"),
            };
            cmd_bench(method, &parse_list(&n_list)?, &parse_list(&seeds)?, c)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
