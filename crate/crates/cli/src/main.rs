//! `sidedisk` command-line tool.
//!
//! Exit codes: 0 verified, 1 a check failed (counterexample in the report),
//! 2 usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use sidedisk_core::extremal::{harness, star, triangle_config, HarnessParams};
use sidedisk_core::oracles::{run_claim, BatchParams, LemmaClaim};
use sidedisk_core::{analyze, render_svg, AnalysisReport, ConfigFile, GreatPolygon, RenderSpec, Tolerance};

#[derive(Parser, Debug)]
#[command(
    name = "sidedisk",
    version,
    about = "Side disks of a circle partitioned into arcs"
)]
struct Cli {
    /// Classification tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_geom: f64,
    /// Self-consistency tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol_strict: f64,
    /// Master seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Pretty-print JSON output.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,
    /// Compact JSON output (the default).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify every side-disk pair of a configuration and check the bounds.
    Analyze { config: PathBuf },
    /// Randomized check of the bounds, non-crossing and corner claims.
    Harness {
        /// Vertex-count range, inclusive, e.g. `3..12`.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Run one claim over seeded random cases.
    Lemma {
        /// One of 1, 2a, 2b, incenter, collinear, step1, step2.
        which: LemmaClaim,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Sample points per triple for claim 1.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Polygon size for step2.
        #[arg(long, default_value_t = 8)]
        step2_n: usize,
    },
    /// Equal-arc configuration (attains the upper bound).
    Star { n: usize },
    /// One-hub configuration (attains the lower bound).
    Triangle {
        n: usize,
        /// Length of each short arc; searched automatically when omitted.
        #[arg(long)]
        s: Option<f64>,
    },
    /// Draw a configuration as SVG.
    Render {
        config: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[command(flatten)]
        view: ViewArgs,
    },
}

#[derive(Args, Debug)]
struct ViewArgs {
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 800)]
    height: u32,
    #[arg(long)]
    no_disks: bool,
    #[arg(long)]
    no_chords: bool,
    #[arg(long)]
    no_corners: bool,
    #[arg(long)]
    no_labels: bool,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo = lo
        .trim()
        .parse::<usize>()
        .map_err(|e| format!("bad range start: {e}"))?;
    let hi = hi
        .trim()
        .parse::<usize>()
        .map_err(|e| format!("bad range end: {e}"))?;
    Ok((lo, hi))
}

enum Failure {
    /// Bad input; exit 2.
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit<T: Serialize>(value: &T, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("report serializes");
    println!("{text}");
}

fn load(path: &PathBuf) -> Result<GreatPolygon, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(ConfigFile::from_json(&text)?.to_polygon()?)
}

#[derive(Serialize)]
struct Witness {
    config: ConfigFile,
    expected_d: usize,
    analysis: AnalysisReport,
}

fn witness(poly: GreatPolygon, expected_d: usize, tol: Tolerance, pretty: bool) -> Result<bool, Failure> {
    let analysis = analyze(&poly, tol)?;
    let ok = analysis.verified() && analysis.d == expected_d;
    emit(
        &Witness {
            config: ConfigFile::from_polygon(&poly),
            expected_d,
            analysis,
        },
        pretty,
    );
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let tol = Tolerance::new(cli.tol_geom, cli.tol_strict)?;
    let pretty = cli.pretty;
    match cli.command {
        Command::Analyze { config } => {
            let report = analyze(&load(&config)?, tol)?;
            emit(&report, pretty);
            Ok(report.verified())
        }
        Command::Harness { n: (lo, hi), trials } => {
            let report = harness(&HarnessParams::new(lo, hi, trials, cli.seed, tol))?;
            emit(&report, pretty);
            Ok(report.violations() == 0)
        }
        Command::Lemma {
            which,
            trials,
            samples,
            step2_n,
        } => {
            let params = BatchParams {
                trials,
                seed: cli.seed,
                tol,
                samples,
                step2_n,
            };
            let report = run_claim(which, &params)?;
            emit(&report, pretty);
            Ok(report.passed())
        }
        Command::Star { n } => {
            let (poly, d) = star(n)?;
            witness(poly, d, tol, pretty)
        }
        Command::Triangle { n, s } => {
            let (poly, d) = triangle_config(n, s)?;
            witness(poly, d, tol, pretty)
        }
        Command::Render { config, output, view } => {
            let spec = RenderSpec {
                width: view.width,
                height: view.height,
                show_disks: !view.no_disks,
                show_chords: !view.no_chords,
                show_corners: !view.no_corners,
                show_labels: !view.no_labels,
            };
            let svg = render_svg(&load(&config)?, &spec, tol)?;
            fs::write(&output, svg).map_err(|e| Failure::Usage(format!("{}: {e}", output.display())))?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
