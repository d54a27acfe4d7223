//! `trigspline`: tabulate trigonometric splines, kernels and B-splines as CSV,
//! reproduce the figure bundles, and run the verification suite.

mod error;
mod figures;
mod naming;
mod output;
mod source;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trigspline::suite::{run_suite, SuiteOptions, SuiteReport, SUP_SAMPLES};
use trigspline::{
    build_bspline_first_kind, build_bspline_second_kind, build_kernel_first_kind,
    build_kernel_second_kind, build_spline, GridId, Parity, SplineConfig, Truncation,
    DEFAULT_TERMS, EXAMPLE_DATA,
};

use error::CliError;
use source::{NamedFn, Source};

const DEFAULT_SAMPLES: usize = 1024;

#[derive(Debug, Parser)]
#[command(
    name = "trigspline",
    version,
    about = "Trigonometric interpolation splines with Riemann convergence multipliers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate the interpolation spline St(I1, I2, r, t).
    Build(BuildArgs),
    /// Tabulate a kernel of the first (KR0/KR1) or second (KR0*/KR1*) kind.
    Kernel(KernelArgs),
    /// Tabulate a B-spline of the first (BR) or second (BR*) kind.
    Bspline(BsplineArgs),
    /// Run the verification suite and write a JSON report.
    Verify(VerifyArgs),
    /// Write every curve of one figure.
    Figure(FigureArgs),
}

fn parse_grid(s: &str) -> Result<GridId, String> {
    let v: u8 = s
        .parse()
        .map_err(|_| format!("expected 0 or 1, got {s:?}"))?;
    GridId::try_from(v).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct DataArgs {
    /// Comma-separated sample values; their count sets N.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    data: Option<Vec<f64>>,
    /// JSON file of the form {"N": 9, "values": [...]}.
    #[arg(long = "data-file")]
    data_file: Option<PathBuf>,
    /// Named test function sampled on the interpolation grid (needs --N).
    #[arg(long = "fn", value_enum)]
    function: Option<NamedFn>,
}

#[derive(Debug, Args)]
struct Common {
    /// Number of nodes (odd, at least 3).
    #[arg(long = "N")]
    nodes: Option<usize>,
    /// Terms kept from each aliasing chain.
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    terms: usize,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct CurveOpts {
    /// Points per period in CSV output.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Stitching grid.
    #[arg(long, value_parser = parse_grid, default_value = "0")]
    i1: GridId,
    /// Interpolation grid.
    #[arg(long, value_parser = parse_grid, default_value = "0")]
    i2: GridId,
    /// Spline order.
    #[arg(long)]
    r: u32,
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    curve: CurveOpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Debug, Args)]
struct KernelArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Kernel parity; for the first kind it must agree with --r.
    #[arg(long, value_enum)]
    parity: Option<ParityArg>,
    #[arg(long, value_parser = parse_grid, default_value = "0")]
    i1: GridId,
    #[arg(long, value_parser = parse_grid, default_value = "0")]
    i2: GridId,
    /// Spline order; required for the first kind.
    #[arg(long)]
    r: Option<u32>,
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    curve: CurveOpts,
}

#[derive(Debug, Args)]
struct BsplineArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, value_parser = parse_grid, default_value = "0")]
    i1: GridId,
    #[arg(long, value_parser = parse_grid, default_value = "0")]
    i2: GridId,
    #[arg(long)]
    r: u32,
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    curve: CurveOpts,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    common: Common,
    /// Sample points for sup-norm residuals.
    #[arg(long, default_value_t = SUP_SAMPLES)]
    samples: usize,
}

#[derive(Debug, Args)]
struct FigureArgs {
    /// Figure number, 1 to 9.
    id: Option<u8>,
    #[arg(long = "figure", conflicts_with = "id")]
    figure: Option<u8>,
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    curve: CurveOpts,
}

fn truncation(terms: usize) -> Result<Truncation, CliError> {
    Ok(Truncation::new(terms)?)
}

fn check_samples(samples: usize) -> Result<(), CliError> {
    if samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    Ok(())
}

fn required_source(data: &DataArgs, nodes: Option<usize>) -> Result<Source, CliError> {
    Source::resolve(
        data.data.as_deref(),
        data.data_file.as_deref(),
        data.function,
        nodes,
    )?
    .ok_or_else(|| CliError::Usage("one of --data, --data-file, --fn is required".into()))
}

fn emit(
    dir: &Path,
    stem: &str,
    series: &trigspline::HarmonicSeries,
    samples: usize,
) -> Result<(), CliError> {
    output::ensure_dir(dir)?;
    let path = output::write_curve(dir, stem, series, samples)?;
    println!("{}", path.display());
    Ok(())
}

fn run_build(args: &BuildArgs) -> Result<(), CliError> {
    check_samples(args.curve.samples)?;
    let src = required_source(&args.data, args.common.nodes)?;
    let cfg = SplineConfig::new(
        args.i1,
        args.i2,
        args.r,
        src.nodes(),
        truncation(args.common.terms)?,
    )?;
    let series = build_spline(&cfg, &src.on(args.i2)?)?;
    emit(
        &args.common.out,
        &naming::spline(&cfg),
        &series,
        args.curve.samples,
    )
}

fn run_kernel(args: &KernelArgs) -> Result<(), CliError> {
    check_samples(args.curve.samples)?;
    let src = required_source(&args.data, args.common.nodes)?;
    let trunc = truncation(args.common.terms)?;
    let samples = src.on(args.i2)?;
    let (stem, series) = match args.kind {
        Kind::First => {
            let r = args
                .r
                .ok_or_else(|| CliError::Usage("first-kind kernels need --r".into()))?;
            if let Some(p) = args.parity {
                if Parity::from(p) != Parity::of(r) {
                    return Err(CliError::Usage(format!(
                        "--parity {} disagrees with --r {r}",
                        Parity::from(p)
                    )));
                }
            }
            let cfg = SplineConfig::new(args.i1, args.i2, r, src.nodes(), trunc)?;
            (
                naming::kernel_first(&cfg),
                build_kernel_first_kind(&cfg, &samples)?,
            )
        }
        Kind::Second => {
            let parity = match (args.parity, args.r) {
                (Some(p), _) => p.into(),
                (None, Some(r)) => Parity::of(r),
                (None, None) => {
                    return Err(CliError::Usage(
                        "second-kind kernels need --parity or --r".into(),
                    ))
                }
            };
            (
                naming::kernel_second(args.i1, args.i2, parity),
                build_kernel_second_kind(args.i1, args.i2, parity, &samples, trunc)?,
            )
        }
    };
    emit(&args.common.out, &stem, &series, args.curve.samples)
}

fn run_bspline(args: &BsplineArgs) -> Result<(), CliError> {
    check_samples(args.curve.samples)?;
    let nodes = args
        .common
        .nodes
        .ok_or_else(|| CliError::Usage("bspline needs --N".into()))?;
    let trunc = truncation(args.common.terms)?;
    let (stem, series) = match args.kind {
        Kind::First => (
            naming::bspline_first(args.r),
            build_bspline_first_kind(args.r, nodes, trunc)?,
        ),
        Kind::Second => (
            naming::bspline_second(args.i1, args.i2, args.r),
            build_bspline_second_kind(args.i1, args.i2, args.r, nodes, trunc)?,
        ),
    };
    emit(&args.common.out, &stem, &series, args.curve.samples)
}

fn print_report(report: &SuiteReport) {
    println!("N = {}, M = {}", report.nodes, report.terms);
    println!(
        "{:<3} {:<62} {:>12} {:>10}  result",
        "#", "check", "residual", "tolerance"
    );
    for c in &report.checks {
        println!(
            "{:<3} {:<62} {:>12.3e} {:>10.0e}  {}",
            c.criterion,
            c.name,
            c.residual,
            c.tolerance,
            if c.passed { "pass" } else { "FAIL" }
        );
    }
    println!();
    println!("truncation sensitivity");
    println!(
        "{:>8} {:>14} {:>12} {:>12} {:>12} {:>12} {:>12}",
        "M", "interpolation", "BR(1)-hat", "linear", "cubic", "stated", "structural"
    );
    for row in &report.sensitivity {
        println!(
            "{:>8} {:>14.3e} {:>12.3e} {:>12.3e} {:>12.3e} {:>12.3e} {:>12.3e}",
            row.terms,
            row.interpolation,
            row.hat,
            row.linear_spline,
            row.cubic_spline,
            row.identities_stated,
            row.identities_structural
        );
    }
}

fn run_verify(args: &VerifyArgs) -> Result<(), CliError> {
    if args.samples < 2 {
        return Err(CliError::Usage("--samples must be at least 2".into()));
    }
    let src = Source::resolve(
        args.data.data.as_deref(),
        args.data.data_file.as_deref(),
        args.data.function,
        args.common.nodes,
    )?;
    let data = match src {
        Some(s) => s.values()?,
        None => match args.common.nodes {
            Some(n) if n != EXAMPLE_DATA.len() => {
                return Err(CliError::Usage(format!(
                    "the default data has {} values; pass --data or --fn for N = {n}",
                    EXAMPLE_DATA.len()
                )))
            }
            _ => EXAMPLE_DATA.to_vec(),
        },
    };
    let report = run_suite(&SuiteOptions {
        data,
        trunc: truncation(args.common.terms)?,
        samples: args.samples,
    })?;
    print_report(&report);
    output::ensure_dir(&args.common.out)?;
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Usage(format!("cannot serialize report: {e}")))?;
    let path = output::write_text(&args.common.out, "verify_report.json", &json)?;
    println!("\n{}", path.display());
    match report.failures().count() {
        0 => Ok(()),
        n => Err(CliError::Verification(n)),
    }
}

fn run_figure(args: &FigureArgs) -> Result<(), CliError> {
    check_samples(args.curve.samples)?;
    let id = args
        .id
        .or(args.figure)
        .ok_or_else(|| CliError::Usage("figure id required".into()))?;
    if !figures::FIGURES.contains(&id) {
        return Err(CliError::Usage(format!(
            "unknown figure {id}; expected 1..=9"
        )));
    }
    if let Some(n) = args.common.nodes {
        if n != EXAMPLE_DATA.len() {
            return Err(CliError::Usage(format!(
                "figures use the {}-value example data",
                EXAMPLE_DATA.len()
            )));
        }
    }
    let src = Source::Values(EXAMPLE_DATA.to_vec());
    for curve in figures::curves(id, &src, truncation(args.common.terms)?)? {
        emit(
            &args.common.out,
            &curve.stem,
            &curve.series,
            args.curve.samples,
        )?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(a) => run_build(a),
        Command::Kernel(a) => run_kernel(a),
        Command::Bspline(a) => run_bspline(a),
        Command::Verify(a) => run_verify(a),
        Command::Figure(a) => run_figure(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
