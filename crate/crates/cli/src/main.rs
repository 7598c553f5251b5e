//! `ncbell`: deformed two-mode squeezed states from the command line.
//!
//! Subcommands:
//! - `verify`: run the invariant suite over a (r, theta, eta) grid and
//!   print one pass/fail line per check;
//! - `sweep`: write one CSV row per grid point (inverse-covariance scalars
//!   plus the maximized Bell functional and its commutative gap);
//! - `wigner`: export the Wigner function on a two-axis grid as CSV.
//!
//! Exit codes: 0 success, 1 check or runtime failure, 2 usage/config error.

mod config;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use config::{load_config_file, parse_pairs, FileConfig};
use ncbell::{run_checks, write_sweep_csv, write_wigner_csv, Axis, NCParams, SqueezeSpec, SweepConfig};

#[derive(Parser)]
#[command(name = "ncbell", version, about = "Deformed squeezed states and the Wigner-function Bell-CHSH functional", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite and print a pass/fail table.
    Verify(GridArgs),
    /// Sweep (r, theta, eta) and write one CSV row per grid point.
    Sweep(GridArgs),
    /// Export a Wigner-function grid over two phase-space axes.
    Wigner(WignerArgs),
}

#[derive(Args)]
struct GridArgs {
    /// Flat `key = value` config file; flags below override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Smallest squeezing parameter on the grid.
    #[arg(long)]
    r_min: Option<f64>,
    /// Largest squeezing parameter on the grid.
    #[arg(long)]
    r_max: Option<f64>,
    /// Number of r grid points.
    #[arg(long)]
    r_steps: Option<usize>,
    /// Deformation pairs, "theta:eta[,theta:eta...]".
    #[arg(long)]
    pairs: Option<String>,
    /// RK4 steps for the dynamics-oracle check.
    #[arg(long)]
    ode_steps: Option<usize>,
    /// Tolerance override applied to every verification check.
    #[arg(long)]
    tol: Option<f64>,
    /// Output CSV path (sweep).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WignerArgs {
    /// Squeezing parameter.
    #[arg(long)]
    r: f64,
    /// Position-position deformation constant.
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    /// Momentum-momentum deformation constant.
    #[arg(long, default_value_t = 0.0)]
    eta: f64,
    /// Two axes from {x, px, y, py}, comma separated.
    #[arg(long, default_value = "x,y")]
    axes: String,
    /// Half-width of the square sampling window.
    #[arg(long, default_value_t = 3.0)]
    extent: f64,
    /// Samples per axis.
    #[arg(long, default_value_t = 101)]
    samples: usize,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

fn build_sweep_config(args: &GridArgs) -> Result<SweepConfig, String> {
    let file = match &args.config {
        Some(path) => load_config_file(path)?,
        None => FileConfig::default(),
    };
    let flag_pairs = args
        .pairs
        .as_deref()
        .map(parse_pairs)
        .transpose()?;
    let defaults = SweepConfig::default();
    let config = SweepConfig {
        r_min: args.r_min.or(file.r_min).unwrap_or(defaults.r_min),
        r_max: args.r_max.or(file.r_max).unwrap_or(defaults.r_max),
        r_steps: args.r_steps.or(file.r_steps).unwrap_or(defaults.r_steps),
        theta_eta_pairs: flag_pairs
            .or(file.pairs)
            .unwrap_or_else(|| defaults.theta_eta_pairs.clone()),
        ode_steps: args
            .ode_steps
            .or(file.ode_steps)
            .unwrap_or(defaults.ode_steps),
        tolerance: args.tol.or(file.tol),
        output_path: args
            .out
            .clone()
            .or(file.out)
            .unwrap_or(defaults.output_path),
    };
    config.validate().map_err(|e| e.to_string())?;
    Ok(config)
}

fn run_verify(args: &GridArgs) -> Result<ExitCode, ExitCode> {
    let config = usage(build_sweep_config(args))?;
    let report = runtime(run_checks(&config))?;
    print!("{}", report.table());
    if report.all_pass() {
        println!("all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAILED");
        Ok(ExitCode::from(1))
    }
}

/// Relative output paths land under $NCBELL_OUT_DIR when it is set; this is
/// the only environment variable the tool reads.
fn resolve_out(path: PathBuf) -> PathBuf {
    match std::env::var_os("NCBELL_OUT_DIR") {
        Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
        _ => path,
    }
}

fn run_sweep(args: &GridArgs) -> Result<ExitCode, ExitCode> {
    let mut config = usage(build_sweep_config(args))?;
    config.output_path = resolve_out(config.output_path);
    let rows = runtime(write_sweep_csv(&config))?;
    let worst_gap = rows.iter().fold(0.0_f64, |acc, row| acc.max(row.gap.abs()));
    println!(
        "wrote {} rows to {} (max |gap| = {worst_gap:.3e})",
        rows.len(),
        config.output_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn run_wigner(args: &WignerArgs) -> Result<ExitCode, ExitCode> {
    let parsed: Result<(SqueezeSpec, NCParams, (Axis, Axis)), String> = (|| {
        let spec = SqueezeSpec::new(args.r).map_err(|e| e.to_string())?;
        let p = NCParams::new(args.theta, args.eta).map_err(|e| e.to_string())?;
        let (first, second) = args
            .axes
            .split_once(',')
            .ok_or_else(|| format!("axes {:?} are not of the form a,b", args.axes))?;
        let axes = (
            Axis::from_str(first.trim()).map_err(|e| e.to_string())?,
            Axis::from_str(second.trim()).map_err(|e| e.to_string())?,
        );
        if axes.0 == axes.1 {
            return Err(format!("axes must differ, got {:?}", args.axes));
        }
        if args.samples < 2 {
            return Err(format!("need at least 2 samples per axis, got {}", args.samples));
        }
        if !args.extent.is_finite() || args.extent <= 0.0 {
            return Err(format!("extent must be positive and finite, got {}", args.extent));
        }
        Ok((spec, p, axes))
    })();
    let (spec, p, axes) = usage(parsed)?;
    let out = resolve_out(args.out.clone());
    let count = runtime(write_wigner_csv(
        &spec,
        &p,
        axes,
        args.extent,
        args.samples,
        &out,
    ))?;
    println!("wrote {count} samples to {}", out.display());
    Ok(ExitCode::SUCCESS)
}

/// Config/usage problems: report and exit 2.
fn usage<T, E: std::fmt::Display>(result: Result<T, E>) -> Result<T, ExitCode> {
    result.map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

/// Runtime problems (I/O and friends): report and exit 1.
fn runtime<T, E: std::fmt::Display>(result: Result<T, E>) -> Result<T, ExitCode> {
    result.map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Wigner(args) => run_wigner(args),
    };
    match outcome {
        Ok(code) => code,
        Err(code) => code,
    }
}
