//! Deterministic parameter sweeps over (r, theta, eta) and Wigner-function
//! grid exports.
//!
//! Grid points are independent, so evaluation runs on rayon when the
//! `parallel` feature is enabled (the default); collection preserves grid
//! order, making output identical to the sequential path. Floats serialize
//! with 17 significant digits so every double round-trips exactly, and CSV
//! files are written via write-then-rename so no partial file survives a
//! failure.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::bell::bell_report;
use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::phase_space::{NCParams, PhaseVector};
use crate::squeeze::{covariance_of, inv_cov_params, squeeze_nc, SqueezeSpec, MAX_SQUEEZING};

/// Exact header line of sweep CSV output.
pub const SWEEP_HEADER: &str = "r,theta,eta,n,m,d,c,t1,t2,i_opt,b_opt,b_comm,gap,nonlocal";

/// Grid description shared by the sweep and verification entry points.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub r_min: f64,
    pub r_max: f64,
    /// Number of r grid points (1 pins the grid to r_min).
    pub r_steps: usize,
    /// (theta, eta) pairs, each with theta*eta < 1.
    pub theta_eta_pairs: Vec<(f64, f64)>,
    /// RK4 step count for the dynamics-oracle check.
    pub ode_steps: usize,
    /// Optional global tolerance override for verification; `None` keeps
    /// each check's own threshold.
    pub tolerance: Option<f64>,
    pub output_path: PathBuf,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            r_min: 0.05,
            r_max: 2.0,
            r_steps: 40,
            theta_eta_pairs: vec![
                (0.0, 0.0),
                (0.1, 0.1),
                (0.2, 0.1),
                (0.5, 0.5),
                (0.9, 0.9),
                (1e-3, 1e-6),
            ],
            ode_steps: crate::oracle::DEFAULT_ODE_STEPS,
            tolerance: None,
            output_path: PathBuf::from("sweep.csv"),
        }
    }
}

impl SweepConfig {
    /// Check every field before any evaluation work starts.
    pub fn validate(&self) -> Result<()> {
        if !self.r_min.is_finite() || !self.r_max.is_finite() {
            return Err(Error::InvalidArgument("non-finite r bounds".into()));
        }
        if self.r_min < 0.0 || self.r_max > MAX_SQUEEZING || self.r_min > self.r_max {
            return Err(Error::InvalidArgument(format!(
                "r grid [{}, {}] outside [0, {MAX_SQUEEZING}]",
                self.r_min, self.r_max
            )));
        }
        if self.r_steps == 0 {
            return Err(Error::InvalidArgument("empty r grid".into()));
        }
        if self.theta_eta_pairs.is_empty() {
            return Err(Error::InvalidArgument("no (theta, eta) pairs".into()));
        }
        for &(theta, eta) in &self.theta_eta_pairs {
            NCParams::new(theta, eta)?;
        }
        if self.ode_steps == 0 {
            return Err(Error::InvalidArgument("ode_steps must be positive".into()));
        }
        if let Some(tol) = self.tolerance {
            if !tol.is_finite() || tol <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "tolerance must be positive, got {tol}"
                )));
            }
        }
        Ok(())
    }

    /// The r grid: `r_steps` evenly spaced values from r_min to r_max,
    /// endpoints exact.
    pub fn r_grid(&self) -> Vec<f64> {
        if self.r_steps == 1 {
            return vec![self.r_min];
        }
        let span = self.r_max - self.r_min;
        (0..self.r_steps)
            .map(|i| {
                if i + 1 == self.r_steps {
                    self.r_max
                } else {
                    self.r_min + span * i as f64 / (self.r_steps - 1) as f64
                }
            })
            .collect()
    }

    /// All (r, theta, eta) points in output order: r outer, pair inner.
    pub fn grid_points(&self) -> Vec<(f64, f64, f64)> {
        let mut points = Vec::with_capacity(self.r_steps * self.theta_eta_pairs.len());
        for r in self.r_grid() {
            for &(theta, eta) in &self.theta_eta_pairs {
                points.push((r, theta, eta));
            }
        }
        points
    }
}

/// One output row of a sweep: the inverse-covariance scalars and the Bell
/// summary at a single (r, theta, eta) point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub r: f64,
    pub theta: f64,
    pub eta: f64,
    pub n: f64,
    pub m: f64,
    pub d: f64,
    pub c: f64,
    pub t1: f64,
    pub t2: f64,
    pub i_opt: f64,
    pub b_opt: f64,
    pub b_comm: f64,
    pub gap: f64,
    pub nonlocal: bool,
}

impl SweepRow {
    pub fn evaluate(r: f64, theta: f64, eta: f64) -> Result<Self> {
        let spec = SqueezeSpec::new(r)?;
        let p = NCParams::new(theta, eta)?;
        let params = inv_cov_params(&spec, &p);
        let bell = bell_report(&spec, &p)?;
        Ok(Self {
            r,
            theta,
            eta,
            n: params.n,
            m: params.m,
            d: params.d,
            c: params.c,
            t1: params.t1,
            t2: params.t2,
            i_opt: bell.i_opt,
            b_opt: bell.b_opt,
            b_comm: bell.b_commutative,
            gap: bell.gap,
            nonlocal: bell.nonlocal,
        })
    }

    pub fn csv_line(&self) -> String {
        let mut line = String::with_capacity(14 * 25);
        for (i, value) in [
            self.r, self.theta, self.eta, self.n, self.m, self.d, self.c, self.t1, self.t2,
            self.i_opt, self.b_opt, self.b_comm, self.gap,
        ]
        .into_iter()
        .enumerate()
        {
            if i > 0 {
                line.push(',');
            }
            let _ = write!(line, "{}", format_float(value));
        }
        let _ = write!(line, ",{}", self.nonlocal);
        line
    }
}

/// 17-significant-digit decimal form; round-trip exact for f64.
pub fn format_float(value: f64) -> String {
    format!("{value:.16e}")
}

/// Evaluate every grid point of `config`, in output order. Uses rayon when
/// the `parallel` feature is on; rows are identical to
/// [`evaluate_grid_seq`] either way.
pub fn evaluate_grid(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    let points = config.grid_points();
    #[cfg(feature = "parallel")]
    {
        points
            .par_iter()
            .map(|&(r, theta, eta)| SweepRow::evaluate(r, theta, eta))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        points
            .iter()
            .map(|&(r, theta, eta)| SweepRow::evaluate(r, theta, eta))
            .collect()
    }
}

/// Sequential reference path for the same grid evaluation.
pub fn evaluate_grid_seq(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    config.validate()?;
    config
        .grid_points()
        .iter()
        .map(|&(r, theta, eta)| SweepRow::evaluate(r, theta, eta))
        .collect()
}

/// Render rows to the full CSV document (header + one line per row).
pub fn render_sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity((rows.len() + 1) * 14 * 25);
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

/// Evaluate the grid and write it to `config.output_path` atomically.
/// Returns the rows for further inspection.
pub fn write_sweep_csv(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    let rows = evaluate_grid(config)?;
    write_atomic(&config.output_path, &render_sweep_csv(&rows))?;
    Ok(rows)
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let mut tmp_name = path.as_os_str().to_owned();
    tmp_name.push(".tmp");
    let tmp = PathBuf::from(tmp_name);
    let io_err = |path: &Path, source: std::io::Error| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    fs::write(&tmp, contents).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io_err(&tmp, e)
    })?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io_err(path, e)
    })
}

/// A phase-space coordinate axis, in the fixed (x, px, y, py) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Px,
    Y,
    Py,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Px => 1,
            Axis::Y => 2,
            Axis::Py => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Px => "px",
            Axis::Y => "y",
            Axis::Py => "py",
        }
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Axis::X),
            "px" => Ok(Axis::Px),
            "y" => Ok(Axis::Y),
            "py" => Ok(Axis::Py),
            other => Err(Error::InvalidArgument(format!(
                "unknown axis {other:?} (expected x, px, y or py)"
            ))),
        }
    }
}

fn wigner_grid_state(
    spec: &SqueezeSpec,
    p: &NCParams,
    axes: (Axis, Axis),
    extent: f64,
    samples: usize,
) -> Result<GaussianState> {
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples per axis, got {samples}"
        )));
    }
    if !extent.is_finite() || extent <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "extent must be positive and finite, got {extent}"
        )));
    }
    if axes.0 == axes.1 {
        return Err(Error::InvalidArgument(format!(
            "axes must differ, got ({}, {})",
            axes.0.name(),
            axes.1.name()
        )));
    }
    GaussianState::centered(covariance_of(&squeeze_nc(spec, p)))
}

fn wigner_grid_row(
    state: &GaussianState,
    axes: (Axis, Axis),
    extent: f64,
    samples: usize,
    row: usize,
) -> Vec<(f64, f64, f64)> {
    let coord = |i: usize| -extent + 2.0 * extent * i as f64 / (samples - 1) as f64;
    let a = coord(row);
    (0..samples)
        .map(|j| {
            let b = coord(j);
            let mut point = PhaseVector::zeros();
            point[axes.0.index()] = a;
            point[axes.1.index()] = b;
            (a, b, state.wigner(&point))
        })
        .collect()
}

/// Sample the Wigner function of the deformed squeezed state on a uniform
/// samples x samples grid over [-extent, extent]^2 in the two named axes;
/// the remaining coordinates stay at 0. Rows come back in row-major order,
/// first axis outer.
pub fn wigner_grid(
    spec: &SqueezeSpec,
    p: &NCParams,
    axes: (Axis, Axis),
    extent: f64,
    samples: usize,
) -> Result<Vec<(f64, f64, f64)>> {
    let state = wigner_grid_state(spec, p, axes, extent, samples)?;
    let eval_row = |i: usize| wigner_grid_row(&state, axes, extent, samples, i);
    #[cfg(feature = "parallel")]
    let per_row: Vec<Vec<(f64, f64, f64)>> = (0..samples).into_par_iter().map(eval_row).collect();
    #[cfg(not(feature = "parallel"))]
    let per_row: Vec<Vec<(f64, f64, f64)>> = (0..samples).map(eval_row).collect();
    Ok(per_row.into_iter().flatten().collect())
}

/// Sequential reference path for [`wigner_grid`]; identical output.
pub fn wigner_grid_seq(
    spec: &SqueezeSpec,
    p: &NCParams,
    axes: (Axis, Axis),
    extent: f64,
    samples: usize,
) -> Result<Vec<(f64, f64, f64)>> {
    let state = wigner_grid_state(spec, p, axes, extent, samples)?;
    Ok((0..samples)
        .flat_map(|i| wigner_grid_row(&state, axes, extent, samples, i))
        .collect())
}

/// Render a Wigner grid as CSV with a header naming the two axes.
pub fn render_wigner_csv(axes: (Axis, Axis), rows: &[(f64, f64, f64)]) -> String {
    let mut out = String::with_capacity((rows.len() + 1) * 3 * 25);
    let _ = writeln!(out, "{},{},w", axes.0.name(), axes.1.name());
    for &(a, b, w) in rows {
        let _ = writeln!(
            out,
            "{},{},{}",
            format_float(a),
            format_float(b),
            format_float(w)
        );
    }
    out
}

/// Sample a Wigner grid and write it atomically to `path`.
pub fn write_wigner_csv(
    spec: &SqueezeSpec,
    p: &NCParams,
    axes: (Axis, Axis),
    extent: f64,
    samples: usize,
    path: &Path,
) -> Result<usize> {
    let rows = wigner_grid(spec, p, axes, extent, samples)?;
    write_atomic(path, &render_wigner_csv(axes, rows.as_slice()))?;
    Ok(rows.len())
}
