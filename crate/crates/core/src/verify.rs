//! Runtime verification suite.
//!
//! Every structural identity the library relies on, evaluated over a
//! configurable (r, theta, eta) grid and reported as one pass/fail line per
//! check. Each check carries its own threshold; a config-level tolerance
//! override replaces all of them at once.

use crate::bell::{bell_closed, bell_from_wigner, optimal_displacement, Displacement};
use crate::error::Result;
use crate::gaussian::{local_invariants, GaussianState};
use crate::oracle::validate_closed_form;
use crate::phase_space::{check_darboux, darboux_map, omega_matrix, Matrix4, NCParams};
use crate::squeeze::{
    assemble_inverse, covariance_of, inv_cov_params, squeeze_commutative, squeeze_nc, SqueezeSpec,
};
use crate::sweep::SweepConfig;

pub const TOL_DARBOUX: f64 = 1e-12;
pub const TOL_SYMPLECTIC: f64 = 1e-10;
pub const TOL_INVARIANTS: f64 = 1e-9;
pub const TOL_DET_UNIT: f64 = 1e-9;
pub const TOL_ODE_ORACLE: f64 = 1e-6;
pub const TOL_INVERSE: f64 = 1e-9;
pub const TOL_STATIONARITY: f64 = 1e-6;
pub const TOL_BELL_RECONSTRUCTION: f64 = 1e-10;
pub const TOL_NC_GAP: f64 = 1e-10;

/// Outcome of one verification check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    /// Worst residual observed over the grid.
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn new(name: &'static str, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name,
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
        }
    }
}

/// All checks of one verification run.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|check| check.pass)
    }

    /// Fixed-width pass/fail table, one line per check.
    pub fn table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<24} {:>14} {:>12} {:>8}\n",
            "check", "max_residual", "tolerance", "status"
        ));
        for check in &self.checks {
            out.push_str(&format!(
                "{:<24} {:>14.4e} {:>12.1e} {:>8}\n",
                check.name,
                check.max_residual,
                check.tolerance,
                if check.pass { "PASS" } else { "FAIL" }
            ));
        }
        out
    }
}

/// Central finite-difference derivative of the closed-form Bell functional.
fn bell_derivative_fd(params: &crate::squeeze::InvCovParams, at: f64) -> Result<f64> {
    let h = 1e-8;
    let hi = bell_closed(at + h, params)?;
    let lo = bell_closed((at - h).max(0.0), params)?;
    Ok((hi - lo) / (h + (at - (at - h).max(0.0))))
}

/// Run the full invariant suite over the grid in `config`.
pub fn run_checks(config: &SweepConfig) -> Result<VerifyReport> {
    config.validate()?;
    let pairs: Vec<NCParams> = config
        .theta_eta_pairs
        .iter()
        .map(|&(theta, eta)| NCParams::new(theta, eta))
        .collect::<Result<_>>()?;
    let specs: Vec<SqueezeSpec> = config
        .r_grid()
        .into_iter()
        .map(SqueezeSpec::new)
        .collect::<Result<_>>()?;

    let mut darboux = 0.0_f64;
    for p in &pairs {
        darboux = darboux.max(check_darboux(&darboux_map(p), p));
    }

    let mut symplectic = 0.0_f64;
    let mut invariants = 0.0_f64;
    let mut det_unit = 0.0_f64;
    let mut inverse = 0.0_f64;
    let mut stationarity = 0.0_f64;
    let mut reconstruction = 0.0_f64;
    let mut gap = 0.0_f64;
    let mut ode = 0.0_f64;
    let identity = Matrix4::identity();
    let intensities: Vec<f64> = (0..=20).map(|k| 0.1 * k as f64).collect();

    for p in &pairs {
        let omega = omega_matrix(p);
        for spec in &specs {
            let transfer = squeeze_nc(spec, p);
            let sigma = covariance_of(&transfer);
            let params = inv_cov_params(spec, p);

            symplectic =
                symplectic.max((transfer * omega * transfer.transpose() - omega).abs().max());

            let sigma_comm = covariance_of(&squeeze_commutative(spec));
            invariants = invariants.max(
                local_invariants(&sigma).max_abs_diff(&local_invariants(&sigma_comm)),
            );
            det_unit = det_unit.max((sigma.determinant() - 1.0).abs());

            inverse = inverse.max((assemble_inverse(&params) * sigma - identity).abs().max());

            ode = ode.max(validate_closed_form(spec, p, config.ode_steps)?.max_abs_residual);

            let i_opt = optimal_displacement(&params)?;
            stationarity = stationarity.max(bell_derivative_fd(&params, i_opt)?.abs());

            let state = GaussianState::centered(sigma)?;
            for &intensity in &intensities {
                let direct = bell_from_wigner(&state, &Displacement::from_intensity(intensity)?);
                let closed = bell_closed(intensity, &params)?;
                reconstruction = reconstruction.max((direct - closed).abs());
            }

            let comm = inv_cov_params(spec, &NCParams::commutative());
            let b_nc = bell_closed(i_opt, &params)?;
            let b_comm = bell_closed(optimal_displacement(&comm)?, &comm)?;
            gap = gap.max((b_nc - b_comm).abs());
        }
    }

    let tol = |default: f64| config.tolerance.unwrap_or(default);
    Ok(VerifyReport {
        checks: vec![
            Check::new("darboux_residual", darboux, tol(TOL_DARBOUX)),
            Check::new("omega_symplectic", symplectic, tol(TOL_SYMPLECTIC)),
            Check::new("invariants_equality", invariants, tol(TOL_INVARIANTS)),
            Check::new("covariance_det_unit", det_unit, tol(TOL_DET_UNIT)),
            Check::new("ode_oracle", ode, tol(TOL_ODE_ORACLE)),
            Check::new("inverse_closed_form", inverse, tol(TOL_INVERSE)),
            Check::new("stationarity", stationarity, tol(TOL_STATIONARITY)),
            Check::new("bell_reconstruction", reconstruction, tol(TOL_BELL_RECONSTRUCTION)),
            Check::new("nc_gap", gap, tol(TOL_NC_GAP)),
        ],
    })
}
