//! Two-mode Gaussian squeezed states evolved by commutative and
//! noncommutative phase-space dynamics, and the Bell-CHSH functional
//! evaluated from their Wigner functions.
//!
//! The deformed algebra adds position-position and momentum-momentum
//! commutators `[x, y] = i*theta`, `[px, py] = i*eta` on top of the
//! canonical ones. This crate builds the deformed squeezing flow, its
//! covariance matrices and symplectic invariants, and locates the
//! displacement that maximizes the Bell-CHSH functional. That optimum
//! turns out not to depend on (theta, eta) at all: the deformation
//! rescales the two inverse-covariance scalars it depends on by a common
//! factor, which cancels.
//!
//! Conventions, fixed everywhere:
//! - phase-space coordinate order (x, px, y, py), natural units hbar = 1;
//! - vacuum covariance matrix = identity, so the Wigner function integrates
//!   to 4 (see [`gaussian::GaussianState::wigner_unit`] for unit mass);
//! - squeezing parameter r >= 0 with zero pump phase.
//!
//! The `parallel` feature (default) runs grid evaluation on rayon;
//! disabling it falls back to identical sequential code paths.

pub mod bell;
pub mod error;
pub mod gaussian;
pub mod oracle;
pub mod phase_space;
pub mod squeeze;
pub mod sweep;
pub mod verify;

pub use bell::{
    bell_at_optimum, bell_closed, bell_from_wigner, bell_report, grid_maximize, is_nonlocal,
    nc_commutative_gap, optimal_displacement, optimal_displacement_nc, BellResult, Displacement,
};
pub use error::{Error, Result};
pub use gaussian::{
    is_physical, local_invariants, standard_form, GaussianState, LocalInvariants, StandardForm,
};
pub use oracle::{
    generator, integrate_transfer, validate_closed_form, IntegrationReport, QuadratureGenerator,
    DEFAULT_ODE_STEPS,
};
pub use phase_space::{
    check_darboux, constrained_mu, darboux_map, omega_matrix, symplectic_j, Matrix4, NCParams,
    PhaseVector,
};
pub use squeeze::{
    assemble_inverse, covariance_of, inv_cov_params, squeeze_commutative, squeeze_nc, InvCovParams,
    SqueezeSpec, MAX_SQUEEZING,
};
pub use sweep::{
    evaluate_grid, evaluate_grid_seq, render_sweep_csv, render_wigner_csv, wigner_grid,
    wigner_grid_seq, write_sweep_csv, write_wigner_csv, Axis, SweepConfig, SweepRow, SWEEP_HEADER,
};
pub use verify::{run_checks, Check, VerifyReport};
