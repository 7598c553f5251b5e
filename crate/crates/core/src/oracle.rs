//! Independent cross-check of the closed-form transfer matrices.
//!
//! The Heisenberg equations of motion for the deformed two-mode squeezing
//! Hamiltonian reduce, in quadrature form, to a constant-coefficient linear
//! flow dz/dr = G z. Integrating dM/dr = G M from the identity with
//! fixed-step RK4 gives a transfer matrix that owes nothing to the closed
//! form in [`crate::squeeze`], so their agreement validates both.

use crate::error::{Error, Result};
use crate::phase_space::{Matrix4, NCParams};
use crate::squeeze::{squeeze_nc, SqueezeSpec};

/// Step count that keeps the residual well below 1e-8 for r <= 2.
pub const DEFAULT_ODE_STEPS: usize = 20_000;

/// Generator of the quadrature flow dz/dr = G z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureGenerator {
    matrix: Matrix4,
}

impl QuadratureGenerator {
    pub fn matrix(&self) -> &Matrix4 {
        &self.matrix
    }
}

/// Result of one oracle integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrationReport {
    /// The RK4 transfer matrix M(r).
    pub transfer: Matrix4,
    /// Max-abs entrywise residual against the closed-form transfer matrix.
    pub max_abs_residual: f64,
    pub steps: usize,
    pub step_size: f64,
}

/// Quadrature-flow generator:
///
/// ```text
/// dx/dr  = theta*px + y        dpx/dr = eta*x - py
/// dy/dr  = x - theta*py        dpy/dr = -px - eta*y
/// ```
///
/// G * Omega(p) is symmetric, so the flow preserves the deformed commutator
/// matrix.
pub fn generator(p: &NCParams) -> QuadratureGenerator {
    let (theta, eta) = (p.theta(), p.eta());
    QuadratureGenerator {
        matrix: Matrix4::new(
            0.0, theta, 1.0, 0.0, //
            eta, 0.0, 0.0, -1.0, //
            1.0, 0.0, 0.0, -theta, //
            0.0, -1.0, -eta, 0.0,
        ),
    }
}

/// Fixed-step classical RK4 on dM/dr = G M, M(0) = I.
///
/// The flow is linear and smooth, so a fixed step keeps the result
/// bit-reproducible for identical inputs.
pub fn integrate_transfer(gen: &QuadratureGenerator, r: f64, steps: usize) -> Result<Matrix4> {
    if steps == 0 {
        return Err(Error::InvalidArgument(
            "integration needs at least one step".into(),
        ));
    }
    if !r.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "non-finite integration endpoint r = {r}"
        )));
    }
    let g = gen.matrix;
    let h = r / steps as f64;
    let mut m = Matrix4::identity();
    for _ in 0..steps {
        let k1 = g * m;
        let k2 = g * (m + 0.5 * h * k1);
        let k3 = g * (m + 0.5 * h * k2);
        let k4 = g * (m + h * k3);
        m += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    Ok(m)
}

/// Integrate the quadrature flow and report the residual against the
/// closed-form transfer matrix [`squeeze_nc`].
pub fn validate_closed_form(
    spec: &SqueezeSpec,
    p: &NCParams,
    steps: usize,
) -> Result<IntegrationReport> {
    let transfer = integrate_transfer(&generator(p), spec.r(), steps)?;
    let closed = squeeze_nc(spec, p);
    Ok(IntegrationReport {
        max_abs_residual: (transfer - closed).abs().max(),
        transfer,
        steps,
        step_size: spec.r() / steps as f64,
    })
}
