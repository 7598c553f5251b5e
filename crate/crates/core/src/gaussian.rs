//! Bipartite Gaussian states: Wigner-function evaluation, block-determinant
//! local symplectic invariants, and the two-mode standard form.
//!
//! The Wigner function convention is
//!
//! ```text
//! W(R) = exp(-1/2 (R - mean)^T sigma^-1 (R - mean)) / (pi^2 sqrt(det sigma))
//! ```
//!
//! whose integral over phase space is 4, not 1; together with a vacuum
//! covariance equal to the identity this is the convention every Bell
//! computation in this crate assumes. [`GaussianState::wigner_unit`] is the
//! unit-mass variant for callers that want a probability density.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::phase_space::{Matrix4, PhaseVector};

/// Max tolerated asymmetry |sigma - sigma^T| in a covariance matrix.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Condition-number guard for covariance inversion; deep squeezing
/// (r around 14) drives sigma numerically singular well past this.
pub const MAX_CONDITION: f64 = 1e12;

/// A Gaussian state: mean vector plus 4x4 covariance matrix.
///
/// Construction validates symmetry, positive-definiteness and conditioning,
/// and factors the covariance once (Cholesky). The Wigner quadratic form is
/// evaluated through the triangular factor as |L^-1 (R - mean)|^2, which
/// stays accurate at condition numbers where forming the inverse directly
/// loses digits, and is non-negative by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState {
    mean: PhaseVector,
    cov: Matrix4,
    inv_cov: Matrix4,
    chol_lower: Matrix4,
    sqrt_det: f64,
}

impl GaussianState {
    pub fn new(mean: PhaseVector, cov: Matrix4) -> Result<Self> {
        if mean.iter().any(|x| !x.is_finite()) || cov.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument(
                "non-finite entries in Gaussian state".into(),
            ));
        }
        let asym = (cov - cov.transpose()).abs().max();
        if asym > SYMMETRY_TOL {
            return Err(Error::NotSymmetric(asym));
        }
        let eigenvalues = cov.symmetric_eigen().eigenvalues;
        let (lo, hi) = (eigenvalues.min(), eigenvalues.max());
        if lo <= 0.0 {
            return Err(Error::NotPositiveDefinite);
        }
        if hi / lo > MAX_CONDITION {
            return Err(Error::IllConditioned(hi / lo));
        }
        let chol = cov.cholesky().ok_or(Error::NotPositiveDefinite)?;
        let chol_lower = chol.l();
        // det cov = (prod diag L)^2, so this sqrt is exact by construction.
        let sqrt_det = chol_lower.diagonal().product();
        Ok(Self {
            mean,
            cov,
            inv_cov: chol.inverse(),
            chol_lower,
            sqrt_det,
        })
    }

    /// Zero-mean state with the given covariance.
    pub fn centered(cov: Matrix4) -> Result<Self> {
        Self::new(PhaseVector::zeros(), cov)
    }

    /// Vacuum: zero mean, identity covariance.
    pub fn vacuum() -> Self {
        Self {
            mean: PhaseVector::zeros(),
            cov: Matrix4::identity(),
            inv_cov: Matrix4::identity(),
            chol_lower: Matrix4::identity(),
            sqrt_det: 1.0,
        }
    }

    pub fn mean(&self) -> &PhaseVector {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix4 {
        &self.cov
    }

    pub fn inv_cov(&self) -> &Matrix4 {
        &self.inv_cov
    }

    /// Wigner function at a phase-space point (integral over R^4 is 4).
    pub fn wigner(&self, point: &PhaseVector) -> f64 {
        let d = point - self.mean;
        let z = self
            .chol_lower
            .solve_lower_triangular(&d)
            .expect("validated covariance factor");
        (-0.5 * z.norm_squared()).exp() / (PI * PI * self.sqrt_det)
    }

    /// Unit-normalized Wigner function (divides the mass of 4 out).
    pub fn wigner_unit(&self, point: &PhaseVector) -> f64 {
        self.wigner(point) / 4.0
    }
}

/// The four block determinants preserved by mode-local symplectic maps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalInvariants {
    /// det of the upper-left (mode A) block.
    pub i1: f64,
    /// det of the lower-right (mode B) block.
    pub i2: f64,
    /// det of the off-diagonal correlation block.
    pub i3: f64,
    /// det of the full covariance matrix.
    pub i4: f64,
}

impl LocalInvariants {
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.i1 - other.i1)
            .abs()
            .max((self.i2 - other.i2).abs())
            .max((self.i3 - other.i3).abs())
            .max((self.i4 - other.i4).abs())
    }
}

/// Standard-form parameters (n, m, c1, c2) of a two-mode covariance matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardForm {
    pub n: f64,
    pub m: f64,
    pub c1: f64,
    pub c2: f64,
}

impl StandardForm {
    /// Assemble the standard-form covariance matrix these parameters denote.
    pub fn matrix(&self) -> Matrix4 {
        Matrix4::new(
            self.n, 0.0, self.c1, 0.0, //
            0.0, self.n, 0.0, self.c2, //
            self.c1, 0.0, self.m, 0.0, //
            0.0, self.c2, 0.0, self.m,
        )
    }
}

fn det2(m: &Matrix4, row: usize, col: usize) -> f64 {
    m[(row, col)] * m[(row + 1, col + 1)] - m[(row, col + 1)] * m[(row + 1, col)]
}

/// Block determinants of a (symmetric) covariance matrix.
pub fn local_invariants(cov: &Matrix4) -> LocalInvariants {
    LocalInvariants {
        i1: det2(cov, 0, 0),
        i2: det2(cov, 2, 2),
        i3: det2(cov, 0, 2),
        i4: cov.determinant(),
    }
}

/// Solve (n, m, c1, c2) from the four invariants, with the convention
/// c1 >= |c2| and c1 >= 0.
///
/// The pair (c1^2, c2^2) solves a quadratic fixed by i3 and i4; states whose
/// invariants admit no real non-negative solution are rejected.
pub fn standard_form(cov: &Matrix4) -> Result<StandardForm> {
    let inv = local_invariants(cov);
    if inv.i1 < 0.0 || inv.i2 < 0.0 {
        return Err(Error::NoStandardForm);
    }
    let n = inv.i1.sqrt();
    let m = inv.i2.sqrt();
    let nm = n * m;
    if nm == 0.0 {
        return Err(Error::NoStandardForm);
    }
    // c1^2 + c2^2 and c1^2 * c2^2 from expanding i4 = (nm - c1^2)(nm - c2^2).
    let sum = (nm * nm + inv.i3 * inv.i3 - inv.i4) / nm;
    let prod = inv.i3 * inv.i3;
    let scale = sum.abs().max(1.0);
    let mut disc = sum * sum / 4.0 - prod;
    if disc < -1e-9 * scale * scale {
        return Err(Error::NoStandardForm);
    }
    disc = disc.max(0.0);
    let z1 = sum / 2.0 + disc.sqrt();
    let z2 = sum / 2.0 - disc.sqrt();
    if z1 < -1e-9 * scale || z2 < -1e-9 * scale {
        return Err(Error::NoStandardForm);
    }
    let c1 = z1.max(0.0).sqrt();
    let c2_mag = z2.max(0.0).sqrt();
    let c2 = if inv.i3 < 0.0 { -c2_mag } else { c2_mag };
    Ok(StandardForm { n, m, c1, c2 })
}

/// True iff symmetric within [`SYMMETRY_TOL`] and positive-definite.
pub fn is_physical(cov: &Matrix4) -> bool {
    cov.iter().all(|x| x.is_finite())
        && (cov - cov.transpose()).abs().max() <= SYMMETRY_TOL
        && cov.cholesky().is_some()
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // frozen 17-digit oracle values
mod tests {
    use super::*;
    use crate::phase_space::NCParams;
    use crate::squeeze::{covariance_of, squeeze_commutative, squeeze_nc, SqueezeSpec};

    const INV_PI2: f64 = 0.10132118364233777;

    fn sigma_comm(r: f64) -> Matrix4 {
        covariance_of(&squeeze_commutative(&SqueezeSpec::new(r).unwrap()))
    }

    fn sigma_nc(r: f64, theta: f64, eta: f64) -> Matrix4 {
        covariance_of(&squeeze_nc(
            &SqueezeSpec::new(r).unwrap(),
            &NCParams::new(theta, eta).unwrap(),
        ))
    }

    #[test]
    fn wigner_vacuum_at_origin() {
        let state = GaussianState::vacuum();
        assert!((state.wigner(&PhaseVector::zeros()) - INV_PI2).abs() < 1e-16);
        assert!((state.wigner_unit(&PhaseVector::zeros()) - INV_PI2 / 4.0).abs() < 1e-16);
    }

    #[test]
    fn wigner_vacuum_unit_displacement() {
        let state = GaussianState::vacuum();
        let w = state.wigner(&PhaseVector::new(1.0, 0.0, 0.0, 0.0));
        // exp(-1/2)/pi^2, frozen from direct evaluation.
        assert!((w - 0.061454404357452011).abs() < 1e-16);
    }

    #[test]
    fn wigner_squeezed_at_origin_keeps_unit_determinant_value() {
        let state = GaussianState::centered(sigma_comm(0.5)).unwrap();
        assert!((state.wigner(&PhaseVector::zeros()) - INV_PI2).abs() < 1e-14);
    }

    #[test]
    fn wigner_maximum_at_mean_and_positive() {
        let mean = PhaseVector::new(0.3, -0.2, 0.1, 0.4);
        let state = GaussianState::new(mean, sigma_nc(0.7, 0.2, 0.1)).unwrap();
        let peak = state.wigner(&mean);
        for k in 0..4 {
            let mut p = mean;
            p[k] += 0.5;
            let w = state.wigner(&p);
            assert!(w > 0.0 && w < peak);
        }
    }

    #[test]
    fn wigner_correlation_ridge() {
        // Positive x-y correlation: along x = y beats x = -y.
        let state = GaussianState::centered(sigma_comm(0.5)).unwrap();
        let along = state.wigner(&PhaseVector::new(1.0, 0.0, 1.0, 0.0));
        let across = state.wigner(&PhaseVector::new(1.0, 0.0, -1.0, 0.0));
        assert!(along > across);
    }

    #[test]
    fn state_construction_rejects_bad_covariances() {
        let mut asym = Matrix4::identity();
        asym[(0, 1)] = 1e-6;
        assert!(matches!(
            GaussianState::centered(asym),
            Err(Error::NotSymmetric(_))
        ));
        let indef = Matrix4::from_diagonal(&PhaseVector::new(1.0, 1.0, 1.0, -1.0));
        assert!(matches!(
            GaussianState::centered(indef),
            Err(Error::NotPositiveDefinite)
        ));
        let hard = Matrix4::from_diagonal(&PhaseVector::new(1e13, 1.0, 1.0, 1.0));
        assert!(matches!(
            GaussianState::centered(hard),
            Err(Error::IllConditioned(_))
        ));
        let nan = Matrix4::from_diagonal(&PhaseVector::new(f64::NAN, 1.0, 1.0, 1.0));
        assert!(GaussianState::centered(nan).is_err());
    }

    #[test]
    fn invariants_vacuum() {
        let inv = local_invariants(&Matrix4::identity());
        assert_eq!((inv.i1, inv.i2, inv.i3, inv.i4), (1.0, 1.0, 0.0, 1.0));
    }

    #[test]
    fn invariants_squeezed() {
        // cosh^2(1), -sinh^2(1), det 1; frozen from direct evaluation.
        let inv = local_invariants(&sigma_comm(0.5));
        assert!((inv.i1 - 2.3810978455418157).abs() < 1e-13);
        assert!((inv.i2 - 2.3810978455418157).abs() < 1e-13);
        assert!((inv.i3 + 1.3810978455418157).abs() < 1e-13);
        assert!((inv.i4 - 1.0).abs() < 1e-13);
    }

    #[test]
    fn invariants_unchanged_by_deformation() {
        let a = local_invariants(&sigma_nc(0.5, 0.2, 0.1));
        let b = local_invariants(&sigma_comm(0.5));
        assert!(a.max_abs_diff(&b) < 1e-12);
    }

    #[test]
    fn standard_form_vacuum() {
        let sf = standard_form(&Matrix4::identity()).unwrap();
        assert_eq!((sf.n, sf.m, sf.c1, sf.c2), (1.0, 1.0, 0.0, 0.0));
    }

    #[test]
    fn standard_form_squeezed() {
        // (cosh 1, cosh 1, sinh 1, -sinh 1); frozen from direct evaluation.
        let sf = standard_form(&sigma_comm(0.5)).unwrap();
        assert!((sf.n - 1.5430806348152438).abs() < 1e-13);
        assert!((sf.m - 1.5430806348152438).abs() < 1e-13);
        assert!((sf.c1 - 1.1752011936438015).abs() < 1e-13);
        assert!((sf.c2 + 1.1752011936438015).abs() < 1e-13);
        assert!(sf.c1 >= sf.c2.abs() && sf.c1 >= 0.0);
    }

    #[test]
    fn standard_form_matches_across_deformation() {
        let a = standard_form(&sigma_nc(0.5, 0.2, 0.1)).unwrap();
        let b = standard_form(&sigma_comm(0.5)).unwrap();
        assert!((a.n - b.n).abs() < 1e-12);
        assert!((a.m - b.m).abs() < 1e-12);
        assert!((a.c1 - b.c1).abs() < 1e-12);
        assert!((a.c2 - b.c2).abs() < 1e-12);
    }

    #[test]
    fn standard_form_round_trips_invariants() {
        for (r, theta, eta) in [(0.3, 0.0, 0.0), (0.5, 0.2, 0.1), (1.2, 0.5, 0.5)] {
            let cov = sigma_nc(r, theta, eta);
            let sf = standard_form(&cov).unwrap();
            let rebuilt = local_invariants(&sf.matrix());
            assert!(rebuilt.max_abs_diff(&local_invariants(&cov)) < 1e-9);
        }
    }

    #[test]
    fn standard_form_rejects_non_physical() {
        // Negative-definite B block with positive determinant: invariants
        // (1, 1, 1, 4), whose quadratic has the double root c^2 = -1.
        let bad = Matrix4::new(
            1.0, 0.0, 1.0, 0.0, //
            0.0, 1.0, 0.0, 1.0, //
            1.0, 0.0, -1.0, 0.0, //
            0.0, 1.0, 0.0, -1.0,
        );
        assert!(matches!(standard_form(&bad), Err(Error::NoStandardForm)));
        // Indefinite A block with negative determinant.
        let mut neg = Matrix4::identity();
        neg[(0, 1)] = 2.0;
        neg[(1, 0)] = 2.0;
        assert!(matches!(standard_form(&neg), Err(Error::NoStandardForm)));
    }

    #[test]
    fn physicality_check() {
        assert!(is_physical(&Matrix4::identity()));
        assert!(!is_physical(&Matrix4::from_diagonal(&PhaseVector::new(
            1.0, 1.0, 1.0, -1.0
        ))));
        assert!(is_physical(&sigma_nc(1.0, 0.5, 0.5)));
        let mut asym = Matrix4::identity();
        asym[(0, 1)] = 1e-6;
        assert!(!is_physical(&asym));
    }
}
