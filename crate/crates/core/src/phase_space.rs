//! Noncommutative phase-space algebra on the coordinates (x, px, y, py).
//!
//! The commutator matrix of the deformed algebra is
//!
//! ```text
//! [x, y] = i*theta,   [px, py] = i*eta,   [x, px] = [y, py] = i,
//! ```
//!
//! collected into the skew-symmetric matrix `Omega` with 2x2 diagonal
//! blocks `J = [[0, 1], [-1, 0]]` and cross block `diag(theta, eta)`.
//! A linear Darboux map `D` carries canonically commuting variables into
//! the deformed ones; it is valid exactly when `D J D^T = Omega`.

use crate::error::{Error, Result};

/// Real 4x4 matrix over the phase-space coordinates (x, px, y, py).
pub type Matrix4 = nalgebra::Matrix4<f64>;

/// Real phase-space point (x, px, y, py), natural units hbar = 1.
pub type PhaseVector = nalgebra::Vector4<f64>;

/// Noncommutativity constants with their derived Darboux scales.
///
/// Construction enforces `theta * eta < 1` (invertibility of the Darboux
/// map) and the scale constraint `2 * lambda * mu = 1 + sqrt(1 - theta*eta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NCParams {
    theta: f64,
    eta: f64,
    xi: f64,
    lambda: f64,
    mu: f64,
}

impl NCParams {
    /// Non-negative deformation constants; the default entry point.
    pub fn new(theta: f64, eta: f64) -> Result<Self> {
        if theta < 0.0 || eta < 0.0 {
            return Err(Error::NegativeNcParam { theta, eta });
        }
        Self::new_signed(theta, eta)
    }

    /// Override for signed exploration. Both constants must carry the same
    /// sign: the square-root ratios in the squeezing flow are real only for
    /// same-signed pairs.
    pub fn new_signed(theta: f64, eta: f64) -> Result<Self> {
        let product = theta * eta;
        if !theta.is_finite() || !eta.is_finite() || product >= 1.0 {
            return Err(Error::NcParamsOutOfRange { theta, eta });
        }
        if product < 0.0 {
            return Err(Error::MixedSignNcParams { theta, eta });
        }
        // Symmetric default choice; reduces to lambda = mu = 1 at theta = eta = 0.
        let lambda = ((1.0 + (1.0 - product).sqrt()) / 2.0).sqrt();
        let mu = constrained_mu(theta, eta, lambda)?;
        Ok(Self {
            theta,
            eta,
            xi: product.sqrt(),
            lambda,
            mu,
        })
    }

    /// Custom Darboux scale `lambda`; `mu` follows from the constraint.
    pub fn with_lambda(theta: f64, eta: f64, lambda: f64) -> Result<Self> {
        let base = Self::new(theta, eta)?;
        let mu = constrained_mu(theta, eta, lambda)?;
        Ok(Self { lambda, mu, ..base })
    }

    /// The undeformed algebra, theta = eta = 0.
    pub fn commutative() -> Self {
        Self {
            theta: 0.0,
            eta: 0.0,
            xi: 0.0,
            lambda: 1.0,
            mu: 1.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// xi = sqrt(theta * eta), the combined deformation frequency.
    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn is_commutative(&self) -> bool {
        self.theta == 0.0 && self.eta == 0.0
    }
}

/// mu solving `2 * lambda * mu = 1 + sqrt(1 - theta*eta)`.
pub fn constrained_mu(theta: f64, eta: f64, lambda: f64) -> Result<f64> {
    let product = theta * eta;
    if !product.is_finite() || product >= 1.0 {
        return Err(Error::NcParamsOutOfRange { theta, eta });
    }
    if lambda == 0.0 || !lambda.is_finite() {
        return Err(Error::DegenerateDarbouxScale(lambda));
    }
    Ok((1.0 + (1.0 - product).sqrt()) / (2.0 * lambda))
}

/// Block-diagonal canonical commutator matrix diag(J, J).
pub fn symplectic_j() -> Matrix4 {
    Matrix4::new(
        0.0, 1.0, 0.0, 0.0, //
        -1.0, 0.0, 0.0, 0.0, //
        0.0, 0.0, 0.0, 1.0, //
        0.0, 0.0, -1.0, 0.0,
    )
}

/// Deformed commutator matrix: diagonal blocks J, cross block diag(theta, eta).
pub fn omega_matrix(p: &NCParams) -> Matrix4 {
    let mut omega = symplectic_j();
    omega[(0, 2)] = p.theta;
    omega[(2, 0)] = -p.theta;
    omega[(1, 3)] = p.eta;
    omega[(3, 1)] = -p.eta;
    omega
}

/// Linear Darboux map from canonical variables to the deformed ones:
///
/// ```text
/// x  = lambda*x_c - (theta/2lambda)*py_c     px = mu*px_c + (eta/2mu)*y_c
/// y  = lambda*y_c + (theta/2lambda)*px_c     py = mu*py_c - (eta/2mu)*x_c
/// ```
pub fn darboux_map(p: &NCParams) -> Matrix4 {
    let (l, m) = (p.lambda, p.mu);
    let tl = p.theta / (2.0 * l);
    let em = p.eta / (2.0 * m);
    Matrix4::new(
        l, 0.0, 0.0, -tl, //
        0.0, m, em, 0.0, //
        0.0, tl, l, 0.0, //
        -em, 0.0, 0.0, m,
    )
}

/// Max-abs entry of `D J D^T - Omega(p)`; zero certifies a valid Darboux map.
pub fn check_darboux(d: &Matrix4, p: &NCParams) -> f64 {
    (d * symplectic_j() * d.transpose() - omega_matrix(p))
        .abs()
        .max()
}

#[cfg(test)]
#[allow(clippy::excessive_precision)] // frozen 17-digit oracle values
mod tests {
    use super::*;

    const PAIRS: [(f64, f64); 6] = [
        (0.0, 0.0),
        (0.1, 0.1),
        (0.2, 0.1),
        (0.5, 0.5),
        (0.9, 0.9),
        (1e-3, 1e-6),
    ];

    #[test]
    fn j_is_skew_orthogonal_and_squares_to_minus_identity() {
        let j = symplectic_j();
        assert_eq!((j + j.transpose()).abs().max(), 0.0);
        assert_eq!((j * j.transpose() - Matrix4::identity()).abs().max(), 0.0);
        assert_eq!((j * j + Matrix4::identity()).abs().max(), 0.0);
    }

    #[test]
    fn omega_commutative_limit_is_j() {
        let p = NCParams::commutative();
        assert_eq!(omega_matrix(&p), symplectic_j());
    }

    #[test]
    fn omega_entries_and_skew_symmetry() {
        let p = NCParams::new(0.2, 0.1).unwrap();
        let o = omega_matrix(&p);
        assert_eq!(o[(0, 1)], 1.0);
        assert_eq!(o[(0, 2)], 0.2);
        assert_eq!(o[(1, 3)], 0.1);
        assert_eq!((o + o.transpose()).abs().max(), 0.0);
        assert!(o.determinant().abs() > 0.5);
    }

    #[test]
    fn omega_nonsingular_on_pair_grid() {
        for &(theta, eta) in &PAIRS {
            let p = NCParams::new(theta, eta).unwrap();
            assert!(omega_matrix(&p).determinant().abs() > 1e-3);
        }
    }

    #[test]
    fn nc_params_rejection() {
        assert!(matches!(
            NCParams::new(-0.1, 0.2),
            Err(Error::NegativeNcParam { .. })
        ));
        assert!(matches!(
            NCParams::new(1.0, 1.0),
            Err(Error::NcParamsOutOfRange { .. })
        ));
        assert!(matches!(
            NCParams::new(2.0, 0.5),
            Err(Error::NcParamsOutOfRange { .. })
        ));
        assert!(matches!(
            NCParams::new_signed(-0.5, 0.5),
            Err(Error::MixedSignNcParams { .. })
        ));
        assert!(NCParams::new_signed(-0.5, -0.5).is_ok());
        assert!(NCParams::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn scale_constraint_holds() {
        for &(theta, eta) in &PAIRS {
            let p = NCParams::new(theta, eta).unwrap();
            let rhs = 1.0 + (1.0 - theta * eta).sqrt();
            assert!((2.0 * p.lambda() * p.mu() - rhs).abs() < 1e-15);
            assert!((p.xi() - (theta * eta).sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn constrained_mu_values() {
        // Frozen from direct evaluation of (1 + sqrt(1 - theta*eta)) / (2*lambda).
        assert_eq!(constrained_mu(0.0, 0.0, 1.0).unwrap(), 1.0);
        assert!((constrained_mu(0.2, 0.1, 1.0).unwrap() - 0.99497474683058327).abs() < 1e-16);
        assert!(matches!(
            constrained_mu(1.0, 1.0, 1.0),
            Err(Error::NcParamsOutOfRange { .. })
        ));
        assert!(matches!(
            constrained_mu(0.2, 0.1, 0.0),
            Err(Error::DegenerateDarbouxScale(_))
        ));
    }

    #[test]
    fn darboux_map_commutative_is_identity() {
        let d = darboux_map(&NCParams::commutative());
        assert_eq!((d - Matrix4::identity()).abs().max(), 0.0);
    }

    #[test]
    fn darboux_map_entry_and_invertibility() {
        let p = NCParams::new(0.2, 0.1).unwrap();
        // lambda = sqrt((1 + sqrt(0.98)) / 2), frozen from direct evaluation.
        assert!((p.lambda() - 0.99748420881264244).abs() < 1e-16);
        let d = darboux_map(&p);
        assert!((d[(0, 3)] - (-0.10025221363557747)).abs() < 1e-16);
        assert!(d.determinant().abs() > 1e-6);
    }

    #[test]
    fn check_darboux_certifies_the_map() {
        assert_eq!(
            check_darboux(&Matrix4::identity(), &NCParams::commutative()),
            0.0
        );
        for &(theta, eta) in &PAIRS {
            let p = NCParams::new(theta, eta).unwrap();
            assert!(check_darboux(&darboux_map(&p), &p) <= 1e-12);
        }
        // With D = identity the residual is exactly the theta cross entry.
        let p = NCParams::new(0.2, 0.1).unwrap();
        assert!((check_darboux(&Matrix4::identity(), &p) - 0.2).abs() < 1e-15);
    }

    #[test]
    fn check_darboux_with_custom_lambda() {
        let p = NCParams::with_lambda(0.3, 0.2, 0.7).unwrap();
        assert!(check_darboux(&darboux_map(&p), &p) <= 1e-12);
    }

    #[test]
    fn darboux_map_continuous_at_origin() {
        // Residual against the (lambda, mu)-scaled identity shrinks like eps.
        for eps in [1e-3, 1e-5, 1e-7] {
            let p = NCParams::new(eps, eps).unwrap();
            let scaled =
                Matrix4::from_diagonal(&PhaseVector::new(p.lambda(), p.mu(), p.lambda(), p.mu()));
            let residual = (darboux_map(&p) - scaled).abs().max();
            assert!(residual <= eps, "eps = {eps}: residual = {residual}");
        }
    }
}
