//! Two-mode squeezing flows.
//!
//! The commutative transfer matrix S(r) mixes the quadratures
//! hyperbolically; the deformed flow picks up an extra rotation-like factor
//! at frequency xi = sqrt(theta*eta) and mixes positions with momenta. Both
//! share the covariance construction Sigma(r) = S^T(r) S(r), and the inverse
//! of the deformed covariance has a closed form in six scalars
//! (n, m, d, c, t1, t2).

use crate::error::{Error, Result};
use crate::phase_space::{Matrix4, NCParams};

/// Upper bound on the squeezing parameter. cosh(2r) at r = 14 is ~7e11,
/// keeping determinants and inversions well inside double precision.
pub const MAX_SQUEEZING: f64 = 14.0;

/// Validated squeezing parameter r >= 0 (scaled interaction time, zero pump
/// phase).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeSpec {
    r: f64,
}

impl SqueezeSpec {
    pub fn new(r: f64) -> Result<Self> {
        if !r.is_finite() || !(0.0..=MAX_SQUEEZING).contains(&r) {
            return Err(Error::SqueezeOutOfRange(r));
        }
        Ok(Self { r })
    }

    pub fn r(&self) -> f64 {
        self.r
    }
}

/// sinh(u)/u. Below 1e-6 the direct quotient is replaced by its series,
/// which covers the removable singularity at u = 0.
pub(crate) fn sinhc(u: f64) -> f64 {
    if u.abs() < 1e-6 {
        let u2 = u * u;
        1.0 + u2 / 6.0 + u2 * u2 / 120.0
    } else {
        u.sinh() / u
    }
}

pub(crate) fn commutative_transfer(r: f64) -> Matrix4 {
    let (c, s) = (r.cosh(), r.sinh());
    Matrix4::new(
        c, 0.0, s, 0.0, //
        0.0, c, 0.0, -s, //
        s, 0.0, c, 0.0, //
        0.0, -s, 0.0, c,
    )
}

/// Commutative squeeze transfer matrix S(r); symmetric, det 1, S(0) = I.
pub fn squeeze_commutative(spec: &SqueezeSpec) -> Matrix4 {
    commutative_transfer(spec.r)
}

/// Deformed squeeze transfer matrix.
///
/// The mixed entries sqrt(theta/eta)*sinh(xi*r) and sqrt(eta/theta)*sinh(xi*r)
/// are evaluated as |theta|*r*sinhc(xi*r) and |eta|*r*sinhc(xi*r), which is the
/// same value wherever the ratios are defined and extends smoothly to
/// theta = 0 or eta = 0. Reduces to [`squeeze_commutative`] at theta = eta = 0.
pub fn squeeze_nc(spec: &SqueezeSpec, p: &NCParams) -> Matrix4 {
    let r = spec.r;
    let (c, s) = (r.cosh(), r.sinh());
    let cx = (p.xi() * r).cosh();
    let mix = r * sinhc(p.xi() * r);
    let am = p.theta().abs() * mix;
    let bm = p.eta().abs() * mix;
    Matrix4::new(
        cx * c, am * c, cx * s, -am * s, //
        bm * c, cx * c, bm * s, -cx * s, //
        cx * s, am * s, cx * c, -am * c, //
        -bm * s, -cx * s, -bm * c, cx * c,
    )
}

/// Covariance matrix of the state a transfer matrix generates: S^T S.
pub fn covariance_of(transfer: &Matrix4) -> Matrix4 {
    transfer.transpose() * transfer
}

/// The six scalars parameterizing the inverse of the deformed covariance
/// matrix; see [`assemble_inverse`] for the placement pattern.
///
/// In the commutative limit n = m = cosh(2r), t2 = -t1 = sinh(2r),
/// d = c = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvCovParams {
    pub n: f64,
    pub m: f64,
    pub d: f64,
    pub c: f64,
    pub t1: f64,
    pub t2: f64,
}

/// Closed-form inverse-covariance scalars for the deformed squeezed state.
///
/// The ratio terms (theta/eta)*(1 - cosh(2*xi*r)) and (theta+eta)/(2*xi) *
/// sinh(2*xi*r) of the direct expressions are rewritten through sinhc, so
/// every same-signed pair (including zeros) evaluates without a 0/0 branch:
///
/// ```text
/// (theta/eta)(cosh(2 xi r) - 1) = 2 theta^2 r^2 sinhc^2(xi r)
/// ((theta+eta)/(2 xi)) sinh(2 xi r) = (theta + eta) r sinhc(2 xi r)
/// ```
pub fn inv_cov_params(spec: &SqueezeSpec, p: &NCParams) -> InvCovParams {
    let r = spec.r;
    let (theta, eta, xi) = (p.theta(), p.eta(), p.xi());
    let sc = sinhc(xi * r);
    let base = 1.0 + (2.0 * xi * r).cosh();
    let bracket_theta = base + 2.0 * theta * theta * r * r * sc * sc;
    let bracket_eta = base + 2.0 * eta * eta * r * r * sc * sc;
    let (c2r, s2r) = ((2.0 * r).cosh(), (2.0 * r).sinh());
    let cross = (theta + eta) * r * sinhc(2.0 * xi * r);
    InvCovParams {
        n: 0.5 * c2r * bracket_theta,
        m: 0.5 * c2r * bracket_eta,
        d: -cross * c2r,
        c: cross * s2r,
        t1: -0.5 * s2r * bracket_theta,
        t2: 0.5 * s2r * bracket_eta,
    }
}

/// Place the six scalars into the inverse-covariance pattern
///
/// ```text
/// [  n   d   t1  -c ]
/// [  d   m   c   t2 ]
/// [  t1  c   n   -d ]
/// [ -c   t2  -d  m  ]
/// ```
pub fn assemble_inverse(params: &InvCovParams) -> Matrix4 {
    let InvCovParams { n, m, d, c, t1, t2 } = *params;
    Matrix4::new(
        n, d, t1, -c, //
        d, m, c, t2, //
        t1, c, n, -d, //
        -c, t2, -d, m,
    )
}
