//! The Bell-CHSH functional built from the Wigner function.
//!
//! The functional is the four-term combination
//!
//! ```text
//! B = (pi^2/4) [ W(0,0) + W(a1,0) + W(0,a2) - W(a1,a2) ]
//! ```
//!
//! over displaced evaluation points of the state's Wigner function. On the
//! squeezed family, the canonical dichotomic choice a1 = +sqrt(I),
//! a2 = -sqrt(I) (both real) collapses it to a closed form in the
//! inverse-covariance scalars n and t1:
//!
//! ```text
//! B(I) = 1/4 [ 1 + 2 exp(-n I / 2) - exp(-(n - t1) I) ]
//! ```
//!
//! whose maximizer over I >= 0 has the closed form implemented by
//! [`optimal_displacement`]. The deformation rescales n and t1 by a common
//! factor, so the maximized value is deformation-independent even though
//! the maximizer itself is not.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::phase_space::{NCParams, PhaseVector};
use crate::squeeze::{inv_cov_params, InvCovParams, SqueezeSpec};

/// Complex displacement amplitudes of the two modes; mode A occupies the
/// (x, px) plane and mode B the (y, py) plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Displacement {
    pub alpha1: Complex64,
    pub alpha2: Complex64,
}

impl Displacement {
    pub fn new(alpha1: Complex64, alpha2: Complex64) -> Self {
        Self { alpha1, alpha2 }
    }

    /// Canonical dichotomic pair alpha1 = +sqrt(I), alpha2 = -sqrt(I) for a
    /// squared displacement magnitude I >= 0. This is the sign choice under
    /// which the four-term functional reproduces the closed form
    /// [`bell_closed`].
    pub fn from_intensity(intensity: f64) -> Result<Self> {
        if !intensity.is_finite() || intensity < 0.0 {
            return Err(Error::NegativeIntensity(intensity));
        }
        let root = intensity.sqrt();
        Ok(Self {
            alpha1: Complex64::new(root, 0.0),
            alpha2: Complex64::new(-root, 0.0),
        })
    }
}

/// Evaluate the four-term Bell-CHSH functional directly from the Wigner
/// function. A displacement amplitude a = u + iv for mode A means the phase
/// point (u, v, 0, 0), and likewise for mode B on (0, 0, u, v).
pub fn bell_from_wigner(state: &GaussianState, d: &Displacement) -> f64 {
    let origin = PhaseVector::zeros();
    let first = PhaseVector::new(d.alpha1.re, d.alpha1.im, 0.0, 0.0);
    let second = PhaseVector::new(0.0, 0.0, d.alpha2.re, d.alpha2.im);
    let both = PhaseVector::new(d.alpha1.re, d.alpha1.im, d.alpha2.re, d.alpha2.im);
    let quarter_pi2 = std::f64::consts::PI * std::f64::consts::PI / 4.0;
    quarter_pi2
        * (state.wigner(&origin) + state.wigner(&first) + state.wigner(&second)
            - state.wigner(&both))
}

/// Closed-form Bell functional on the squeezed family at squared
/// displacement magnitude `intensity`.
pub fn bell_closed(intensity: f64, params: &InvCovParams) -> Result<f64> {
    if !intensity.is_finite() || intensity < 0.0 {
        return Err(Error::NegativeIntensity(intensity));
    }
    let near = 2.0 * (-0.5 * params.n * intensity).exp();
    let far = (-(params.n - params.t1) * intensity).exp();
    Ok(0.25 * (1.0 + near - far))
}

/// Stationary point of [`bell_closed`]:
/// I = 2/(n - 2 t1) * ln((n - t1)/n).
pub fn optimal_displacement(params: &InvCovParams) -> Result<f64> {
    let (n, t1) = (params.n, params.t1);
    if !n.is_finite() || !t1.is_finite() || n <= 0.0 || n - t1 <= 0.0 || n - 2.0 * t1 == 0.0 {
        return Err(Error::UnphysicalBellParams { n, t1 });
    }
    Ok(2.0 / (n - 2.0 * t1) * ((n - t1) / n).ln())
}

/// Bell value at the optimal displacement, by substitution into
/// [`bell_closed`]. Algebraically this equals
/// `1/4 [1 + (n - 2 t1)/(n - t1) * (1 - t1/n)^(-n/(n - 2 t1))]`
/// and depends on (n, t1) only through the ratio t1/n.
pub fn bell_at_optimum(params: &InvCovParams) -> Result<f64> {
    bell_closed(optimal_displacement(params)?, params)
}

/// Optimal displacement of the deformed squeezed state; the deformation
/// enters through the common rescaling of n and t1.
pub fn optimal_displacement_nc(spec: &SqueezeSpec, p: &NCParams) -> Result<f64> {
    optimal_displacement(&inv_cov_params(spec, p))
}

/// Maximized Bell value of the deformed state minus the commutative one at
/// the same squeezing. Zero to roundoff for every admissible (theta, eta).
pub fn nc_commutative_gap(spec: &SqueezeSpec, p: &NCParams) -> Result<f64> {
    let deformed = bell_at_optimum(&inv_cov_params(spec, p))?;
    let commutative = bell_at_optimum(&inv_cov_params(spec, &NCParams::commutative()))?;
    Ok(deformed - commutative)
}

/// Non-locality criterion |B| > 2.
pub fn is_nonlocal(b: f64) -> bool {
    b.abs() > 2.0
}

const INV_GOLDEN: f64 = 0.618_033_988_749_894_8;

/// Brute-force maximizer of [`bell_closed`] over [0, i_max]: dense scan
/// followed by golden-section refinement on the bracketing interval.
/// Ties on a flat start resolve toward 0.
pub fn grid_maximize(params: &InvCovParams, i_max: f64, points: usize) -> Result<(f64, f64)> {
    if !i_max.is_finite() || i_max <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "grid end must be positive and finite, got {i_max}"
        )));
    }
    if points < 3 {
        return Err(Error::InvalidArgument(format!(
            "grid needs at least 3 points, got {points}"
        )));
    }
    let coord = |k: usize| i_max * k as f64 / (points - 1) as f64;
    let mut best_k = 0;
    let mut best = f64::NEG_INFINITY;
    for k in 0..points {
        let value = bell_closed(coord(k), params)?;
        if value > best {
            best = value;
            best_k = k;
        }
    }
    let mut a = coord(best_k.saturating_sub(1));
    let mut b = coord((best_k + 1).min(points - 1));

    let f = |x: f64| bell_closed(x, params).expect("non-negative grid point");
    let mut x1 = b - INV_GOLDEN * (b - a);
    let mut x2 = a + INV_GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if b - a <= 1e-12 {
            break;
        }
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_GOLDEN * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_GOLDEN * (b - a);
            f2 = f(x2);
        }
    }
    let i_star = 0.5 * (a + b);
    Ok((i_star, f(i_star)))
}

/// Bell summary of one (r, theta, eta) point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellResult {
    /// Optimal squared displacement magnitude of the deformed state.
    pub i_opt: f64,
    /// Bell value there.
    pub b_opt: f64,
    /// Maximized Bell value of the commutative state at the same squeezing.
    pub b_commutative: f64,
    /// b_opt - b_commutative.
    pub gap: f64,
    /// |b_opt| > 2.
    pub nonlocal: bool,
}

/// Evaluate the maximized Bell functional and its commutative baseline.
pub fn bell_report(spec: &SqueezeSpec, p: &NCParams) -> Result<BellResult> {
    let params = inv_cov_params(spec, p);
    let i_opt = optimal_displacement(&params)?;
    let b_opt = bell_closed(i_opt, &params)?;
    let b_commutative = bell_at_optimum(&inv_cov_params(spec, &NCParams::commutative()))?;
    Ok(BellResult {
        i_opt,
        b_opt,
        b_commutative,
        gap: b_opt - b_commutative,
        nonlocal: is_nonlocal(b_opt),
    })
}
