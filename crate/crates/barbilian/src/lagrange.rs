//! The quadrant's velocity-dependent tensor and its classification.
//!
//! On the positive quadrant the tangent-circle factor keeps a direction
//! dependence, so ds² = g11(x, y, ẋ, ẏ)(dx² + dy²) is a generalized Lagrange
//! metric: zero-homogeneous in the velocity, positive definite, but failing
//! the Cartan symmetry that would make it a Finsler (or Lagrange) metric.
//! The failure is exhibited by comparing ∂g₁₁/∂ẏ with ∂g₁₂/∂ẋ, which would
//! coincide for a metric derived from a Finsler energy.

use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::metric::quadrant_lambda;

/// Velocity scalings used by [`check_homogeneity`].
pub const HOMOGENEITY_SCALES: [f64; 3] = [2.0, 10.0, 0.1];

/// Two velocity derivatives agreeing within this tolerance count as
/// symmetric in the Cartan sense.
pub const CARTAN_SYMMETRY_TOL: f64 = 1e-6;

/// Relative step for the velocity derivatives in [`cartan_asymmetry`].
pub const CARTAN_STEP_FACTOR: f64 = 1e-5;

fn validate_point(p: Point2) -> Result<()> {
    if p.x > 0.0 && p.y > 0.0 {
        Ok(())
    } else {
        Err(Error::OutsideDomain(format!("{p:?} is not inside the positive quadrant")))
    }
}

fn validate_velocity(v: (f64, f64)) -> Result<f64> {
    let speed = v.0.hypot(v.1);
    if speed > 0.0 && speed.is_finite() {
        Ok(speed)
    } else {
        Err(Error::InvalidParameter(format!("velocity {v:?} must be nonzero and finite")))
    }
}

/// g₁₁ = λ(x, y, ẋ, ẏ)² with λ the quadrant tangent-circle factor.
pub fn g11(p: Point2, v: (f64, f64)) -> Result<f64> {
    validate_point(p)?;
    validate_velocity(v)?;
    let l = quadrant_lambda(p, v);
    Ok(l * l)
}

/// The off-diagonal entry, identically zero for this conformal tensor.
pub fn g12(p: Point2, v: (f64, f64)) -> Result<f64> {
    validate_point(p)?;
    validate_velocity(v)?;
    Ok(0.0)
}

/// Velocity derivatives that decide the Cartan symmetry question.
#[derive(Clone, Copy, Debug)]
pub struct CartanReport {
    /// ∂g₁₁/∂ẏ by central differences.
    pub dg11_dydot: f64,
    /// ∂g₁₂/∂ẋ by central differences (zero, since g₁₂ vanishes).
    pub dg12_dxdot: f64,
    /// Whether the two agree within [`CARTAN_SYMMETRY_TOL`].
    pub symmetric: bool,
}

/// Central-difference velocity derivatives of the tensor at (p, v).
///
/// The velocity must point into the open right half plane with enough room
/// for the ẋ-step, so every probed velocity stays in the branch the closed
/// form is written for.
pub fn cartan_asymmetry(p: Point2, v: (f64, f64)) -> Result<CartanReport> {
    validate_point(p)?;
    let speed = validate_velocity(v)?;
    let h = CARTAN_STEP_FACTOR * speed;
    if v.0 - h <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "velocity {v:?} must keep a positive ẋ component across the step {h:.3e}"
        )));
    }
    let dg11_dydot =
        (g11(p, (v.0, v.1 + h))? - g11(p, (v.0, v.1 - h))?) / (2.0 * h);
    let dg12_dxdot =
        (g12(p, (v.0 + h, v.1))? - g12(p, (v.0 - h, v.1))?) / (2.0 * h);
    let symmetric = (dg11_dydot - dg12_dxdot).abs() <= CARTAN_SYMMETRY_TOL;
    Ok(CartanReport { dg11_dydot, dg12_dxdot, symmetric })
}

/// Largest relative change of g₁₁ under the velocity scalings of
/// [`HOMOGENEITY_SCALES`]. Zero-homogeneity keeps this at rounding level.
pub fn check_homogeneity(p: Point2, v: (f64, f64)) -> Result<f64> {
    let base = g11(p, v)?;
    let mut worst: f64 = 0.0;
    for s in HOMOGENEITY_SCALES {
        let scaled = g11(p, (s * v.0, s * v.1))?;
        worst = worst.max((scaled - base).abs() / base);
    }
    Ok(worst)
}

/// Positive-definiteness of the tensor at (p, v): g₁₁ > 0 and the
/// determinant g₁₁ g₂₂ - g₁₂² = g₁₁² > 0.
pub fn positive_definite(p: Point2, v: (f64, f64)) -> Result<bool> {
    let a = g11(p, v)?;
    let b = g12(p, v)?;
    Ok(a > 0.0 && a * a - b * b > 0.0)
}
