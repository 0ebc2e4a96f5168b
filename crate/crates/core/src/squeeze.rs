//! Map from mode frequency and surface gravity to the two-mode squeeze
//! parameter of the radiation emitted at the sonic horizon.
//!
//! The horizon mixes the mode pair straddling it through a hyperbolic
//! (Bogoliubov) rotation whose strength is fixed by the ratio omega/alpha:
//!
//! ```text
//! tanh r = exp(-pi omega / alpha)
//! ```
//!
//! which makes the reduced single-mode spectrum Planckian with mean
//! occupation nbar = 1/(exp(2 pi omega/alpha) - 1) = sinh^2 r.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A mode frequency, a surface gravity, and the squeeze parameter they imply.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezeSpec {
    /// Mode angular frequency, 1/time.
    pub omega: f64,
    /// Surface gravity, 1/time.
    pub alpha: f64,
    /// Squeeze parameter, dimensionless, >= 0.
    pub r: f64,
}

impl SqueezeSpec {
    pub fn tanh_r(&self) -> f64 {
        self.r.tanh()
    }

    pub fn cosh_r(&self) -> f64 {
        self.r.cosh()
    }

    pub fn sinh_r(&self) -> f64 {
        self.r.sinh()
    }

    /// Mean occupation of either reduced mode, sinh^2 r.
    pub fn mean_occupation(&self) -> f64 {
        let s = self.r.sinh();
        s * s
    }
}

/// Bogoliubov coefficient pair (cosh r, sinh r) multiplying (d, d~^dagger)
/// in the canonical mode mixing across the horizon; u^2 - v^2 = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BogoliubovPair {
    pub u: f64,
    pub v: f64,
}

fn check_positive_ratio(omega: f64, alpha: f64) -> Result<()> {
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::NonPositiveFrequency { value: omega });
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::NonPositiveAlpha { value: alpha });
    }
    Ok(())
}

/// Squeeze parameter r = atanh(exp(-pi omega/alpha)).
///
/// Below ratio pi omega/alpha = 1 the argument of atanh approaches 1 and
/// the naive form cancels catastrophically; there the log-stable form
/// r = -ln(tanh(pi omega/(2 alpha)))/2 is used instead. Above the crossover
/// the exponential is small and plain atanh keeps full relative precision
/// (the log form would lose it through ln(1 - eps)).
pub fn squeeze_parameter(omega: f64, alpha: f64) -> Result<SqueezeSpec> {
    check_positive_ratio(omega, alpha)?;
    let z = PI * omega / alpha;
    let r = if z < 1.0 {
        -0.5 * (0.5 * z).tanh().ln()
    } else {
        f64::atanh((-z).exp())
    };
    debug_assert!(
        (r.tanh() - (-PI * omega / alpha).exp()).abs() <= 1e-14,
        "tanh r must reproduce exp(-pi omega/alpha)"
    );
    Ok(SqueezeSpec { omega, alpha, r })
}

/// The (u, v) = (cosh r, sinh r) coefficient pair of the canonical mixing.
pub fn bogoliubov_pair(spec: &SqueezeSpec) -> BogoliubovPair {
    let pair = BogoliubovPair {
        u: spec.r.cosh(),
        v: spec.r.sinh(),
    };
    // Relative to u^2: the difference of the two squares loses absolute
    // precision once cosh r is large.
    debug_assert!((pair.u * pair.u - pair.v * pair.v - 1.0).abs() <= 1e-12 * pair.u * pair.u);
    pair
}

/// Mean particle number of the reduced horizon mode,
/// nbar = 1/(exp(2 pi omega/alpha) - 1).
///
/// Computed through expm1 for accuracy at both ends of the ratio; checked
/// against the independent sinh^2 r route in debug builds.
pub fn mean_occupation(omega: f64, alpha: f64) -> Result<f64> {
    check_positive_ratio(omega, alpha)?;
    let nbar = 1.0 / (2.0 * PI * omega / alpha).exp_m1();
    #[cfg(debug_assertions)]
    {
        // Cross-check against sinh^2 r wherever the squeeze parameter is
        // still representable (it underflows to zero once
        // exp(-pi omega/alpha) drops below machine epsilon).
        let via_sinh = squeeze_parameter(omega, alpha)?.mean_occupation();
        debug_assert!(
            via_sinh == 0.0 || (nbar - via_sinh).abs() <= 1e-12 * nbar.max(via_sinh),
            "Planck form and sinh^2 r disagree: {nbar} vs {via_sinh}"
        );
    }
    Ok(nbar)
}
