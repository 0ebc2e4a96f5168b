//! Acoustic line element of a radial flow, with the angular sector dropped:
//!
//! ```text
//! ds^2 = (rho0/c) [ (c^2 - v0^2) dtau^2 - c^2/(c^2 - v0^2) dr^2 ]
//! ```
//!
//! and its near-horizon expansion with v0 = -c + alpha (r - r_H):
//!
//! ```text
//! ds^2 = (rho0/c) [ 2 c alpha (r - r_H) dtau^2 - c dr^2 / (2 alpha (r - r_H)) ]
//! ```
//!
//! The two components always satisfy g_tt g_rr = -rho0^2 away from the
//! horizon. Where |v0| = c the radial component diverges; it is reported as
//! a flag rather than an infinity so nothing downstream does arithmetic on
//! it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowProfile;
use crate::horizon::HorizonData;

/// Relative gap |1 - |v0|/c| under which a point counts as on-horizon.
pub const HORIZON_DETECTION_TOL: f64 = 1e-14;
/// Fraction of r_H beyond which the near-horizon form is extrapolating.
pub const NEAR_HORIZON_VALIDITY_FRACTION: f64 = 0.1;

/// Metric components at one radius. `g_rr` is `None` exactly on the
/// horizon, where `on_horizon` is set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricComponents {
    pub radius: f64,
    /// rho0 / c.
    pub conformal_factor: f64,
    pub g_tt: f64,
    pub g_rr: Option<f64>,
    pub on_horizon: bool,
    /// Set by the near-horizon form when |r - r_H| exceeds 10% of r_H.
    pub extrapolation_warning: bool,
}

/// Exact components of the acoustic metric at radius r.
pub fn acoustic_metric_at(profile: &FlowProfile, r: f64) -> Result<MetricComponents> {
    let v = profile.velocity_at(r)?;
    let rho = profile.density_at(r)?;
    let c = profile.sound_speed();
    let conformal_factor = rho / c;
    let speed = v.abs();
    if ((speed - c) / c).abs() <= HORIZON_DETECTION_TOL {
        return Ok(MetricComponents {
            radius: r,
            conformal_factor,
            g_tt: 0.0,
            g_rr: None,
            on_horizon: true,
            extrapolation_warning: false,
        });
    }
    // (c - |v|)(c + |v|) rather than c^2 - v^2: no cancellation near the
    // horizon.
    let gap = (c - speed) * (c + speed);
    Ok(MetricComponents {
        radius: r,
        conformal_factor,
        g_tt: conformal_factor * gap,
        g_rr: Some(-conformal_factor * c * c / gap),
        on_horizon: false,
        extrapolation_warning: false,
    })
}

/// First-order (Schwarzschild-like) components near the horizon, with the
/// density frozen at its horizon value.
pub fn near_horizon_metric(
    horizon: &HorizonData,
    rho0: f64,
    sound_speed: f64,
    r: f64,
) -> Result<MetricComponents> {
    if !(rho0 > 0.0) {
        return Err(Error::NonPositiveUnit {
            name: "rho0",
            value: rho0,
        });
    }
    if !(sound_speed > 0.0) {
        return Err(Error::NonPositiveUnit {
            name: "sound_speed",
            value: sound_speed,
        });
    }
    let delta = r - horizon.radius;
    if delta == 0.0 {
        return Err(Error::AtHorizon { radius: r });
    }
    let alpha = horizon.surface_gravity;
    let conformal_factor = rho0 / sound_speed;
    Ok(MetricComponents {
        radius: r,
        conformal_factor,
        g_tt: conformal_factor * 2.0 * sound_speed * alpha * delta,
        g_rr: Some(-conformal_factor * sound_speed / (2.0 * alpha * delta)),
        on_horizon: false,
        extrapolation_warning: delta.abs() > NEAR_HORIZON_VALIDITY_FRACTION * horizon.radius,
    })
}
