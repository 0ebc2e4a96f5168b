//! Sonic-horizon location, surface gravity, and the Hawking temperature map.
//!
//! A horizon is a radius where the flow speed crosses the sound speed. The
//! surface gravity alpha = |d|v0|/dr| there sets the emission temperature
//! T = hbar alpha / (2 pi k_B).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::FlowProfile;
use crate::units::UnitSystem;

/// Residual |  |v0| - c | accepted at a refined root, relative to c.
pub const HORIZON_RESIDUAL_TOL: f64 = 1e-10;

/// One sonic horizon of a profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HorizonData {
    /// Radius where |v0| = c.
    pub radius: f64,
    /// alpha = |d|v0|/dr| at the horizon, 1/time.
    pub surface_gravity: f64,
    /// hbar alpha / (2 pi k_B) in the unit system used to find it.
    pub temperature: f64,
    /// The outermost crossing is the acoustic event horizon.
    pub is_event_horizon: bool,
}

/// T = hbar alpha / (2 pi k_B).
pub fn hawking_temperature(alpha: f64, units: &UnitSystem) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::NonPositiveAlpha { value: alpha });
    }
    Ok(units.hbar * alpha / (std::f64::consts::TAU * units.boltzmann))
}

/// Inverse map: alpha = 2 pi k_B T / hbar.
pub fn alpha_for_temperature(temperature: f64, units: &UnitSystem) -> Result<f64> {
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(Error::NonPositiveTemperature { value: temperature });
    }
    Ok(std::f64::consts::TAU * units.boltzmann * temperature / units.hbar)
}

/// All sonic horizons of the profile, ascending in radius; the outermost is
/// flagged as the acoustic event horizon.
///
/// Crossings are bracketed on the grid and refined by bisection on the
/// profile's own evaluation (closed form for analytic kinds, interpolant for
/// tabulated ones). A flow that merely touches the sound speed is reported
/// as `NonTransonic`; one that never reaches it as `NoHorizon`.
pub fn scan_horizons(profile: &FlowProfile, units: &UnitSystem) -> Result<Vec<HorizonData>> {
    let c = profile.sound_speed();
    let grid = profile.grid();
    let gap = |r: f64| -> Result<f64> { Ok(profile.velocity_at(r)?.abs() - c) };

    let mut samples = Vec::with_capacity(grid.len());
    for &r in grid {
        samples.push(gap(r)?);
    }

    let mut roots: Vec<f64> = Vec::new();
    let mut touches: Vec<f64> = Vec::new();
    for (i, &f) in samples.iter().enumerate() {
        if f != 0.0 {
            continue;
        }
        // An exact-zero node is a crossing only if the nearest nonzero
        // samples on both sides have opposite signs; otherwise the flow
        // merely touches the sound speed there.
        let left = samples[..i].iter().rev().find(|&&g| g != 0.0);
        let right = samples[i + 1..].iter().find(|&&g| g != 0.0);
        match (left, right) {
            (Some(&l), Some(&r)) if l * r < 0.0 => push_root(&mut roots, grid[i]),
            _ => touches.push(grid[i]),
        }
    }
    for (i, window) in samples.windows(2).enumerate() {
        let (fa, fb) = (window[0], window[1]);
        if fa * fb < 0.0 {
            let root = bisect(&gap, grid[i], grid[i + 1], fa)?;
            push_root(&mut roots, root);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());

    if roots.is_empty() {
        if let Some(&radius) = touches.first() {
            return Err(Error::NonTransonic { radius });
        }
        let (argmin, min_gap) = samples
            .iter()
            .enumerate()
            .map(|(i, f)| (i, f.abs()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        if min_gap <= 1e-9 * c {
            return Err(Error::NonTransonic {
                radius: grid[argmin],
            });
        }
        return Err(Error::NoHorizon);
    }

    let mut horizons = Vec::with_capacity(roots.len());
    for &root in &roots {
        let residual = gap(root)?.abs();
        debug_assert!(residual <= HORIZON_RESIDUAL_TOL * c);
        let slope = profile.speed_gradient_at(root)?;
        let alpha = slope.abs();
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::NonTransonic { radius: root });
        }
        horizons.push(HorizonData {
            radius: root,
            surface_gravity: alpha,
            temperature: hawking_temperature(alpha, units)?,
            is_event_horizon: false,
        });
    }
    horizons.last_mut().unwrap().is_event_horizon = true;
    Ok(horizons)
}

/// The acoustic event horizon (outermost crossing) of the profile.
pub fn find_horizon(profile: &FlowProfile, units: &UnitSystem) -> Result<HorizonData> {
    Ok(scan_horizons(profile, units)?.pop().unwrap())
}

fn push_root(roots: &mut Vec<f64>, root: f64) {
    let tol = 1e-12 * root.abs().max(1.0);
    if roots.iter().all(|&r| (r - root).abs() > tol) {
        roots.push(root);
    }
}

fn bisect(f: &dyn Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, mut fa: f64) -> Result<f64> {
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fa * fm < 0.0 {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn linear_profile_recovers_construction() {
        let profile = FlowProfile::analytic_linear(1.0, 2.0, 0.5, 1.0, None).unwrap();
        let h = find_horizon(&profile, &UnitSystem::natural()).unwrap();
        assert_relative_eq!(h.radius, 2.0, max_relative = 1e-12);
        assert_relative_eq!(h.surface_gravity, 0.5, max_relative = 1e-12);
        assert_relative_eq!(
            h.temperature,
            0.5 / std::f64::consts::TAU,
            max_relative = 1e-15
        );
        assert!(h.is_event_horizon);
    }

    #[test]
    fn power_law_profile_analytic_gradient() {
        // v0 = -c R^2/r^2: horizon at R, alpha = 2c/R.
        let profile = FlowProfile::analytic_power_law(1.0, 1.0, 2.0, 1.0, None).unwrap();
        let h = find_horizon(&profile, &UnitSystem::natural()).unwrap();
        assert_relative_eq!(h.radius, 1.0, max_relative = 1e-12);
        assert_relative_eq!(h.surface_gravity, 2.0, max_relative = 1e-12);
    }

    #[test]
    fn subsonic_flow_has_no_horizon() {
        let grid: Vec<f64> = (0..32).map(|i| 1.0 + i as f64 * 0.1).collect();
        let velocity = vec![-0.5; grid.len()];
        let profile = FlowProfile::tabulated(grid, vec![1.0; 32], velocity, 1.0).unwrap();
        assert!(matches!(
            find_horizon(&profile, &UnitSystem::natural()),
            Err(Error::NoHorizon)
        ));
    }

    #[test]
    fn touching_flow_is_nontransonic() {
        // |v| rises to exactly c at one node and falls back.
        let grid: Vec<f64> = (0..51).map(|i| 1.0 + i as f64 * 0.04).collect();
        let velocity: Vec<f64> = grid
            .iter()
            .map(|&r| -(1.0 - (r - 2.0) * (r - 2.0)))
            .collect();
        let profile = FlowProfile::tabulated(grid, vec![1.0; 51], velocity, 1.0).unwrap();
        assert!(matches!(
            find_horizon(&profile, &UnitSystem::natural()),
            Err(Error::NonTransonic { .. })
        ));
    }

    #[test]
    fn multiple_crossings_sorted_with_outermost_flagged() {
        // Linear profile sampled wide enough to include the outgoing
        // supersonic branch: |v| = c again at R + 2c/alpha.
        let grid: Vec<f64> = (0..2001).map(|i| 1.0 + i as f64 * 0.003).collect();
        let profile = FlowProfile::analytic_linear(1.0, 2.0, 0.5, 1.0, Some(grid)).unwrap();
        let horizons = scan_horizons(&profile, &UnitSystem::natural()).unwrap();
        assert_eq!(horizons.len(), 2);
        assert_relative_eq!(horizons[0].radius, 2.0, max_relative = 1e-10);
        assert_relative_eq!(horizons[1].radius, 6.0, max_relative = 1e-10);
        assert!(!horizons[0].is_event_horizon);
        assert!(horizons[1].is_event_horizon);
    }

    #[test]
    fn temperature_spot_values() {
        let natural = UnitSystem::natural();
        assert_relative_eq!(
            hawking_temperature(std::f64::consts::TAU, &natural).unwrap(),
            1.0,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            hawking_temperature(1.0, &natural).unwrap(),
            0.159_154_943_091_895_35,
            max_relative = 1e-15
        );
    }

    #[test]
    fn si_temperature_round_trip() {
        let si = UnitSystem::si();
        let alpha = alpha_for_temperature(200e-9, &si).unwrap();
        assert_relative_eq!(alpha, 1.645_193_503_435e5, max_relative = 1e-10);
        let back = hawking_temperature(alpha, &si).unwrap();
        assert_relative_eq!(back, 200e-9, max_relative = 1e-12);
    }

    #[test]
    fn conversion_rejects_nonpositive() {
        let u = UnitSystem::natural();
        assert!(matches!(
            hawking_temperature(0.0, &u),
            Err(Error::NonPositiveAlpha { .. })
        ));
        assert!(matches!(
            alpha_for_temperature(-1.0, &u),
            Err(Error::NonPositiveTemperature { .. })
        ));
    }

    #[test]
    fn extreme_surface_gravities() {
        for &alpha in &[1e-3, 1.0, 1e3] {
            let profile = FlowProfile::analytic_linear(1.0, 2.0, alpha, 1.0, None).unwrap();
            let h = find_horizon(&profile, &UnitSystem::natural()).unwrap();
            assert!((h.radius - 2.0).abs() <= 1e-10 * 2.0);
            assert!((h.surface_gravity - alpha).abs() <= 1e-10 * alpha);
        }
    }
}
