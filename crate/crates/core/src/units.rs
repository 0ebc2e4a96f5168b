//! Unit systems for temperature and frequency conversions.
//!
//! All formulas in this crate are covariant under a rescaling of hbar, the
//! Boltzmann constant, and the particle mass, so the default is natural units
//! hbar = k_B = m = 1. An SI preset is provided for laboratory-scale numbers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CODATA 2018 exact value, J s.
pub const SI_HBAR: f64 = 1.054_571_817e-34;
/// CODATA 2018 exact value, J/K.
pub const SI_BOLTZMANN: f64 = 1.380_649e-23;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitKind {
    Natural,
    Si,
    Custom,
}

/// The three dimensional constants entering the pipeline: hbar (action),
/// k_B (energy per temperature), and the particle mass m.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    pub hbar: f64,
    pub boltzmann: f64,
    pub mass: f64,
    pub kind: UnitKind,
}

impl UnitSystem {
    /// hbar = k_B = m = 1.
    pub fn natural() -> Self {
        UnitSystem {
            hbar: 1.0,
            boltzmann: 1.0,
            mass: 1.0,
            kind: UnitKind::Natural,
        }
    }

    /// SI constants; the particle mass defaults to 1 kg and should be set
    /// explicitly when the Madelung velocity scale matters.
    pub fn si() -> Self {
        UnitSystem {
            hbar: SI_HBAR,
            boltzmann: SI_BOLTZMANN,
            mass: 1.0,
            kind: UnitKind::Si,
        }
    }

    pub fn custom(hbar: f64, boltzmann: f64, mass: f64) -> Result<Self> {
        for (name, value) in [("hbar", hbar), ("boltzmann", boltzmann), ("mass", mass)] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::NonPositiveUnit { name, value });
            }
        }
        Ok(UnitSystem {
            hbar,
            boltzmann,
            mass,
            kind: UnitKind::Custom,
        })
    }

    /// Label used in output metadata.
    pub fn label(&self) -> &'static str {
        match self.kind {
            UnitKind::Natural => "natural",
            UnitKind::Si => "SI",
            UnitKind::Custom => "custom",
        }
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        UnitSystem::natural()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_positive() {
        for units in [UnitSystem::natural(), UnitSystem::si()] {
            assert!(units.hbar > 0.0);
            assert!(units.boltzmann > 0.0);
            assert!(units.mass > 0.0);
        }
    }

    #[test]
    fn custom_rejects_nonpositive_constants() {
        assert!(matches!(
            UnitSystem::custom(0.0, 1.0, 1.0),
            Err(Error::NonPositiveUnit { name: "hbar", .. })
        ));
        assert!(matches!(
            UnitSystem::custom(1.0, -2.0, 1.0),
            Err(Error::NonPositiveUnit {
                name: "boltzmann",
                ..
            })
        ));
        assert!(UnitSystem::custom(1.0, 1.0, f64::NAN).is_err());
    }
}
