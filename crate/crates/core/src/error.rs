//! Crate-wide error type and exit-status classification.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("amplitude {amplitude:.3e} at grid index {index} is below the floor {floor:.1e}; phase undefined")]
    ZeroAmplitude {
        index: usize,
        amplitude: f64,
        floor: f64,
    },
    #[error("grid has {len} points, need at least {min}")]
    GridTooSmall { len: usize, min: usize },
    #[error("radius {radius} lies outside the profile domain [{min}, {max}]")]
    OutOfDomain { radius: f64, min: f64, max: f64 },
    #[error("r = {radius} is exactly on the horizon; g_rr is undefined there")]
    AtHorizon { radius: f64 },
    #[error("flow never crosses the sound speed; no sonic horizon")]
    NoHorizon,
    #[error("flow touches the sound speed near r = {radius} without crossing it")]
    NonTransonic { radius: f64 },
    #[error("surface gravity must be positive, got {value}")]
    NonPositiveAlpha { value: f64 },
    #[error("mode frequency must be positive, got {value}")]
    NonPositiveFrequency { value: f64 },
    #[error("temperature must be positive, got {value}")]
    NonPositiveTemperature { value: f64 },
    #[error("unit constant {name} must be positive, got {value}")]
    NonPositiveUnit { name: &'static str, value: f64 },
    #[error("squeeze parameter must be non-negative, got {value}")]
    NegativeSqueeze { value: f64 },
    #[error("cutoff {cutoff} too small: {reason}")]
    CutoffTooSmall { cutoff: usize, reason: String },
    #[error("state is not normalized: |norm^2 - 1| = {deviation:.3e}")]
    NotNormalized { deviation: f64 },
    #[error("density operator eigenvalue {value:.3e} is below the clipping window")]
    NegativeEigenvalue { value: f64 },
    #[error("measurement factor {which} is not unitary: max |S^H S - I| = {deviation:.3e}")]
    NonUnitaryMeasurement { which: &'static str, deviation: f64 },
    #[error("number shift {shift} exceeds the cutoff {cutoff}")]
    ShiftOutOfRange { shift: usize, cutoff: usize },
    #[error("config parse error at line {line}: {message}")]
    ConfigParse { line: usize, message: String },
    #[error("config validation error on '{field}': {message}")]
    ConfigValidation { field: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable tag for single-line error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroAmplitude { .. } => "ZeroAmplitude",
            Error::GridTooSmall { .. } => "GridTooSmall",
            Error::OutOfDomain { .. } => "OutOfDomain",
            Error::AtHorizon { .. } => "AtHorizon",
            Error::NoHorizon => "NoHorizon",
            Error::NonTransonic { .. } => "NonTransonic",
            Error::NonPositiveAlpha { .. } => "NonPositiveAlpha",
            Error::NonPositiveFrequency { .. } => "NonPositiveFrequency",
            Error::NonPositiveTemperature { .. } => "NonPositiveTemperature",
            Error::NonPositiveUnit { .. } => "NonPositiveUnit",
            Error::NegativeSqueeze { .. } => "NegativeSqueeze",
            Error::CutoffTooSmall { .. } => "CutoffTooSmall",
            Error::NotNormalized { .. } => "NotNormalized",
            Error::NegativeEigenvalue { .. } => "NegativeEigenvalue",
            Error::NonUnitaryMeasurement { .. } => "NonUnitaryMeasurement",
            Error::ShiftOutOfRange { .. } => "ShiftOutOfRange",
            Error::ConfigParse { .. } => "ParseError",
            Error::ConfigValidation { .. } => "ValidationError",
            Error::Io(_) => "Io",
        }
    }

    /// Process exit status: 2 for configuration errors, 1 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ConfigParse { .. } | Error::ConfigValidation { .. } => 2,
            _ => 1,
        }
    }
}
