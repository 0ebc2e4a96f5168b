//! Sonic analogue horizons as an entanglement source, end to end: decompose
//! a transonic background flow into an acoustic metric, locate the horizon
//! and its surface gravity, map the surface gravity to the two-mode squeeze
//! parameter of the emitted radiation, build the squeezed vacuum over a
//! truncated number basis, and drive the number-phase teleportation protocol
//! on top of it — including the closed-form coherent-target fidelity and
//! fidelity-versus-temperature sweeps.
//!
//! The `soniq` binary exposes the batch pipeline; see the crate README for
//! the config format and CLI usage.

pub mod config;
pub mod error;
pub mod flow;
pub mod fock;
pub mod horizon;
pub mod metric;
pub mod pipeline;
pub mod squeeze;
pub mod teleport;
pub mod units;

pub use error::{Error, Result};
pub use flow::{
    madelung_decompose, validate_stationary_flow, ContinuityReport, FlowKind, FlowProfile,
    MadelungResult,
};
pub use fock::{
    auto_cutoff, coherent_state, entanglement_entropy, fidelity_pure, reduced_state,
    schmidt_spectrum, squeezed_vacuum_exponential, two_mode_squeezed_vacuum, CoherentSpec,
    CoherentState, DensityOperator, FockVector, Mode, TwoModeState,
};
pub use horizon::{
    alpha_for_temperature, find_horizon, hawking_temperature, scan_horizons, HorizonData,
};
pub use metric::{acoustic_metric_at, near_horizon_metric, MetricComponents};
pub use squeeze::{bogoliubov_pair, mean_occupation, squeeze_parameter, BogoliubovPair, SqueezeSpec};
pub use teleport::{
    analytic_fidelity_zero, fidelity_temperature_sweep, haar_random_unitary, mb_conditional,
    mb_conditional_literal, teleport_general, MbLabel, MeasurementSpec, OutcomeSign, SweepRow,
    TeleportOutcome,
};
pub use units::{UnitKind, UnitSystem};
