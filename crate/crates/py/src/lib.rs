//! Python bindings for the main soniq types and operations: horizon
//! extraction, the squeeze map, squeezed-vacuum diagnostics, and the
//! number-phase teleportation protocol.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use soniq::fock::{CoherentSpec, FockVector, Mode};
use soniq::teleport::OutcomeSign;
use soniq::units::UnitSystem;

fn err(e: soniq::Error) -> PyErr {
    PyValueError::new_err(format!("{} ({})", e, e.kind()))
}

fn units_from_name(name: &str) -> PyResult<UnitSystem> {
    match name {
        "natural" => Ok(UnitSystem::natural()),
        "si" | "SI" => Ok(UnitSystem::si()),
        other => Err(PyValueError::new_err(format!(
            "units must be 'natural' or 'si', got '{other}'"
        ))),
    }
}

fn sign_from_name(name: &str) -> PyResult<OutcomeSign> {
    match name {
        "+" | "plus" => Ok(OutcomeSign::Plus),
        "-" | "minus" => Ok(OutcomeSign::Minus),
        other => Err(PyValueError::new_err(format!(
            "sign must be '+' or '-', got '{other}'"
        ))),
    }
}

fn target_from_amplitudes(amplitudes: Vec<Complex64>) -> PyResult<FockVector> {
    FockVector::from_amplitudes(amplitudes).map_err(err)
}

/// A sonic horizon: radius, surface gravity, and Hawking temperature.
#[pyclass(get_all, frozen, skip_from_py_object)]
#[derive(Clone)]
struct Horizon {
    radius: f64,
    surface_gravity: f64,
    temperature: f64,
}

#[pymethods]
impl Horizon {
    fn __repr__(&self) -> String {
        format!(
            "Horizon(radius={}, surface_gravity={}, temperature={})",
            self.radius, self.surface_gravity, self.temperature
        )
    }
}

/// Squeeze parameter of the horizon pair for a mode frequency and surface
/// gravity, with its derived quantities.
#[pyclass(get_all, frozen, skip_from_py_object)]
#[derive(Clone)]
struct Squeeze {
    omega: f64,
    alpha: f64,
    r: f64,
    tanh_r: f64,
    nbar: f64,
}

#[pymethods]
impl Squeeze {
    fn __repr__(&self) -> String {
        format!(
            "Squeeze(omega={}, alpha={}, r={}, tanh_r={}, nbar={})",
            self.omega, self.alpha, self.r, self.tanh_r, self.nbar
        )
    }
}

/// One conditional teleportation outcome.
#[pyclass(get_all, frozen, skip_from_py_object)]
#[derive(Clone)]
struct Outcome {
    output: Vec<Complex64>,
    probability: f64,
    fidelity: f64,
    k: usize,
    sign: String,
}

#[pymethods]
impl Outcome {
    fn __repr__(&self) -> String {
        format!(
            "Outcome(k={}, sign='{}', probability={}, fidelity={})",
            self.k, self.sign, self.probability, self.fidelity
        )
    }
}

/// One row of a fidelity-versus-surface-gravity sweep.
#[pyclass(get_all, frozen, skip_from_py_object)]
#[derive(Clone)]
struct SweepPoint {
    alpha: f64,
    temperature: f64,
    r: f64,
    nbar: f64,
    f_analytic: f64,
    f_simulated: f64,
    p0: f64,
}

#[pymethods]
impl SweepPoint {
    fn __repr__(&self) -> String {
        format!(
            "SweepPoint(alpha={}, temperature={}, r={}, F_analytic={}, F_simulated={}, p0={})",
            self.alpha, self.temperature, self.r, self.f_analytic, self.f_simulated, self.p0
        )
    }
}

fn outcome_from(core: soniq::TeleportOutcome) -> Outcome {
    let (k, sign) = match core.label {
        Some(label) => (label.k, label.sign.to_string()),
        None => (0, "+".to_string()),
    };
    Outcome {
        output: core.output.amplitudes().iter().copied().collect(),
        probability: core.probability,
        fidelity: core.fidelity,
        k,
        sign,
    }
}

/// r = atanh(exp(-pi omega / alpha)) plus tanh r and the mean occupation.
#[pyfunction]
#[pyo3(name = "squeeze_parameter")]
fn squeeze_parameter_py(omega: f64, alpha: f64) -> PyResult<Squeeze> {
    let spec = soniq::squeeze_parameter(omega, alpha).map_err(err)?;
    Ok(Squeeze {
        omega: spec.omega,
        alpha: spec.alpha,
        r: spec.r,
        tanh_r: spec.tanh_r(),
        nbar: spec.mean_occupation(),
    })
}

/// Canonical Bogoliubov coefficients (cosh r, sinh r).
#[pyfunction]
#[pyo3(name = "bogoliubov_pair")]
fn bogoliubov_pair_py(omega: f64, alpha: f64) -> PyResult<(f64, f64)> {
    let spec = soniq::squeeze_parameter(omega, alpha).map_err(err)?;
    let pair = soniq::bogoliubov_pair(&spec);
    Ok((pair.u, pair.v))
}

/// Thermal occupation 1/(exp(2 pi omega/alpha) - 1).
#[pyfunction]
#[pyo3(name = "mean_occupation")]
fn mean_occupation_py(omega: f64, alpha: f64) -> PyResult<f64> {
    soniq::mean_occupation(omega, alpha).map_err(err)
}

/// T = hbar alpha / (2 pi k_B) in the named unit system.
#[pyfunction]
#[pyo3(name = "hawking_temperature", signature = (alpha, units = "natural"))]
fn hawking_temperature_py(alpha: f64, units: &str) -> PyResult<f64> {
    soniq::hawking_temperature(alpha, &units_from_name(units)?).map_err(err)
}

/// Inverse temperature map: alpha = 2 pi k_B T / hbar.
#[pyfunction]
#[pyo3(name = "alpha_for_temperature", signature = (temperature, units = "natural"))]
fn alpha_for_temperature_py(temperature: f64, units: &str) -> PyResult<f64> {
    soniq::alpha_for_temperature(temperature, &units_from_name(units)?).map_err(err)
}

/// Horizon of the linear transonic profile v0 = -c + alpha (r - radius).
#[pyfunction]
#[pyo3(name = "find_horizon_linear", signature = (c, radius, alpha, units = "natural"))]
fn find_horizon_linear_py(c: f64, radius: f64, alpha: f64, units: &str) -> PyResult<Horizon> {
    let profile = soniq::FlowProfile::analytic_linear(c, radius, alpha, 1.0, None).map_err(err)?;
    let h = soniq::find_horizon(&profile, &units_from_name(units)?).map_err(err)?;
    Ok(Horizon {
        radius: h.radius,
        surface_gravity: h.surface_gravity,
        temperature: h.temperature,
    })
}

/// Horizon of the power-law infall v0 = -c (radius/r)^exponent.
#[pyfunction]
#[pyo3(name = "find_horizon_power_law", signature = (c, radius, exponent, units = "natural"))]
fn find_horizon_power_law_py(c: f64, radius: f64, exponent: f64, units: &str) -> PyResult<Horizon> {
    let profile =
        soniq::FlowProfile::analytic_power_law(c, radius, exponent, 1.0, None).map_err(err)?;
    let h = soniq::find_horizon(&profile, &units_from_name(units)?).map_err(err)?;
    Ok(Horizon {
        radius: h.radius,
        surface_gravity: h.surface_gravity,
        temperature: h.temperature,
    })
}

/// Diagonal amplitudes tanh^n r / cosh r of the two-mode squeezed vacuum.
#[pyfunction]
#[pyo3(name = "squeezed_vacuum_diagonal")]
fn squeezed_vacuum_diagonal_py(r: f64, cutoff: usize) -> PyResult<Vec<f64>> {
    let s = soniq::two_mode_squeezed_vacuum(r, cutoff).map_err(err)?;
    Ok((0..=cutoff).map(|n| s.amplitude(n, n).re).collect())
}

/// Weight lost to truncation: tanh^{2 (cutoff + 1)} r.
#[pyfunction]
#[pyo3(name = "squeezed_vacuum_norm_deficit")]
fn squeezed_vacuum_norm_deficit_py(r: f64, cutoff: usize) -> PyResult<f64> {
    Ok(soniq::two_mode_squeezed_vacuum(r, cutoff)
        .map_err(err)?
        .analytic_tail())
}

/// Diagonal of the reduced single-mode state (geometric distribution).
#[pyfunction]
#[pyo3(name = "reduced_occupations")]
fn reduced_occupations_py(r: f64, cutoff: usize) -> PyResult<Vec<f64>> {
    let s = soniq::two_mode_squeezed_vacuum(r, cutoff).map_err(err)?;
    Ok(soniq::reduced_state(&s, Mode::I).diagonal())
}

/// Von Neumann entropy (nats) of either reduced mode of the squeezed
/// vacuum; the cutoff defaults to the automatic tail-driven choice.
#[pyfunction]
#[pyo3(name = "entanglement_entropy", signature = (r, cutoff = None))]
fn entanglement_entropy_py(r: f64, cutoff: Option<usize>) -> PyResult<f64> {
    let n = match cutoff {
        Some(n) => n,
        None => soniq::auto_cutoff(r.tanh(), None, 1e-12).map_err(err)?,
    };
    let s = soniq::two_mode_squeezed_vacuum(r, n).map_err(err)?;
    soniq::entanglement_entropy(&s).map_err(err)
}

/// Truncated coherent-state amplitudes, renormalized over the basis.
#[pyfunction]
#[pyo3(name = "coherent_amplitudes")]
fn coherent_amplitudes_py(amplitude: Complex64, cutoff: usize) -> PyResult<Vec<Complex64>> {
    let coherent = soniq::coherent_state(&CoherentSpec { amplitude, cutoff }).map_err(err)?;
    Ok(coherent.state.amplitudes().iter().copied().collect())
}

/// Closed-form zero-difference fidelity exp(-|amp|^2 (1 - tanh r)^2).
#[pyfunction]
#[pyo3(name = "analytic_fidelity_zero")]
fn analytic_fidelity_zero_py(amplitude: Complex64, r: f64) -> PyResult<f64> {
    soniq::analytic_fidelity_zero(amplitude, r).map_err(err)
}

/// Conditional number-phase outcome (k, sign) for an arbitrary target given
/// by its number-basis amplitudes.
#[pyfunction]
#[pyo3(name = "mb_conditional", signature = (target, r, k = 0, sign = "+"))]
fn mb_conditional_py(
    target: Vec<Complex64>,
    r: f64,
    k: usize,
    sign: &str,
) -> PyResult<Outcome> {
    let target = target_from_amplitudes(target)?;
    let outcome = soniq::mb_conditional(&target, r, k, sign_from_name(sign)?).map_err(err)?;
    Ok(outcome_from(outcome))
}

/// Zero-difference teleportation of a coherent target; the cutoff defaults
/// to the automatic tail-driven choice.
#[pyfunction]
#[pyo3(name = "teleport_coherent", signature = (amplitude, r, cutoff = None))]
fn teleport_coherent_py(amplitude: Complex64, r: f64, cutoff: Option<usize>) -> PyResult<Outcome> {
    let n = match cutoff {
        Some(n) => n,
        None => soniq::auto_cutoff(r.tanh(), Some(amplitude.norm()), 1e-12).map_err(err)?,
    };
    let target = soniq::coherent_state(&CoherentSpec {
        amplitude,
        cutoff: n,
    })
    .map_err(err)?
    .state;
    let outcome = soniq::mb_conditional(&target, r, 0, OutcomeSign::Plus).map_err(err)?;
    Ok(outcome_from(outcome))
}

/// Chain the squeeze map and the k = 0 protocol across a surface-gravity
/// grid for a coherent target.
#[pyfunction]
#[pyo3(name = "fidelity_sweep", signature = (amplitude, omega, alphas, units = "natural", cutoff = None))]
fn fidelity_sweep_py(
    amplitude: Complex64,
    omega: f64,
    alphas: Vec<f64>,
    units: &str,
    cutoff: Option<usize>,
) -> PyResult<Vec<SweepPoint>> {
    let rows =
        soniq::fidelity_temperature_sweep(amplitude, omega, &alphas, &units_from_name(units)?, cutoff)
            .map_err(err)?;
    Ok(rows
        .into_iter()
        .map(|row| SweepPoint {
            alpha: row.alpha,
            temperature: row.temperature,
            r: row.r,
            nbar: row.nbar,
            f_analytic: row.f_analytic,
            f_simulated: row.f_simulated,
            p0: row.p0,
        })
        .collect())
}

#[pymodule]
fn soniq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Horizon>()?;
    m.add_class::<Squeeze>()?;
    m.add_class::<Outcome>()?;
    m.add_class::<SweepPoint>()?;
    m.add_function(wrap_pyfunction!(squeeze_parameter_py, m)?)?;
    m.add_function(wrap_pyfunction!(bogoliubov_pair_py, m)?)?;
    m.add_function(wrap_pyfunction!(mean_occupation_py, m)?)?;
    m.add_function(wrap_pyfunction!(hawking_temperature_py, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_for_temperature_py, m)?)?;
    m.add_function(wrap_pyfunction!(find_horizon_linear_py, m)?)?;
    m.add_function(wrap_pyfunction!(find_horizon_power_law_py, m)?)?;
    m.add_function(wrap_pyfunction!(squeezed_vacuum_diagonal_py, m)?)?;
    m.add_function(wrap_pyfunction!(squeezed_vacuum_norm_deficit_py, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_occupations_py, m)?)?;
    m.add_function(wrap_pyfunction!(entanglement_entropy_py, m)?)?;
    m.add_function(wrap_pyfunction!(coherent_amplitudes_py, m)?)?;
    m.add_function(wrap_pyfunction!(analytic_fidelity_zero_py, m)?)?;
    m.add_function(wrap_pyfunction!(mb_conditional_py, m)?)?;
    m.add_function(wrap_pyfunction!(teleport_coherent_py, m)?)?;
    m.add_function(wrap_pyfunction!(fidelity_sweep_py, m)?)?;
    Ok(())
}
