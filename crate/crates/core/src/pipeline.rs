//! Batch front end: resolve a `RunConfig` into concrete pipeline runs and
//! emit deterministic CSV or JSON artifacts.
//!
//! Every artifact carries '#'-prefixed metadata (tool version, unit system,
//! resolved inputs) followed by a column header and rows. CSV numbers are
//! printed with 17 significant digits so downstream comparisons are
//! tolerance-driven, not formatting-driven; identical configs produce
//! byte-identical output.

use std::path::Path;

use num_complex::Complex64;

use crate::config::{
    CutoffSpec, MbVariant, OutputFormat, ProfileConfig, ProfileKind, RunConfig, SweepVariable,
};
use crate::error::{Error, Result};
use crate::flow::FlowProfile;
use crate::fock::{
    auto_cutoff, coherent_state, entanglement_entropy, schmidt_spectrum, two_mode_squeezed_vacuum,
    CoherentSpec,
};
use crate::horizon::{alpha_for_temperature, find_horizon, scan_horizons};
use crate::squeeze::{bogoliubov_pair, mean_occupation, squeeze_parameter};
use crate::teleport::{
    analytic_fidelity_zero, fidelity_temperature_sweep, mb_conditional, mb_conditional_literal,
};
use crate::units::UnitSystem;

pub const TOOL_NAME: &str = "soniq";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Number of leading Schmidt weights reported by `entangle`.
const SCHMIDT_HEAD: usize = 8;
/// Default spectrum grid when no omega sweep is configured: 50 log points
/// over omega/alpha in [0.01, 10].
const SPECTRUM_DEFAULT_POINTS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Horizon,
    Spectrum,
    Squeeze,
    Entangle,
    Teleport,
    Sweep,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Horizon => "horizon",
            Command::Spectrum => "spectrum",
            Command::Squeeze => "squeeze",
            Command::Entangle => "entangle",
            Command::Teleport => "teleport",
            Command::Sweep => "sweep",
        }
    }
}

/// One table cell of an artifact.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    F(f64),
    I(i64),
    S(String),
}

/// A rendered pipeline result: metadata, a column header, and rows. JSON
/// output may attach one extra structured payload (e.g. a full state).
#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub command: &'static str,
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub extra_json: Option<(&'static str, serde_json::Value)>,
}

fn validation(field: &str, message: impl Into<String>) -> Error {
    Error::ConfigValidation {
        field: field.into(),
        message: message.into(),
    }
}

fn uniform_grid(min: f64, max: f64, points: usize) -> Vec<f64> {
    let step = (max - min) / (points - 1) as f64;
    (0..points).map(|i| min + step * i as f64).collect()
}

/// Build the flow profile named by the config; `base_dir` anchors relative
/// tabulated-data paths (normally the config file's directory).
pub fn build_profile(spec: &ProfileConfig, base_dir: Option<&Path>) -> Result<FlowProfile> {
    let grid = spec
        .grid
        .map(|(min, max, points)| uniform_grid(min, max, points));
    match spec.kind {
        ProfileKind::Linear => FlowProfile::analytic_linear(
            spec.sound_speed,
            spec.radius.unwrap(),
            spec.alpha.unwrap(),
            spec.density,
            grid,
        ),
        ProfileKind::PowerLaw => FlowProfile::analytic_power_law(
            spec.sound_speed,
            spec.radius.unwrap(),
            spec.exponent,
            spec.density,
            grid,
        ),
        ProfileKind::Tabulated => {
            let raw = spec.path.as_ref().unwrap();
            let path = match base_dir {
                Some(dir) if Path::new(raw).is_relative() => dir.join(raw),
                _ => Path::new(raw).to_path_buf(),
            };
            let text = std::fs::read_to_string(&path).map_err(|e| {
                validation("profile.path", format!("cannot read '{}': {e}", path.display()))
            })?;
            FlowProfile::from_table_text(&text, spec.sound_speed)
        }
    }
}

/// The scalar surface gravity implied by the config, with its provenance.
struct AlphaSource {
    alpha: f64,
    note: String,
}

fn resolve_alpha(
    config: &RunConfig,
    units: &UnitSystem,
    base_dir: Option<&Path>,
) -> Result<AlphaSource> {
    if let Some(alpha) = config.alpha {
        return Ok(AlphaSource {
            alpha,
            note: "explicit".into(),
        });
    }
    if let Some(t) = config.temperature {
        let alpha = alpha_for_temperature(t, units)?;
        return Ok(AlphaSource {
            alpha,
            note: format!("from temperature {t:?}"),
        });
    }
    if let Some(profile) = &config.profile {
        let flow = build_profile(profile, base_dir)?;
        let h = find_horizon(&flow, units)?;
        return Ok(AlphaSource {
            alpha: h.surface_gravity,
            note: format!("from profile horizon at r = {:?}", h.radius),
        });
    }
    Err(validation(
        "alpha",
        "this command needs a scalar surface gravity: give alpha, temperature, or a [profile]",
    ))
}

fn require_omega(config: &RunConfig) -> Result<f64> {
    config
        .omega
        .ok_or_else(|| validation("omega", "required for this command"))
}

fn require_target(config: &RunConfig) -> Result<Complex64> {
    config
        .target
        .ok_or_else(|| validation("target", "required for this command"))
}

fn resolve_cutoff(config: &RunConfig, tanh_r: f64, coherent: Option<f64>) -> Result<usize> {
    match config.cutoff {
        CutoffSpec::Fixed(n) => Ok(n),
        CutoffSpec::Auto => auto_cutoff(tanh_r, coherent, config.tail_epsilon),
    }
}

fn base_metadata(config: &RunConfig, units: &UnitSystem, command: Command) -> Vec<(String, String)> {
    vec![
        ("tool".into(), format!("{TOOL_NAME} {TOOL_VERSION} {}", command.name())),
        ("units".into(), units.label().into()),
        (
            "column_units".into(),
            "alpha, omega: 1/time; r_h: length; temperature: K in SI, energy/k_B otherwise; r, nbar, F, P: dimensionless".into(),
        ),
        ("seed".into(), config.seed.to_string()),
    ]
}

/// Run one command against a validated config and produce its artifact.
pub fn dispatch(config: &RunConfig, command: Command, base_dir: Option<&Path>) -> Result<Artifact> {
    let units = config.unit_system();
    let mut metadata = base_metadata(config, &units, command);
    match command {
        Command::Horizon => {
            let spec = config.profile.as_ref().ok_or_else(|| {
                validation("profile", "the horizon command requires a [profile] section")
            })?;
            let flow = build_profile(spec, base_dir)?;
            let horizons = scan_horizons(&flow, &units)?;
            metadata.push((
                "note".into(),
                "density at the horizon is used for the near-horizon conformal factor".into(),
            ));
            let rows = horizons
                .iter()
                .map(|h| {
                    vec![
                        Cell::F(h.radius),
                        Cell::F(h.surface_gravity),
                        Cell::F(h.temperature),
                        Cell::I(h.is_event_horizon as i64),
                    ]
                })
                .collect();
            Ok(Artifact {
                command: command.name(),
                metadata,
                columns: vec!["r_h", "alpha", "temperature", "is_event_horizon"],
                rows,
                extra_json: None,
            })
        }
        Command::Spectrum => {
            let source = resolve_alpha(config, &units, base_dir)?;
            let alpha = source.alpha;
            metadata.push(("alpha".into(), format!("{alpha:?} ({})", source.note)));
            let omegas = match &config.sweep {
                Some(sweep) if sweep.variable == SweepVariable::Omega => sweep.grid(),
                Some(_) | None => {
                    metadata.push((
                        "omega_grid".into(),
                        format!(
                            "default: {SPECTRUM_DEFAULT_POINTS} log points over omega/alpha in [0.01, 10]"
                        ),
                    ));
                    let (a, b) = ((0.01 * alpha).ln(), (10.0 * alpha).ln());
                    (0..SPECTRUM_DEFAULT_POINTS)
                        .map(|i| {
                            (a + (b - a) * i as f64 / (SPECTRUM_DEFAULT_POINTS - 1) as f64).exp()
                        })
                        .collect()
                }
            };
            let temperature = crate::horizon::hawking_temperature(alpha, &units)?;
            let rows = omegas
                .iter()
                .map(|&omega| -> Result<Vec<Cell>> {
                    Ok(vec![
                        Cell::F(omega),
                        Cell::F(mean_occupation(omega, alpha)?),
                        Cell::F(temperature),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Artifact {
                command: command.name(),
                metadata,
                columns: vec!["omega", "nbar", "temperature"],
                rows,
                extra_json: None,
            })
        }
        Command::Squeeze => {
            let omega = require_omega(config)?;
            let source = resolve_alpha(config, &units, base_dir)?;
            let spec = squeeze_parameter(omega, source.alpha)?;
            let pair = bogoliubov_pair(&spec);
            metadata.push(("alpha_source".into(), source.note));
            Ok(Artifact {
                command: command.name(),
                metadata,
                columns: vec!["omega", "alpha", "r", "tanh_r", "cosh_r", "sinh_r", "nbar", "temperature"],
                rows: vec![vec![
                    Cell::F(spec.omega),
                    Cell::F(spec.alpha),
                    Cell::F(spec.r),
                    Cell::F(spec.tanh_r()),
                    Cell::F(pair.u),
                    Cell::F(pair.v),
                    Cell::F(mean_occupation(omega, source.alpha)?),
                    Cell::F(crate::horizon::hawking_temperature(source.alpha, &units)?),
                ]],
                extra_json: None,
            })
        }
        Command::Entangle => {
            let omega = require_omega(config)?;
            let source = resolve_alpha(config, &units, base_dir)?;
            let spec = squeeze_parameter(omega, source.alpha)?;
            let cutoff = resolve_cutoff(config, spec.tanh_r(), None)?;
            let state = two_mode_squeezed_vacuum(spec.r, cutoff)?;
            let entropy = entanglement_entropy(&state)?;
            let spectrum = schmidt_spectrum(&state)?;
            metadata.push(("alpha_source".into(), source.note));
            metadata.push(("cutoff".into(), cutoff.to_string()));
            let mut row = vec![
                Cell::F(spec.omega),
                Cell::F(source.alpha),
                Cell::F(spec.r),
                Cell::F(spec.tanh_r()),
                Cell::I(cutoff as i64),
                Cell::F(state.analytic_tail()),
                Cell::F(entropy),
            ];
            for i in 0..SCHMIDT_HEAD {
                row.push(Cell::F(spectrum.get(i).copied().unwrap_or(0.0)));
            }
            let schmidt_json = serde_json::to_value(&spectrum).unwrap();
            Ok(Artifact {
                command: command.name(),
                metadata,
                columns: vec![
                    "omega", "alpha", "r", "tanh_r", "cutoff", "norm_deficit", "entropy", "p0",
                    "p1", "p2", "p3", "p4", "p5", "p6", "p7",
                ],
                rows: vec![row],
                extra_json: Some(("schmidt_spectrum", schmidt_json)),
            })
        }
        Command::Teleport => {
            let omega = require_omega(config)?;
            let target_amp = require_target(config)?;
            let source = resolve_alpha(config, &units, base_dir)?;
            let spec = squeeze_parameter(omega, source.alpha)?;
            let cutoff = resolve_cutoff(config, spec.tanh_r(), Some(target_amp.norm()))?;
            let target = coherent_state(&CoherentSpec {
                amplitude: target_amp,
                cutoff,
            })?
            .state;
            let outcome = match config.mb_variant {
                MbVariant::Canonical => mb_conditional(&target, spec.r, config.k, config.sign)?,
                MbVariant::Literal => {
                    mb_conditional_literal(&target, spec.r, config.k, config.sign)?
                }
            };
            let f_analytic = analytic_fidelity_zero(target_amp, spec.r)?;
            metadata.push(("alpha_source".into(), source.note));
            metadata.push(("cutoff".into(), cutoff.to_string()));
            metadata.push((
                "mb_variant".into(),
                match config.mb_variant {
                    MbVariant::Canonical => "canonical".into(),
                    MbVariant::Literal => "literal (typeset comparison form, no correctness claim)".into(),
                },
            ));
            let outcome_json = serde_json::to_value(&outcome).unwrap();
            Ok(Artifact {
                command: command.name(),
                metadata,
                columns: vec![
                    "omega", "alpha", "r", "tanh_r", "k", "sign", "probability", "fidelity",
                    "F_analytic_k0",
                ],
                rows: vec![vec![
                    Cell::F(omega),
                    Cell::F(source.alpha),
                    Cell::F(spec.r),
                    Cell::F(spec.tanh_r()),
                    Cell::I(config.k as i64),
                    Cell::S(config.sign.to_string()),
                    Cell::F(outcome.probability),
                    Cell::F(outcome.fidelity),
                    Cell::F(f_analytic),
                ]],
                extra_json: Some(("outcome", outcome_json)),
            })
        }
        Command::Sweep => {
            let omega = require_omega(config)?;
            let target_amp = require_target(config)?;
            let sweep = config
                .sweep
                .as_ref()
                .ok_or_else(|| validation("sweep", "the sweep command requires a [sweep] section"))?;
            let alphas: Vec<f64> = match sweep.variable {
                SweepVariable::Alpha => sweep.grid(),
                SweepVariable::Temperature => sweep
                    .grid()
                    .into_iter()
                    .map(|t| alpha_for_temperature(t, &units))
                    .collect::<Result<_>>()?,
                SweepVariable::Omega => {
                    return Err(validation(
                        "sweep.variable",
                        "the sweep command varies alpha or temperature; omega sweeps belong to the spectrum command",
                    ))
                }
            };
            let mut max_tanh: f64 = 0.0;
            for &alpha in &alphas {
                max_tanh = max_tanh.max(squeeze_parameter(omega, alpha)?.tanh_r());
            }
            let cutoff = resolve_cutoff(config, max_tanh, Some(target_amp.norm()))?;
            let rows = fidelity_temperature_sweep(target_amp, omega, &alphas, &units, Some(cutoff))?;
            metadata.push(("omega".into(), format!("{omega:?}")));
            metadata.push(("target".into(), format!("{target_amp}")));
            metadata.push(("cutoff".into(), cutoff.to_string()));
            Ok(Artifact {
                command: command.name(),
                metadata,
                columns: vec!["alpha", "temperature", "r", "nbar", "F_analytic", "F_simulated", "P0"],
                rows: rows
                    .iter()
                    .map(|row| {
                        vec![
                            Cell::F(row.alpha),
                            Cell::F(row.temperature),
                            Cell::F(row.r),
                            Cell::F(row.nbar),
                            Cell::F(row.f_analytic),
                            Cell::F(row.f_simulated),
                            Cell::F(row.p0),
                        ]
                    })
                    .collect(),
                extra_json: None,
            })
        }
    }
}

fn csv_cell(cell: &Cell) -> String {
    match cell {
        Cell::F(v) => format!("{v:.16e}"),
        Cell::I(v) => v.to_string(),
        Cell::S(v) => v.clone(),
    }
}

fn json_cell(cell: &Cell) -> serde_json::Value {
    match cell {
        Cell::F(v) => serde_json::json!(v),
        Cell::I(v) => serde_json::json!(v),
        Cell::S(v) => serde_json::json!(v),
    }
}

/// Render an artifact in the requested format.
pub fn render(artifact: &Artifact, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = String::new();
            for (key, value) in &artifact.metadata {
                out.push_str(&format!("# {key} = {value}\n"));
            }
            out.push_str(&artifact.columns.join(","));
            out.push('\n');
            for row in &artifact.rows {
                let cells: Vec<String> = row.iter().map(csv_cell).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let meta: serde_json::Map<String, serde_json::Value> = artifact
                .metadata
                .iter()
                .map(|(k, v)| (k.clone(), serde_json::json!(v)))
                .collect();
            let rows: Vec<serde_json::Value> = artifact
                .rows
                .iter()
                .map(|row| {
                    let obj: serde_json::Map<String, serde_json::Value> = artifact
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(col, cell)| (col.to_string(), json_cell(cell)))
                        .collect();
                    serde_json::Value::Object(obj)
                })
                .collect();
            let mut root = serde_json::Map::new();
            root.insert("command".into(), serde_json::json!(artifact.command));
            root.insert("meta".into(), serde_json::Value::Object(meta));
            root.insert(
                "columns".into(),
                serde_json::json!(artifact.columns),
            );
            root.insert("rows".into(), serde_json::Value::Array(rows));
            if let Some((key, value)) = &artifact.extra_json {
                root.insert(key.to_string(), value.clone());
            }
            let mut text =
                serde_json::to_string_pretty(&serde_json::Value::Object(root)).unwrap();
            text.push('\n');
            text
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    #[test]
    fn horizon_record_for_linear_profile() {
        let cfg = parse_config(
            "[profile]\nkind = linear\nc = 1.0\nradius = 2.0\nalpha = 0.5\n",
        )
        .unwrap();
        let artifact = dispatch(&cfg, Command::Horizon, None).unwrap();
        assert_eq!(artifact.rows.len(), 1);
        match (&artifact.rows[0][0], &artifact.rows[0][1], &artifact.rows[0][2]) {
            (Cell::F(r), Cell::F(a), Cell::F(t)) => {
                assert!((r - 2.0).abs() < 1e-10);
                assert!((a - 0.5).abs() < 1e-10);
                assert!((t - 0.079_577_471_545_947_67).abs() < 1e-12);
            }
            other => panic!("unexpected cells {other:?}"),
        }
    }

    #[test]
    fn sweep_artifact_is_monotone_and_deterministic() {
        let text = "omega = 1.0\ntarget = 1.0\n[sweep]\nvariable = alpha\nstart = 2.0\nstop = 40.0\npoints = 9\nscale = log\n";
        let cfg = parse_config(text).unwrap();
        let a = dispatch(&cfg, Command::Sweep, None).unwrap();
        let b = dispatch(&cfg, Command::Sweep, None).unwrap();
        assert_eq!(render(&a, OutputFormat::Csv), render(&b, OutputFormat::Csv));
        let fs: Vec<f64> = a
            .rows
            .iter()
            .map(|row| match row[4] {
                Cell::F(v) => v,
                _ => unreachable!(),
            })
            .collect();
        assert!(fs.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn teleport_requires_target() {
        let cfg = parse_config("omega = 1.0\nalpha = 2.0\n").unwrap();
        let err = dispatch(&cfg, Command::Teleport, None).unwrap_err();
        assert!(matches!(err, Error::ConfigValidation { .. }));
    }

    #[test]
    fn missing_horizon_surfaces_domain_error() {
        // Subsonic tabulated profile.
        let dir = tempfile::tempdir().unwrap();
        let data = dir.path().join("flow.dat");
        let mut text = String::new();
        for i in 0..32 {
            let r = 1.0 + 0.1 * i as f64;
            text.push_str(&format!("{r} 1.0 -0.5\n"));
        }
        std::fs::write(&data, text).unwrap();
        let cfg = parse_config(&format!(
            "[profile]\nkind = tabulated\nc = 1.0\npath = {}\n",
            data.display()
        ))
        .unwrap();
        let err = dispatch(&cfg, Command::Horizon, None).unwrap_err();
        assert!(matches!(err, Error::NoHorizon));
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn csv_uses_full_precision() {
        let cfg = parse_config("omega = 1.0\nalpha = 2.0\n").unwrap();
        let artifact = dispatch(&cfg, Command::Squeeze, None).unwrap();
        let text = render(&artifact, OutputFormat::Csv);
        assert!(text.starts_with("# tool = soniq"));
        let data_line = text.lines().last().unwrap();
        // 16 digits after the decimal point in scientific notation.
        assert!(data_line.split(',').all(|f| f.contains('e')));
    }

    #[test]
    fn json_renders_rows_as_objects() {
        let cfg = parse_config("omega = 1.0\nalpha = 2.0\ntarget = 1.0\n").unwrap();
        let artifact = dispatch(&cfg, Command::Teleport, None).unwrap();
        let text = render(&artifact, OutputFormat::Json);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["command"], "teleport");
        assert!(value["rows"][0]["fidelity"].is_f64());
        assert!(value["outcome"]["output"]["amplitudes"].is_array());
    }
}
