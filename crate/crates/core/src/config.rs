//! Run configuration: a small `key = value` text format with optional
//! `[profile]` and `[sweep]` sections.
//!
//! Rules: '#' starts a comment, unknown or duplicated keys are hard parse
//! errors, and `emit` writes the canonical echo (defaults resolved) such
//! that `parse_config(emit(c)) == c`.
//!
//! ```text
//! units = natural            # or si
//! omega = 1.0
//! alpha = 0.5                # exactly one of: alpha, temperature,
//!                            # [profile], or a sweep over alpha/temperature
//! target = 1.0               # coherent amplitude; complex as 0.5+0.3i
//! cutoff = auto              # or an integer
//! tail_epsilon = 1e-12
//! seed = 0
//! output = csv               # or json
//! k = 0                      # conditional outcome index (teleport)
//! sign = +                   # or -
//! mb_variant = canonical     # or literal (typeset comparison form)
//!
//! [profile]
//! kind = linear              # linear | powerlaw | tabulated
//! c = 1.0
//! radius = 2.0
//! alpha = 0.5                # linear only
//! exponent = 2.0             # powerlaw only
//! density = 1.0
//! path = flow.dat            # tabulated only
//! grid_min = 1.0  (optional, all three together)
//! grid_max = 3.0
//! grid_points = 1001
//!
//! [sweep]
//! variable = alpha           # alpha | temperature | omega
//! start = 0.5
//! stop = 50.0
//! points = 25
//! scale = log                # or linear
//! ```

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::teleport::OutcomeSign;
use crate::units::{UnitKind, UnitSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutoffSpec {
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MbVariant {
    Canonical,
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Linear,
    PowerLaw,
    Tabulated,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProfileConfig {
    pub kind: ProfileKind,
    pub sound_speed: f64,
    pub radius: Option<f64>,
    pub alpha: Option<f64>,
    pub exponent: f64,
    pub density: f64,
    pub path: Option<String>,
    pub grid: Option<(f64, f64, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Alpha,
    Temperature,
    Omega,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub variable: SweepVariable,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: SweepScale,
}

impl SweepConfig {
    /// The resolved grid, in declaration order.
    pub fn grid(&self) -> Vec<f64> {
        if self.points == 1 {
            return vec![self.start];
        }
        let n = self.points;
        match self.scale {
            SweepScale::Linear => {
                let step = (self.stop - self.start) / (n - 1) as f64;
                (0..n).map(|i| self.start + step * i as f64).collect()
            }
            SweepScale::Log => {
                let (a, b) = (self.start.ln(), self.stop.ln());
                let step = (b - a) / (n - 1) as f64;
                (0..n).map(|i| (a + step * i as f64).exp()).collect()
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub units: UnitKind,
    pub omega: Option<f64>,
    pub alpha: Option<f64>,
    pub temperature: Option<f64>,
    pub target: Option<Complex64>,
    pub cutoff: CutoffSpec,
    pub tail_epsilon: f64,
    pub seed: u64,
    pub output: OutputFormat,
    pub k: usize,
    pub sign: OutcomeSign,
    pub mb_variant: MbVariant,
    pub profile: Option<ProfileConfig>,
    pub sweep: Option<SweepConfig>,
}

impl RunConfig {
    pub fn unit_system(&self) -> UnitSystem {
        match self.units {
            UnitKind::Natural | UnitKind::Custom => UnitSystem::natural(),
            UnitKind::Si => UnitSystem::si(),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::ConfigParse {
        line,
        message: message.into(),
    }
}

fn validation_err(field: &str, message: impl Into<String>) -> Error {
    Error::ConfigValidation {
        field: field.into(),
        message: message.into(),
    }
}

fn parse_f64(value: &str, key: &str, line: usize) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| parse_err(line, format!("'{key}': expected a number, got '{value}'")))
}

fn parse_usize(value: &str, key: &str, line: usize) -> Result<usize> {
    value
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("'{key}': expected an integer, got '{value}'")))
}

/// Accepts "1.5", "0.5+0.3i", "0.5-0.3i", "0.3i", including exponent forms
/// like "1e-3+2e-4i".
fn parse_complex(value: &str, key: &str, line: usize) -> Result<Complex64> {
    let s: String = value.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || parse_err(line, format!("'{key}': expected a (complex) number, got '{value}'"));
    if let Some(body) = s.strip_suffix('i') {
        // Split at the last +/- that is not a leading sign or an exponent sign.
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let ch = bytes[idx] as char;
            if (ch == '+' || ch == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx].parse().map_err(|_| bad())?;
                let im_text = &body[idx..];
                let im: f64 = if im_text == "+" || im_text == "-" {
                    format!("{im_text}1").parse().map_err(|_| bad())?
                } else {
                    im_text.parse().map_err(|_| bad())?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = if body.is_empty() || body == "+" || body == "-" {
                    format!("{body}1").parse().map_err(|_| bad())?
                } else {
                    body.parse().map_err(|_| bad())?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        Ok(Complex64::new(s.parse().map_err(|_| bad())?, 0.0))
    }
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:?}", z.re)
    } else if z.im < 0.0 {
        format!("{:?}-{:?}i", z.re, -z.im)
    } else {
        format!("{:?}+{:?}i", z.re, z.im)
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, key: &str, line: usize) -> Result<()> {
    if slot.is_some() {
        return Err(parse_err(line, format!("duplicate key '{key}'")));
    }
    *slot = Some(value);
    Ok(())
}

#[derive(Default)]
struct ProfileDraft {
    kind: Option<ProfileKind>,
    sound_speed: Option<f64>,
    radius: Option<f64>,
    alpha: Option<f64>,
    exponent: Option<f64>,
    density: Option<f64>,
    path: Option<String>,
    grid_min: Option<f64>,
    grid_max: Option<f64>,
    grid_points: Option<usize>,
}

#[derive(Default)]
struct SweepDraft {
    variable: Option<SweepVariable>,
    start: Option<f64>,
    stop: Option<f64>,
    points: Option<usize>,
    scale: Option<SweepScale>,
}

/// Parse and validate configuration text; defaults are resolved into the
/// returned value.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut units: Option<UnitKind> = None;
    let mut omega: Option<f64> = None;
    let mut alpha: Option<f64> = None;
    let mut temperature: Option<f64> = None;
    let mut target: Option<Complex64> = None;
    let mut cutoff: Option<CutoffSpec> = None;
    let mut tail_epsilon: Option<f64> = None;
    let mut seed: Option<u64> = None;
    let mut output: Option<OutputFormat> = None;
    let mut k: Option<usize> = None;
    let mut sign: Option<OutcomeSign> = None;
    let mut mb_variant: Option<MbVariant> = None;
    let mut profile: Option<ProfileDraft> = None;
    let mut sweep: Option<SweepDraft> = None;

    #[derive(PartialEq, Clone, Copy)]
    enum Section {
        Top,
        Profile,
        Sweep,
    }
    let mut section = Section::Top;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(name) = content.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| parse_err(line, "unterminated section header"))?
                .trim();
            section = match name {
                "profile" => {
                    if profile.is_some() {
                        return Err(parse_err(line, "duplicate section [profile]"));
                    }
                    profile = Some(ProfileDraft::default());
                    Section::Profile
                }
                "sweep" => {
                    if sweep.is_some() {
                        return Err(parse_err(line, "duplicate section [sweep]"));
                    }
                    sweep = Some(SweepDraft::default());
                    Section::Sweep
                }
                other => return Err(parse_err(line, format!("unknown section '[{other}]'"))),
            };
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| parse_err(line, format!("expected 'key = value', got '{content}'")))?;
        if value.is_empty() {
            return Err(parse_err(line, format!("'{key}' has no value")));
        }
        match section {
            Section::Top => match key {
                "units" => {
                    let parsed = match value {
                        "natural" => UnitKind::Natural,
                        "si" | "SI" => UnitKind::Si,
                        other => {
                            return Err(parse_err(
                                line,
                                format!("'units' must be natural or si, got '{other}'"),
                            ))
                        }
                    };
                    set_once(&mut units, parsed, key, line)?;
                }
                "omega" => set_once(&mut omega, parse_f64(value, key, line)?, key, line)?,
                "alpha" => set_once(&mut alpha, parse_f64(value, key, line)?, key, line)?,
                "temperature" => {
                    set_once(&mut temperature, parse_f64(value, key, line)?, key, line)?
                }
                "target" => set_once(&mut target, parse_complex(value, key, line)?, key, line)?,
                "cutoff" => {
                    let parsed = if value == "auto" {
                        CutoffSpec::Auto
                    } else {
                        CutoffSpec::Fixed(parse_usize(value, key, line)?)
                    };
                    set_once(&mut cutoff, parsed, key, line)?;
                }
                "tail_epsilon" => {
                    set_once(&mut tail_epsilon, parse_f64(value, key, line)?, key, line)?
                }
                "seed" => {
                    let parsed = value.parse::<u64>().map_err(|_| {
                        parse_err(line, format!("'seed': expected an integer, got '{value}'"))
                    })?;
                    set_once(&mut seed, parsed, key, line)?;
                }
                "output" => {
                    let parsed = match value {
                        "csv" => OutputFormat::Csv,
                        "json" => OutputFormat::Json,
                        other => {
                            return Err(parse_err(
                                line,
                                format!("'output' must be csv or json, got '{other}'"),
                            ))
                        }
                    };
                    set_once(&mut output, parsed, key, line)?;
                }
                "k" => set_once(&mut k, parse_usize(value, key, line)?, key, line)?,
                "sign" => {
                    let parsed = match value {
                        "+" | "plus" => OutcomeSign::Plus,
                        "-" | "minus" => OutcomeSign::Minus,
                        other => {
                            return Err(parse_err(
                                line,
                                format!("'sign' must be + or -, got '{other}'"),
                            ))
                        }
                    };
                    set_once(&mut sign, parsed, key, line)?;
                }
                "mb_variant" => {
                    let parsed = match value {
                        "canonical" => MbVariant::Canonical,
                        "literal" => MbVariant::Literal,
                        other => {
                            return Err(parse_err(
                                line,
                                format!("'mb_variant' must be canonical or literal, got '{other}'"),
                            ))
                        }
                    };
                    set_once(&mut mb_variant, parsed, key, line)?;
                }
                other => return Err(parse_err(line, format!("unknown key '{other}'"))),
            },
            Section::Profile => {
                let draft = profile.as_mut().unwrap();
                match key {
                    "kind" => {
                        let parsed = match value {
                            "linear" => ProfileKind::Linear,
                            "powerlaw" => ProfileKind::PowerLaw,
                            "tabulated" => ProfileKind::Tabulated,
                            other => {
                                return Err(parse_err(
                                    line,
                                    format!(
                                        "'kind' must be linear, powerlaw, or tabulated, got '{other}'"
                                    ),
                                ))
                            }
                        };
                        set_once(&mut draft.kind, parsed, key, line)?;
                    }
                    "c" => set_once(&mut draft.sound_speed, parse_f64(value, key, line)?, key, line)?,
                    "radius" => set_once(&mut draft.radius, parse_f64(value, key, line)?, key, line)?,
                    "alpha" => set_once(&mut draft.alpha, parse_f64(value, key, line)?, key, line)?,
                    "exponent" => {
                        set_once(&mut draft.exponent, parse_f64(value, key, line)?, key, line)?
                    }
                    "density" => {
                        set_once(&mut draft.density, parse_f64(value, key, line)?, key, line)?
                    }
                    "path" => set_once(&mut draft.path, value.to_string(), key, line)?,
                    "grid_min" => {
                        set_once(&mut draft.grid_min, parse_f64(value, key, line)?, key, line)?
                    }
                    "grid_max" => {
                        set_once(&mut draft.grid_max, parse_f64(value, key, line)?, key, line)?
                    }
                    "grid_points" => set_once(
                        &mut draft.grid_points,
                        parse_usize(value, key, line)?,
                        key,
                        line,
                    )?,
                    other => {
                        return Err(parse_err(line, format!("unknown key '{other}' in [profile]")))
                    }
                }
            }
            Section::Sweep => {
                let draft = sweep.as_mut().unwrap();
                match key {
                    "variable" => {
                        let parsed = match value {
                            "alpha" => SweepVariable::Alpha,
                            "temperature" => SweepVariable::Temperature,
                            "omega" => SweepVariable::Omega,
                            other => {
                                return Err(parse_err(
                                    line,
                                    format!(
                                        "'variable' must be alpha, temperature, or omega, got '{other}'"
                                    ),
                                ))
                            }
                        };
                        set_once(&mut draft.variable, parsed, key, line)?;
                    }
                    "start" => set_once(&mut draft.start, parse_f64(value, key, line)?, key, line)?,
                    "stop" => set_once(&mut draft.stop, parse_f64(value, key, line)?, key, line)?,
                    "points" => {
                        set_once(&mut draft.points, parse_usize(value, key, line)?, key, line)?
                    }
                    "scale" => {
                        let parsed = match value {
                            "linear" => SweepScale::Linear,
                            "log" => SweepScale::Log,
                            other => {
                                return Err(parse_err(
                                    line,
                                    format!("'scale' must be linear or log, got '{other}'"),
                                ))
                            }
                        };
                        set_once(&mut draft.scale, parsed, key, line)?;
                    }
                    other => {
                        return Err(parse_err(line, format!("unknown key '{other}' in [sweep]")))
                    }
                }
            }
        }
    }

    let profile = match profile {
        None => None,
        Some(draft) => Some(finish_profile(draft)?),
    };
    let sweep = match sweep {
        None => None,
        Some(draft) => Some(finish_sweep(draft)?),
    };

    let config = RunConfig {
        units: units.unwrap_or(UnitKind::Natural),
        omega,
        alpha,
        temperature,
        target,
        cutoff: cutoff.unwrap_or(CutoffSpec::Auto),
        tail_epsilon: tail_epsilon.unwrap_or(1e-12),
        seed: seed.unwrap_or(0),
        output: output.unwrap_or(OutputFormat::Csv),
        k: k.unwrap_or(0),
        sign: sign.unwrap_or(OutcomeSign::Plus),
        mb_variant: mb_variant.unwrap_or(MbVariant::Canonical),
        profile,
        sweep,
    };
    validate(&config)?;
    Ok(config)
}

fn finish_profile(draft: ProfileDraft) -> Result<ProfileConfig> {
    let kind = draft
        .kind
        .ok_or_else(|| validation_err("profile.kind", "missing"))?;
    let sound_speed = draft
        .sound_speed
        .ok_or_else(|| validation_err("profile.c", "missing"))?;
    let grid = match (draft.grid_min, draft.grid_max, draft.grid_points) {
        (None, None, None) => None,
        (Some(min), Some(max), Some(points)) => Some((min, max, points)),
        _ => {
            return Err(validation_err(
                "profile.grid",
                "grid_min, grid_max, and grid_points must be given together",
            ))
        }
    };
    Ok(ProfileConfig {
        kind,
        sound_speed,
        radius: draft.radius,
        alpha: draft.alpha,
        exponent: draft.exponent.unwrap_or(2.0),
        density: draft.density.unwrap_or(1.0),
        path: draft.path,
        grid,
    })
}

fn finish_sweep(draft: SweepDraft) -> Result<SweepConfig> {
    Ok(SweepConfig {
        variable: draft
            .variable
            .ok_or_else(|| validation_err("sweep.variable", "missing"))?,
        start: draft
            .start
            .ok_or_else(|| validation_err("sweep.start", "missing"))?,
        stop: draft
            .stop
            .ok_or_else(|| validation_err("sweep.stop", "missing"))?,
        points: draft
            .points
            .ok_or_else(|| validation_err("sweep.points", "missing"))?,
        scale: draft.scale.unwrap_or(SweepScale::Log),
    })
}

fn require_positive(name: &str, value: f64) -> Result<()> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(validation_err(name, format!("must be positive, got {value}")));
    }
    Ok(())
}

fn validate(config: &RunConfig) -> Result<()> {
    if let Some(omega) = config.omega {
        require_positive("omega", omega)?;
    }
    if let Some(alpha) = config.alpha {
        require_positive("alpha", alpha)?;
    }
    if let Some(t) = config.temperature {
        require_positive("temperature", t)?;
    }
    if !(config.tail_epsilon > 0.0 && config.tail_epsilon < 1.0) {
        return Err(validation_err(
            "tail_epsilon",
            format!("must lie in (0, 1), got {}", config.tail_epsilon),
        ));
    }
    if let CutoffSpec::Fixed(n) = config.cutoff {
        if n < 1 {
            return Err(validation_err("cutoff", "must be at least 1"));
        }
    }
    if let Some(z) = config.target {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(validation_err("target", "must be finite"));
        }
    }

    // Exactly one source may determine the surface gravity.
    let sweep_drives_alpha = matches!(
        config.sweep.as_ref().map(|s| s.variable),
        Some(SweepVariable::Alpha) | Some(SweepVariable::Temperature)
    );
    let sources = [
        config.alpha.is_some(),
        config.temperature.is_some(),
        config.profile.is_some(),
        sweep_drives_alpha,
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if sources > 1 {
        return Err(validation_err(
            "alpha",
            "alpha, temperature, [profile], and an alpha/temperature sweep are mutually exclusive",
        ));
    }
    if sources == 0 {
        return Err(validation_err(
            "alpha",
            "one of alpha, temperature, [profile], or an alpha/temperature [sweep] is required",
        ));
    }

    if let Some(profile) = &config.profile {
        require_positive("profile.c", profile.sound_speed)?;
        require_positive("profile.density", profile.density)?;
        match profile.kind {
            ProfileKind::Linear => {
                let radius = profile
                    .radius
                    .ok_or_else(|| validation_err("profile.radius", "required for kind = linear"))?;
                require_positive("profile.radius", radius)?;
                let alpha = profile
                    .alpha
                    .ok_or_else(|| validation_err("profile.alpha", "required for kind = linear"))?;
                require_positive("profile.alpha", alpha)?;
                if profile.path.is_some() {
                    return Err(validation_err("profile.path", "only valid for kind = tabulated"));
                }
            }
            ProfileKind::PowerLaw => {
                let radius = profile.radius.ok_or_else(|| {
                    validation_err("profile.radius", "required for kind = powerlaw")
                })?;
                require_positive("profile.radius", radius)?;
                require_positive("profile.exponent", profile.exponent)?;
                if profile.alpha.is_some() {
                    return Err(validation_err("profile.alpha", "only valid for kind = linear"));
                }
                if profile.path.is_some() {
                    return Err(validation_err("profile.path", "only valid for kind = tabulated"));
                }
            }
            ProfileKind::Tabulated => {
                if profile.path.is_none() {
                    return Err(validation_err("profile.path", "required for kind = tabulated"));
                }
                if profile.radius.is_some() || profile.alpha.is_some() {
                    return Err(validation_err(
                        "profile.radius",
                        "radius/alpha are only valid for analytic kinds",
                    ));
                }
            }
        }
        if let Some((min, max, points)) = profile.grid {
            require_positive("profile.grid_min", min)?;
            if !(max > min) {
                return Err(validation_err("profile.grid_max", "must exceed grid_min"));
            }
            if points < 3 {
                return Err(validation_err("profile.grid_points", "must be at least 3"));
            }
        }
    }

    if let Some(sweep) = &config.sweep {
        require_positive("sweep.start", sweep.start)?;
        require_positive("sweep.stop", sweep.stop)?;
        if sweep.points < 1 {
            return Err(validation_err("sweep.points", "must be at least 1"));
        }
        if sweep.points > 1 && !(sweep.stop > sweep.start) {
            return Err(validation_err(
                "sweep.stop",
                "must exceed sweep.start for multi-point grids",
            ));
        }
    }
    Ok(())
}

/// Canonical text form of a configuration; defaults are written explicitly.
pub fn emit(config: &RunConfig) -> String {
    let mut out = String::new();
    let mut push = |line: String| {
        out.push_str(&line);
        out.push('\n');
    };
    push(format!(
        "units = {}",
        match config.units {
            UnitKind::Natural | UnitKind::Custom => "natural",
            UnitKind::Si => "si",
        }
    ));
    if let Some(omega) = config.omega {
        push(format!("omega = {omega:?}"));
    }
    if let Some(alpha) = config.alpha {
        push(format!("alpha = {alpha:?}"));
    }
    if let Some(t) = config.temperature {
        push(format!("temperature = {t:?}"));
    }
    if let Some(z) = config.target {
        push(format!("target = {}", format_complex(z)));
    }
    push(match config.cutoff {
        CutoffSpec::Auto => "cutoff = auto".into(),
        CutoffSpec::Fixed(n) => format!("cutoff = {n}"),
    });
    push(format!("tail_epsilon = {:?}", config.tail_epsilon));
    push(format!("seed = {}", config.seed));
    push(format!(
        "output = {}",
        match config.output {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    ));
    push(format!("k = {}", config.k));
    push(format!("sign = {}", config.sign));
    push(format!(
        "mb_variant = {}",
        match config.mb_variant {
            MbVariant::Canonical => "canonical",
            MbVariant::Literal => "literal",
        }
    ));
    if let Some(profile) = &config.profile {
        push("".into());
        push("[profile]".into());
        push(format!(
            "kind = {}",
            match profile.kind {
                ProfileKind::Linear => "linear",
                ProfileKind::PowerLaw => "powerlaw",
                ProfileKind::Tabulated => "tabulated",
            }
        ));
        push(format!("c = {:?}", profile.sound_speed));
        if let Some(radius) = profile.radius {
            push(format!("radius = {radius:?}"));
        }
        if let Some(alpha) = profile.alpha {
            push(format!("alpha = {alpha:?}"));
        }
        if profile.kind == ProfileKind::PowerLaw {
            push(format!("exponent = {:?}", profile.exponent));
        }
        push(format!("density = {:?}", profile.density));
        if let Some(path) = &profile.path {
            push(format!("path = {path}"));
        }
        if let Some((min, max, points)) = profile.grid {
            push(format!("grid_min = {min:?}"));
            push(format!("grid_max = {max:?}"));
            push(format!("grid_points = {points}"));
        }
    }
    if let Some(sweep) = &config.sweep {
        push("".into());
        push("[sweep]".into());
        push(format!(
            "variable = {}",
            match sweep.variable {
                SweepVariable::Alpha => "alpha",
                SweepVariable::Temperature => "temperature",
                SweepVariable::Omega => "omega",
            }
        ));
        push(format!("start = {:?}", sweep.start));
        push(format!("stop = {:?}", sweep.stop));
        push(format!("points = {}", sweep.points));
        push(format!(
            "scale = {}",
            match sweep.scale {
                SweepScale::Linear => "linear",
                SweepScale::Log => "log",
            }
        ));
    }
    out
}
