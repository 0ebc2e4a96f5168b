//! Teleportation over the horizon-generated two-mode squeezed resource:
//! the general unitary-measurement form, the number-phase conditional
//! outcomes, and the closed-form coherent-target fidelity.
//!
//! Conventions for the number-phase protocol (see `mb_conditional`): Alice
//! measures the photon-number difference between the target mode and her
//! half of the resource. The outcome (k, sign) shifts Bob's conditional
//! state by k quanta up (`Plus`) or down (`Minus`); the k = 0 outcome leaves
//! the geometrically damped target amplitudes lambda^n c_n in place, which
//! for a coherent target reproduces F = exp(-|amp|^2 (1 - tanh r)^2).
//! Outcome probabilities are the squared norms of the unnormalized
//! conditional states, so they sum to one up to the resource truncation
//! tail. A literal transcription variant with shifts of 2k is kept for
//! comparison (`mb_conditional_literal`); its outcome family is incomplete
//! and no correctness claim attaches to it.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{
    auto_cutoff, coherent_state, fidelity_pure, CoherentSpec, FockVector, DEFAULT_TAIL_EPSILON,
};
use crate::horizon::hawking_temperature;
use crate::squeeze::{mean_occupation, squeeze_parameter};
use crate::units::UnitSystem;

/// Measurement unitary U = S1 (x) S2 acting on the target and mode-I spaces.
#[derive(Debug, Clone)]
pub struct MeasurementSpec {
    s1: DMatrix<Complex64>,
    s2: DMatrix<Complex64>,
}

/// Maximum allowed departure of S^H S from the identity.
pub const UNITARITY_TOL: f64 = 1e-10;

impl MeasurementSpec {
    pub fn new(s1: DMatrix<Complex64>, s2: DMatrix<Complex64>) -> Result<Self> {
        for (which, s) in [("S1", &s1), ("S2", &s2)] {
            if !s.is_square() || s.nrows() != s1.nrows() {
                return Err(Error::NonUnitaryMeasurement {
                    which,
                    deviation: f64::INFINITY,
                });
            }
            let dev = unitarity_deviation(s);
            if dev > UNITARITY_TOL {
                return Err(Error::NonUnitaryMeasurement {
                    which,
                    deviation: dev,
                });
            }
        }
        Ok(MeasurementSpec { s1, s2 })
    }

    pub fn identity(dim: usize) -> Self {
        MeasurementSpec {
            s1: DMatrix::identity(dim, dim),
            s2: DMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.s1.nrows()
    }

    /// The matrix S2^T S1 appearing in the output components (plain
    /// transpose, not adjoint).
    pub fn combined(&self) -> DMatrix<Complex64> {
        self.s2.transpose() * &self.s1
    }
}

fn unitarity_deviation(s: &DMatrix<Complex64>) -> f64 {
    let gram = s.adjoint() * s;
    let mut dev: f64 = 0.0;
    for i in 0..gram.nrows() {
        for j in 0..gram.ncols() {
            let target = if i == j { Complex64::ONE } else { Complex64::ZERO };
            dev = dev.max((gram[(i, j)] - target).norm());
        }
    }
    dev
}

/// Haar-distributed random unitary built by QR-orthonormalizing a complex
/// Gaussian matrix, with the usual phase fix on the R diagonal.
pub fn haar_random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DMatrix<Complex64> {
    let g = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let (q, r) = g.qr().unpack();
    let mut u = q;
    for i in 0..dim {
        let rii = r[(i, i)];
        let phase = if rii.norm() > 0.0 {
            rii / rii.norm()
        } else {
            Complex64::ONE
        };
        let correction = phase.conj();
        for k in 0..dim {
            u[(k, i)] *= correction;
        }
    }
    u
}

/// Which way the conditional output is shifted in photon number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutcomeSign {
    Plus,
    Minus,
}

impl std::fmt::Display for OutcomeSign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OutcomeSign::Plus => "+",
            OutcomeSign::Minus => "-",
        })
    }
}

/// Label of a number-phase outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MbLabel {
    pub k: usize,
    pub sign: OutcomeSign,
}

/// Bob's conditional state, the probability of obtaining it, and its
/// fidelity against the original target.
#[derive(Debug, Clone, Serialize)]
pub struct TeleportOutcome {
    pub output: FockVector,
    pub probability: f64,
    pub fidelity: f64,
    pub label: Option<MbLabel>,
}

fn check_target(target: &FockVector) -> Result<()> {
    let dev = (target.norm_sq() - 1.0).abs();
    if dev > crate::fock::NORMALIZATION_TOL {
        return Err(Error::NotNormalized { deviation: dev });
    }
    Ok(())
}

fn check_squeeze(r: f64) -> Result<f64> {
    if r < 0.0 || !r.is_finite() {
        return Err(Error::NegativeSqueeze { value: r });
    }
    Ok(r.tanh())
}

/// Outcome assembled from an unnormalized conditional amplitude vector.
///
/// A zero vector marks an outcome that cannot occur; by convention it is
/// reported with probability zero, a vacuum placeholder output, and zero
/// fidelity.
fn outcome_from_raw(
    raw: DVector<Complex64>,
    probability: f64,
    target: &FockVector,
    label: Option<MbLabel>,
) -> Result<TeleportOutcome> {
    let norm = raw.norm();
    if norm == 0.0 {
        return Ok(TeleportOutcome {
            output: FockVector::basis_state(0, raw.len() - 1)?,
            probability: 0.0,
            fidelity: 0.0,
            label,
        });
    }
    let output = FockVector::from_amplitudes(raw.iter().map(|a| a / norm).collect())?;
    let fidelity = fidelity_pure(target, &output)?;
    Ok(TeleportOutcome {
        output,
        probability,
        fidelity,
        label,
    })
}

/// General teleportation output for a measurement unitary U = S1 (x) S2:
///
/// ```text
/// X_j  proportional to  cosh^-1 r  sum_l tanh^l r (S2^T S1)_{jl} phi_l
/// ```
///
/// with the normalization gamma fixed numerically from the output itself.
/// The reported probability is the squared amplitude of Alice's projection
/// with the entangled projector normalized over the truncated basis, i.e.
/// |gamma_Theta|^2 = 1/(N+1).
pub fn teleport_general(
    target: &FockVector,
    r: f64,
    meas: &MeasurementSpec,
) -> Result<TeleportOutcome> {
    check_target(target)?;
    let t = check_squeeze(r)?;
    let dim = target.cutoff() + 1;
    if meas.dim() != dim {
        return Err(Error::NonUnitaryMeasurement {
            which: "S1",
            deviation: f64::INFINITY,
        });
    }
    let inv_cosh = 1.0 / r.cosh();
    let mut weighted = DVector::from_element(dim, Complex64::ZERO);
    let mut weight = inv_cosh;
    for l in 0..dim {
        weighted[l] = target.amplitude(l) * weight;
        weight *= t;
    }
    let raw = meas.combined() * weighted;
    let probability = raw.norm_squared() / dim as f64;
    outcome_from_raw(raw, probability, target, None)
}

/// Canonical number-phase conditional outcome (k, sign).
///
/// Bob's unnormalized state for the outcome shifting by k quanta up is
/// sqrt(1-lambda^2) lambda^{n+k} c_n |n+k>, and for k down
/// sqrt(1-lambda^2) lambda^n c_{n+k} |n>, with lambda = tanh r. The
/// probability is the squared norm of that vector, so the family of all
/// outcomes sums to (1 - lambda^{2(N+1)}) in the truncated basis.
pub fn mb_conditional(
    target: &FockVector,
    r: f64,
    k: usize,
    sign: OutcomeSign,
) -> Result<TeleportOutcome> {
    check_target(target)?;
    let lambda = check_squeeze(r)?;
    let n = target.cutoff();
    if k > n {
        return Err(Error::ShiftOutOfRange { shift: k, cutoff: n });
    }
    let dim = n + 1;
    let one_minus = 1.0 - lambda * lambda;
    let mut raw = DVector::from_element(dim, Complex64::ZERO);
    match sign {
        OutcomeSign::Plus => {
            // Bob index j = m + k carries lambda^j c_m.
            let mut damp = lambda.powi(k as i32);
            for m in 0..dim - k {
                raw[m + k] = target.amplitude(m) * damp;
                damp *= lambda;
            }
        }
        OutcomeSign::Minus => {
            // Bob index j carries lambda^j c_{j+k}.
            let mut damp = 1.0;
            for j in 0..dim - k {
                raw[j] = target.amplitude(j + k) * damp;
                damp *= lambda;
            }
        }
    }
    let probability = one_minus * raw.norm_squared();
    outcome_from_raw(raw, probability, target, Some(MbLabel { k, sign }))
}

/// Literal transcription of the typeset conditional-state formula, kept for
/// comparison only: shifts come in steps of 2k with damping exponent
/// tanh^{n +/- 2k} r, and the probability uses the typeset sum
/// (1 - tanh^2 r) sum_n lambda^{2n} |c_{n +/- 2k}|^2. The outcome family
/// covers only even shifts and does not sum to one.
pub fn mb_conditional_literal(
    target: &FockVector,
    r: f64,
    k: usize,
    sign: OutcomeSign,
) -> Result<TeleportOutcome> {
    check_target(target)?;
    let lambda = check_squeeze(r)?;
    let n = target.cutoff();
    let shift = 2 * k;
    if shift > n {
        return Err(Error::ShiftOutOfRange { shift, cutoff: n });
    }
    let dim = n + 1;
    let one_minus = 1.0 - lambda * lambda;
    let mut raw = DVector::from_element(dim, Complex64::ZERO);
    let mut typeset_sum = 0.0;
    match sign {
        OutcomeSign::Plus => {
            for m in 0..dim - shift {
                // amplitude lambda^{m+2k} c_m at |m + 2k>
                raw[m + shift] = target.amplitude(m) * lambda.powi((m + shift) as i32);
            }
            for m in 0..dim - shift {
                typeset_sum += lambda.powi(2 * m as i32) * target.amplitude(m + shift).norm_sqr();
            }
        }
        OutcomeSign::Minus => {
            for j in 0..dim - shift {
                // amplitude lambda^j c_{j+2k} at |j>; equivalently
                // lambda^{m-2k} c_m at |m - 2k> for m >= 2k.
                raw[j] = target.amplitude(j + shift) * lambda.powi(j as i32);
            }
            for m in shift..dim {
                typeset_sum += lambda.powi(2 * m as i32) * target.amplitude(m - shift).norm_sqr();
            }
        }
    }
    let probability = one_minus * typeset_sum;
    outcome_from_raw(raw, probability, target, Some(MbLabel { k, sign }))
}

/// Closed-form fidelity of the zero-difference outcome for a coherent
/// target: F = exp(-|amp|^2 (1 - tanh r)^2).
pub fn analytic_fidelity_zero(amplitude: Complex64, r: f64) -> Result<f64> {
    let t = check_squeeze(r)?;
    let d = 1.0 - t;
    Ok((-amplitude.norm_sqr() * d * d).exp())
}

/// One row of a fidelity-versus-surface-gravity sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub temperature: f64,
    pub r: f64,
    pub nbar: f64,
    pub f_analytic: f64,
    pub f_simulated: f64,
    pub p0: f64,
}

/// Chain squeeze mapping and the k = 0 conditional protocol across a grid
/// of surface gravities for a fixed mode frequency and coherent target.
///
/// A single cutoff is used for every row (the given one, or the automatic
/// choice for the most demanding row) so columns stay comparable.
pub fn fidelity_temperature_sweep(
    target_amplitude: Complex64,
    omega: f64,
    alphas: &[f64],
    units: &UnitSystem,
    cutoff: Option<usize>,
) -> Result<Vec<SweepRow>> {
    if alphas.is_empty() {
        return Err(Error::ConfigValidation {
            field: "sweep".into(),
            message: "sweep grid is empty".into(),
        });
    }
    let mut max_lambda: f64 = 0.0;
    for &alpha in alphas {
        let spec = squeeze_parameter(omega, alpha)?;
        max_lambda = max_lambda.max(spec.tanh_r());
    }
    let n = match cutoff {
        Some(n) => n,
        None => auto_cutoff(
            max_lambda,
            Some(target_amplitude.norm()),
            DEFAULT_TAIL_EPSILON,
        )?,
    };
    let target = coherent_state(&CoherentSpec {
        amplitude: target_amplitude,
        cutoff: n,
    })?
    .state;
    let mut rows = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let spec = squeeze_parameter(omega, alpha)?;
        let outcome = mb_conditional(&target, spec.r, 0, OutcomeSign::Plus)?;
        rows.push(SweepRow {
            alpha,
            temperature: hawking_temperature(alpha, units)?,
            r: spec.r,
            nbar: mean_occupation(omega, alpha)?,
            f_analytic: analytic_fidelity_zero(target_amplitude, spec.r)?,
            f_simulated: outcome.fidelity,
            p0: outcome.probability,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    const ATANH_HALF: f64 = 0.549_306_144_334_054_8;

    #[test]
    fn general_identity_preserves_basis_state() {
        let target = FockVector::basis_state(1, 12).unwrap();
        let meas = MeasurementSpec::identity(13);
        for &r in &[0.2, 0.7, 1.5] {
            let out = teleport_general(&target, r, &meas).unwrap();
            assert_abs_diff_eq!(out.fidelity, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(out.output.amplitude(1).re, 1.0, epsilon = 1e-12);
            assert!(out.probability > 0.0 && out.probability <= 1.0);
        }
    }

    #[test]
    fn general_identity_superposition_weights() {
        // (|0> + |1>)/sqrt(2) at tanh r = 1/2 -> (2|0> + |1>)/sqrt(5), F = 0.9.
        let inv = 1.0 / 2f64.sqrt();
        let mut amps = vec![Complex64::ZERO; 16];
        amps[0] = c(inv);
        amps[1] = c(inv);
        let target = FockVector::from_amplitudes(amps).unwrap();
        let out = teleport_general(&target, ATANH_HALF, &MeasurementSpec::identity(16)).unwrap();
        let s5 = 5f64.sqrt();
        assert_relative_eq!(out.output.amplitude(0).re, 2.0 / s5, max_relative = 1e-12);
        assert_relative_eq!(out.output.amplitude(1).re, 1.0 / s5, max_relative = 1e-12);
        assert_relative_eq!(out.fidelity, 0.9, max_relative = 1e-12);
    }

    #[test]
    fn general_perfect_resource_limit() {
        let target = coherent_state(&CoherentSpec {
            amplitude: c(1.0),
            cutoff: 40,
        })
        .unwrap()
        .state;
        let r = f64::atanh(1.0 - 1e-12);
        let out = teleport_general(&target, r, &MeasurementSpec::identity(41)).unwrap();
        assert!((1.0 - out.fidelity).abs() < 1e-9);
    }

    #[test]
    fn general_rejects_nonunitary_measurement() {
        let mut s1 = DMatrix::identity(5, 5);
        s1[(0, 0)] = Complex64::new(2.0, 0.0);
        assert!(matches!(
            MeasurementSpec::new(s1, DMatrix::identity(5, 5)),
            Err(Error::NonUnitaryMeasurement { which: "S1", .. })
        ));
    }

    #[test]
    fn general_output_normalized_under_random_unitaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let target = coherent_state(&CoherentSpec {
            amplitude: Complex64::new(0.6, 0.4),
            cutoff: 18,
        })
        .unwrap()
        .state;
        for _ in 0..5 {
            let s1 = haar_random_unitary(19, &mut rng);
            let s2 = haar_random_unitary(19, &mut rng);
            let meas = MeasurementSpec::new(s1, s2).unwrap();
            let out = teleport_general(&target, 0.8, &meas).unwrap();
            assert_abs_diff_eq!(out.output.norm_sq(), 1.0, epsilon = 1e-12);
            assert!(out.probability > 0.0 && out.probability <= 1.0);
            assert!((0.0..=1.0).contains(&out.fidelity));
        }
    }

    #[test]
    fn conditional_vacuum_passthrough() {
        let target = FockVector::basis_state(0, 10).unwrap();
        let out = mb_conditional(&target, ATANH_HALF, 0, OutcomeSign::Plus).unwrap();
        assert_abs_diff_eq!(out.fidelity, 1.0, epsilon = 1e-14);
        assert_relative_eq!(out.probability, 0.75, max_relative = 1e-12);
        assert_eq!(out.label, Some(MbLabel { k: 0, sign: OutcomeSign::Plus }));
    }

    #[test]
    fn conditional_coherent_damping() {
        let target = coherent_state(&CoherentSpec {
            amplitude: c(1.0),
            cutoff: 50,
        })
        .unwrap()
        .state;
        let out = mb_conditional(&target, ATANH_HALF, 0, OutcomeSign::Plus).unwrap();
        assert_relative_eq!(out.fidelity, 0.778_800_783_071_404_9, max_relative = 1e-10);
        assert_relative_eq!(out.probability, 0.354_274_914_555_761, max_relative = 1e-10);
        // The output is the coherent state of amplitude lambda * amp.
        let expected = coherent_state(&CoherentSpec {
            amplitude: c(0.5),
            cutoff: 50,
        })
        .unwrap()
        .state;
        assert_relative_eq!(
            fidelity_pure(&out.output, &expected).unwrap(),
            1.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn conditional_perfect_resource_limit() {
        let target = coherent_state(&CoherentSpec {
            amplitude: c(1.2),
            cutoff: 45,
        })
        .unwrap()
        .state;
        let r = f64::atanh(1.0 - 1e-12);
        let out = mb_conditional(&target, r, 0, OutcomeSign::Plus).unwrap();
        assert!((1.0 - out.fidelity).abs() < 1e-9);
    }

    #[test]
    fn conditional_matches_general_identity_case() {
        let target = coherent_state(&CoherentSpec {
            amplitude: Complex64::new(0.8, -0.2),
            cutoff: 24,
        })
        .unwrap()
        .state;
        let a = mb_conditional(&target, 0.9, 0, OutcomeSign::Plus).unwrap();
        let b = teleport_general(&target, 0.9, &MeasurementSpec::identity(25)).unwrap();
        for i in 0..=24 {
            assert!((a.output.amplitude(i) - b.output.amplitude(i)).norm() < 1e-12);
        }
    }

    #[test]
    fn conditional_shift_moves_support() {
        let target = FockVector::basis_state(0, 10).unwrap();
        let up = mb_conditional(&target, 0.7, 3, OutcomeSign::Plus).unwrap();
        assert_abs_diff_eq!(up.output.amplitude(3).norm(), 1.0, epsilon = 1e-12);
        // Down-shift of the vacuum cannot occur.
        let down = mb_conditional(&target, 0.7, 3, OutcomeSign::Minus).unwrap();
        assert_eq!(down.probability, 0.0);
        assert_eq!(down.fidelity, 0.0);
    }

    #[test]
    fn conditional_probabilities_complete() {
        let target = coherent_state(&CoherentSpec {
            amplitude: c(1.0),
            cutoff: 40,
        })
        .unwrap()
        .state;
        let r: f64 = 0.8;
        let lambda = r.tanh();
        let mut total = 0.0;
        for k in 0..=40 {
            total += mb_conditional(&target, r, k, OutcomeSign::Plus)
                .unwrap()
                .probability;
            if k > 0 {
                total += mb_conditional(&target, r, k, OutcomeSign::Minus)
                    .unwrap()
                    .probability;
            }
        }
        let tail = lambda.powi(82);
        assert!(
            (1.0 - total).abs() <= 10.0 * tail + 1e-13,
            "sum {total}, tail {tail:.3e}"
        );
    }

    #[test]
    fn conditional_shift_out_of_range() {
        let target = FockVector::basis_state(0, 6).unwrap();
        assert!(matches!(
            mb_conditional(&target, 0.5, 7, OutcomeSign::Plus),
            Err(Error::ShiftOutOfRange { .. })
        ));
        assert!(matches!(
            mb_conditional_literal(&target, 0.5, 4, OutcomeSign::Plus),
            Err(Error::ShiftOutOfRange { .. })
        ));
    }

    #[test]
    fn literal_variant_agrees_at_k_zero() {
        let target = coherent_state(&CoherentSpec {
            amplitude: c(0.9),
            cutoff: 30,
        })
        .unwrap()
        .state;
        let canonical = mb_conditional(&target, 0.6, 0, OutcomeSign::Plus).unwrap();
        let literal = mb_conditional_literal(&target, 0.6, 0, OutcomeSign::Plus).unwrap();
        assert_abs_diff_eq!(canonical.fidelity, literal.fidelity, epsilon = 1e-13);
        assert_abs_diff_eq!(canonical.probability, literal.probability, epsilon = 1e-13);
    }

    #[test]
    fn literal_variant_state_matches_double_shift() {
        let target = coherent_state(&CoherentSpec {
            amplitude: c(0.9),
            cutoff: 30,
        })
        .unwrap()
        .state;
        let literal = mb_conditional_literal(&target, 0.6, 2, OutcomeSign::Plus).unwrap();
        let canonical = mb_conditional(&target, 0.6, 4, OutcomeSign::Plus).unwrap();
        for i in 0..=30 {
            assert!((literal.output.amplitude(i) - canonical.output.amplitude(i)).norm() < 1e-12);
        }
    }

    #[test]
    fn analytic_fidelity_limits() {
        assert_eq!(analytic_fidelity_zero(Complex64::ZERO, 2.0).unwrap(), 1.0);
        let near_one = analytic_fidelity_zero(c(1.0), 20.0).unwrap();
        assert!(1.0 - near_one < 1e-15);
        assert_relative_eq!(
            analytic_fidelity_zero(c(1.0), ATANH_HALF).unwrap(),
            0.778_800_783_071_404_9,
            max_relative = 1e-14
        );
        assert!(matches!(
            analytic_fidelity_zero(c(1.0), -0.5),
            Err(Error::NegativeSqueeze { .. })
        ));
    }

    #[test]
    fn sweep_chains_and_stays_monotone() {
        let units = UnitSystem::natural();
        let omega = 1.0;
        let alphas: Vec<f64> = (0..12)
            .map(|i| 1.0 + 9.0 * i as f64 / 11.0)
            .collect();
        let rows =
            fidelity_temperature_sweep(c(1.0), omega, &alphas, &units, None).unwrap();
        let mut last = 0.0;
        for row in &rows {
            assert!((row.f_simulated - row.f_analytic).abs() < 1e-8);
            assert!(row.f_analytic > last, "F must increase with alpha");
            assert_relative_eq!(
                row.temperature,
                row.alpha / std::f64::consts::TAU,
                max_relative = 1e-15
            );
            last = row.f_analytic;
        }
    }

    #[test]
    fn sweep_weak_gravity_limit() {
        let units = UnitSystem::natural();
        let rows = fidelity_temperature_sweep(c(1.0), 1.0, &[1e-3], &units, Some(30)).unwrap();
        assert_relative_eq!(rows[0].f_analytic, (-1.0f64).exp(), max_relative = 1e-10);
        assert_relative_eq!(rows[0].f_simulated, (-1.0f64).exp(), max_relative = 1e-8);
    }

    #[test]
    fn sweep_spot_value_ln2() {
        // pi omega / alpha = ln 2 gives tanh r = 1/2 and F = exp(-1/4).
        let units = UnitSystem::natural();
        let alpha = std::f64::consts::PI / std::f64::consts::LN_2;
        let rows = fidelity_temperature_sweep(c(1.0), 1.0, &[alpha], &units, None).unwrap();
        assert_relative_eq!(
            rows[0].f_analytic,
            0.778_800_783_071_404_9,
            max_relative = 1e-12
        );
        assert!((rows[0].f_simulated - rows[0].f_analytic).abs() < 1e-9);
    }
}
