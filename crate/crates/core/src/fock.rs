//! Truncated number-basis state containers: coherent states, the two-mode
//! squeezed vacuum and its exponential-operator construction, partial traces,
//! von Neumann entropy, and pure-state fidelity.
//!
//! All containers are plain value types over a basis truncated at a cutoff N
//! (indices 0..=N). Truncation losses are reported as explicit deficits; no
//! operation renormalizes silently except `coherent_state`, which reports the
//! factor it applied.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Tolerance for treating a state as normalized.
pub const NORMALIZATION_TOL: f64 = 1e-10;
/// Slack allowed above unit norm before a container is rejected.
pub const NORM_OVERSHOOT_TOL: f64 = 1e-12;
/// Default truncation-tail budget for automatic cutoff selection.
pub const DEFAULT_TAIL_EPSILON: f64 = 1e-12;
/// Hard ceiling for automatic cutoff selection.
pub const MAX_AUTO_CUTOFF: usize = 500;
/// Reduced-state eigenvalues in [-EIGENVALUE_CLIP, 0) are clipped to zero;
/// anything more negative is an error.
pub const EIGENVALUE_CLIP: f64 = 1e-10;

/// Single-mode state vector over |0>..|N>.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    amplitudes: DVector<Complex64>,
}

impl FockVector {
    /// Wraps raw amplitudes; the squared norm must lie in (0, 1 + 1e-12].
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.len() < 2 {
            return Err(Error::GridTooSmall {
                len: amplitudes.len(),
                min: 2,
            });
        }
        let v = DVector::from_vec(amplitudes);
        let norm_sq = v.norm_squared();
        if !(norm_sq > 0.0) || norm_sq > 1.0 + NORM_OVERSHOOT_TOL {
            return Err(Error::NotNormalized {
                deviation: (norm_sq - 1.0).abs(),
            });
        }
        Ok(FockVector { amplitudes: v })
    }

    /// |n> in a basis truncated at `cutoff`.
    pub fn basis_state(n: usize, cutoff: usize) -> Result<Self> {
        if n > cutoff {
            return Err(Error::ShiftOutOfRange { shift: n, cutoff });
        }
        let mut v = vec![Complex64::ZERO; cutoff + 1];
        v[n] = Complex64::ONE;
        FockVector::from_amplitudes(v)
    }

    pub fn cutoff(&self) -> usize {
        self.amplitudes.len() - 1
    }

    pub fn amplitude(&self, n: usize) -> Complex64 {
        self.amplitudes[n]
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sq() - 1.0).abs() <= NORMALIZATION_TOL
    }

    /// <self|other>, summed over the common index range.
    pub fn inner(&self, other: &FockVector) -> Complex64 {
        let n = self.amplitudes.len().min(other.amplitudes.len());
        (0..n)
            .map(|i| self.amplitudes[i].conj() * other.amplitudes[i])
            .sum()
    }

    /// Unit-norm copy.
    pub fn normalized(&self) -> FockVector {
        let norm = self.norm_sq().sqrt();
        FockVector {
            amplitudes: self.amplitudes.map(|a| a / norm),
        }
    }

    /// <n> of the state (normalized by the actual norm).
    pub fn mean_occupation(&self) -> f64 {
        let w: f64 = self
            .amplitudes
            .iter()
            .enumerate()
            .map(|(n, a)| n as f64 * a.norm_sqr())
            .sum();
        w / self.norm_sq()
    }
}

/// Coherent amplitude plus the basis cutoff it is to be expanded over.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentSpec {
    pub amplitude: Complex64,
    pub cutoff: usize,
}

/// A truncated coherent state together with its truncation diagnostics.
#[derive(Debug, Clone)]
pub struct CoherentState {
    pub state: FockVector,
    /// Factor applied to the raw series coefficients to restore unit norm.
    pub renormalization: f64,
    /// Poisson weight beyond the cutoff, before renormalization.
    pub tail: f64,
}

/// Expand |varsigma> over |0>..|N>: c_n = exp(-|s|^2/2) s^n / sqrt(n!),
/// then renormalize over the truncated basis.
///
/// Coefficients are built by the ratio recurrence c_{n+1} = c_n s/sqrt(n+1),
/// never through a raw factorial.
pub fn coherent_state(spec: &CoherentSpec) -> Result<CoherentState> {
    coherent_state_with_epsilon(spec, DEFAULT_TAIL_EPSILON)
}

/// As `coherent_state` with an explicit tail budget.
pub fn coherent_state_with_epsilon(spec: &CoherentSpec, epsilon: f64) -> Result<CoherentState> {
    if spec.cutoff < 1 {
        return Err(Error::CutoffTooSmall {
            cutoff: spec.cutoff,
            reason: "cutoff must be at least 1".into(),
        });
    }
    let s = spec.amplitude;
    let mut raw = Vec::with_capacity(spec.cutoff + 1);
    let mut c = Complex64::new((-0.5 * s.norm_sqr()).exp(), 0.0);
    raw.push(c);
    for n in 0..spec.cutoff {
        c *= s / ((n + 1) as f64).sqrt();
        raw.push(c);
    }
    let norm_sq: f64 = raw.iter().map(|a| a.norm_sqr()).sum();
    let tail = (1.0 - norm_sq).max(0.0);
    if tail >= epsilon {
        return Err(Error::CutoffTooSmall {
            cutoff: spec.cutoff,
            reason: format!("coherent tail {tail:.3e} >= epsilon {epsilon:.1e}"),
        });
    }
    let renormalization = 1.0 / norm_sq.sqrt();
    let state = FockVector::from_amplitudes(
        raw.into_iter().map(|a| a * renormalization).collect(),
    )?;
    Ok(CoherentState {
        state,
        renormalization,
        tail,
    })
}

/// Which half of a two-mode state survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    I,
    II,
}

/// Two-mode pure state c_{mn} |m>_I |n>_II over a square truncated basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeState {
    amplitudes: DMatrix<Complex64>,
    /// Weight lost to truncation when known in closed form (geometric tail
    /// for the squeezed vacuum); zero for states built from raw matrices.
    analytic_tail: f64,
}

impl TwoModeState {
    pub fn from_matrix(amplitudes: DMatrix<Complex64>) -> Result<Self> {
        if !amplitudes.is_square() || amplitudes.nrows() < 2 {
            return Err(Error::GridTooSmall {
                len: amplitudes.nrows(),
                min: 2,
            });
        }
        let norm_sq = amplitudes.norm_squared();
        if !(norm_sq > 0.0) || norm_sq > 1.0 + NORM_OVERSHOOT_TOL {
            return Err(Error::NotNormalized {
                deviation: (norm_sq - 1.0).abs(),
            });
        }
        Ok(TwoModeState {
            amplitudes,
            analytic_tail: 0.0,
        })
    }

    pub fn cutoff(&self) -> usize {
        self.amplitudes.nrows() - 1
    }

    pub fn amplitude(&self, m: usize, n: usize) -> Complex64 {
        self.amplitudes[(m, n)]
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    /// Known closed-form truncation loss, if any.
    pub fn analytic_tail(&self) -> f64 {
        self.analytic_tail
    }

    /// |norm^2 + tail - 1|: how far the state is from a truncated unit vector.
    pub fn purity_defect(&self) -> f64 {
        (self.norm_sq() + self.analytic_tail - 1.0).abs()
    }
}

fn check_squeeze(r: f64) -> Result<()> {
    if r < 0.0 || !r.is_finite() {
        return Err(Error::NegativeSqueeze { value: r });
    }
    Ok(())
}

/// Two-mode squeezed vacuum, diagonal closed form:
/// c_{nn} = tanh^n r / cosh r, zero elsewhere.
///
/// The truncation deficit is the geometric tail tanh^{2(N+1)} r, stored on
/// the returned state rather than folded back into the amplitudes.
pub fn two_mode_squeezed_vacuum(r: f64, cutoff: usize) -> Result<TwoModeState> {
    check_squeeze(r)?;
    if cutoff < 1 {
        return Err(Error::CutoffTooSmall {
            cutoff,
            reason: "cutoff must be at least 1".into(),
        });
    }
    let t = r.tanh();
    let z = 1.0 / r.cosh();
    let dim = cutoff + 1;
    let mut m = DMatrix::from_element(dim, dim, Complex64::ZERO);
    let mut coeff = z;
    for n in 0..dim {
        m[(n, n)] = Complex64::new(coeff, 0.0);
        coeff *= t;
    }
    Ok(TwoModeState {
        amplitudes: m,
        analytic_tail: t.powi(2 * (cutoff as i32 + 1)),
    })
}

/// Independent construction of the same state: apply the series
/// exp(tanh r a^dag b^dag) term by term to |0,0> in the truncated basis,
/// then attach the closed-form normalization 1/cosh r.
///
/// The pair-creation operator is applied with its explicit sqrt(n+1) matrix
/// elements; the geometric amplitudes emerge from the series rather than
/// being written down, which makes this an oracle for
/// `two_mode_squeezed_vacuum`. Renormalizing over the truncated basis instead
/// of using 1/cosh r would shift every amplitude by the half-tail and break
/// elementwise agreement at large r.
pub fn squeezed_vacuum_exponential(r: f64, cutoff: usize) -> Result<TwoModeState> {
    check_squeeze(r)?;
    if cutoff < 1 {
        return Err(Error::CutoffTooSmall {
            cutoff,
            reason: "cutoff must be at least 1".into(),
        });
    }
    let t = r.tanh();
    let dim = cutoff + 1;
    let mut state = DMatrix::from_element(dim, dim, Complex64::ZERO);
    state[(0, 0)] = Complex64::ONE;
    let mut term = state.clone();
    for k in 1..dim {
        // term <- (t/k) * (a^dag x b^dag) term; nilpotent beyond the cutoff.
        let mut next = DMatrix::from_element(dim, dim, Complex64::ZERO);
        for i in 0..dim - 1 {
            for j in 0..dim - 1 {
                let amp = term[(i, j)];
                if amp != Complex64::ZERO {
                    let raise = ((i + 1) as f64).sqrt() * ((j + 1) as f64).sqrt();
                    next[(i + 1, j + 1)] = amp * (t * raise / k as f64);
                }
            }
        }
        state += &next;
        term = next;
    }
    let z = Complex64::new(1.0 / r.cosh(), 0.0);
    state *= z;
    Ok(TwoModeState {
        amplitudes: state,
        analytic_tail: t.powi(2 * (cutoff as i32 + 1)),
    })
}

/// Single-mode density operator with its truncation deficit.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    matrix: DMatrix<Complex64>,
}

impl DensityOperator {
    /// Wraps a Hermitian matrix with trace in (0, 1 + 1e-12].
    pub fn from_matrix(matrix: DMatrix<Complex64>) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() < 2 {
            return Err(Error::GridTooSmall {
                len: matrix.nrows(),
                min: 2,
            });
        }
        let dev = hermiticity_deviation(&matrix);
        if dev > 1e-12 {
            return Err(Error::NotNormalized { deviation: dev });
        }
        let trace = matrix.trace().re;
        if !(trace > 0.0) || trace > 1.0 + NORM_OVERSHOOT_TOL {
            return Err(Error::NotNormalized {
                deviation: (trace - 1.0).abs(),
            });
        }
        Ok(DensityOperator { matrix })
    }

    pub fn cutoff(&self) -> usize {
        self.matrix.nrows() - 1
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// 1 - trace: probability weight lost to truncation.
    pub fn trace_deficit(&self) -> f64 {
        1.0 - self.trace()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.matrix.nrows()).map(|n| self.matrix[(n, n)].re).collect()
    }

    pub fn mean_occupation(&self) -> f64 {
        (0..self.matrix.nrows())
            .map(|n| n as f64 * self.matrix[(n, n)].re)
            .sum()
    }

    /// Eigenvalues with the [-1e-10, 0) window clipped to zero; anything
    /// more negative is rejected.
    pub fn eigenvalues_clipped(&self) -> Result<Vec<f64>> {
        let eig = self.matrix.clone().symmetric_eigen();
        let mut out = Vec::with_capacity(eig.eigenvalues.len());
        for &p in eig.eigenvalues.iter() {
            if p < -EIGENVALUE_CLIP {
                return Err(Error::NegativeEigenvalue { value: p });
            }
            out.push(p.max(0.0));
        }
        Ok(out)
    }
}

fn hermiticity_deviation(m: &DMatrix<Complex64>) -> f64 {
    let mut dev: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            dev = dev.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Partial trace of a two-mode pure state over the other mode.
///
/// For the coefficient matrix C, keeping mode I gives C C^H and keeping
/// mode II gives conj(C^H C); both are Hermitian by construction.
pub fn reduced_state(state: &TwoModeState, keep: Mode) -> DensityOperator {
    let c = &state.amplitudes;
    let rho = match keep {
        Mode::I => c * c.adjoint(),
        Mode::II => (c.adjoint() * c).conjugate(),
    };
    DensityOperator { matrix: rho }
}

/// Schmidt spectrum (reduced-state eigenvalues), descending.
pub fn schmidt_spectrum(state: &TwoModeState) -> Result<Vec<f64>> {
    let mut evals = reduced_state(state, Mode::I).eigenvalues_clipped()?;
    evals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(evals)
}

/// Von Neumann entropy (nats) of either reduced mode of a pure two-mode
/// state; 0 ln 0 counts as 0.
///
/// The state must be numerically pure: its squared norm plus any known
/// analytic tail must sit within 1e-8 of one.
pub fn entanglement_entropy(state: &TwoModeState) -> Result<f64> {
    let defect = state.purity_defect();
    if defect > 1e-8 {
        return Err(Error::NotNormalized { deviation: defect });
    }
    let evals = reduced_state(state, Mode::I).eigenvalues_clipped()?;
    Ok(evals
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum())
}

/// |<a|b>|^2 for normalized pure states.
pub fn fidelity_pure(a: &FockVector, b: &FockVector) -> Result<f64> {
    for v in [a, b] {
        let dev = (v.norm_sq() - 1.0).abs();
        if dev > NORMALIZATION_TOL {
            return Err(Error::NotNormalized { deviation: dev });
        }
    }
    Ok(a.inner(b).norm_sqr().min(1.0))
}

/// Smallest cutoff N with tanh^{2(N+1)} r < epsilon and, when a coherent
/// target amplitude is in play, Poisson tail beyond N < epsilon. Capped at
/// 500; exceeding the cap is a hard error.
pub fn auto_cutoff(tanh_r: f64, coherent_abs: Option<f64>, epsilon: f64) -> Result<usize> {
    let mut n = 1usize;
    if tanh_r > 0.0 {
        let t2 = tanh_r * tanh_r;
        let mut tail = t2 * t2; // tanh^{2(N+1)} at N = 1
        while tail >= epsilon {
            n += 1;
            if n > MAX_AUTO_CUTOFF {
                return Err(Error::CutoffTooSmall {
                    cutoff: MAX_AUTO_CUTOFF,
                    reason: format!(
                        "auto cutoff for tanh r = {tanh_r} exceeds the {MAX_AUTO_CUTOFF} cap"
                    ),
                });
            }
            tail *= t2;
        }
    }
    if let Some(abs) = coherent_abs {
        let mu = abs * abs;
        let mut term = (-mu).exp();
        let mut cum = term;
        let mut m = 0usize;
        while 1.0 - cum >= epsilon {
            m += 1;
            if m > MAX_AUTO_CUTOFF {
                return Err(Error::CutoffTooSmall {
                    cutoff: MAX_AUTO_CUTOFF,
                    reason: format!(
                        "auto cutoff for coherent |amp| = {abs} exceeds the {MAX_AUTO_CUTOFF} cap"
                    ),
                });
            }
            term *= mu / m as f64;
            cum += term;
        }
        n = n.max(m);
    }
    Ok(n.max(1))
}

// --- JSON wire shapes -----------------------------------------------------
//
// FockVector:      {"cutoff": N, "amplitudes": [[re, im], ...]}
// TwoModeState:    {"cutoff": N, "amplitudes": [[[re, im], ...], ...]}
// DensityOperator: {"cutoff": N, "matrix": [[[re, im], ...], ...],
//                   "trace_deficit": d}

#[derive(Serialize, Deserialize)]
struct FockVectorRepr {
    cutoff: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FockVectorRepr {
            cutoff: self.cutoff(),
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FockVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FockVectorRepr::deserialize(deserializer)?;
        if repr.amplitudes.len() != repr.cutoff + 1 {
            return Err(D::Error::custom(format!(
                "cutoff {} does not match {} amplitudes",
                repr.cutoff,
                repr.amplitudes.len()
            )));
        }
        FockVector::from_amplitudes(
            repr.amplitudes
                .into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect(),
        )
        .map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TwoModeStateRepr {
    cutoff: usize,
    amplitudes: Vec<Vec<[f64; 2]>>,
}

impl Serialize for TwoModeState {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let dim = self.amplitudes.nrows();
        TwoModeStateRepr {
            cutoff: self.cutoff(),
            amplitudes: (0..dim)
                .map(|m| {
                    (0..dim)
                        .map(|n| {
                            let a = self.amplitudes[(m, n)];
                            [a.re, a.im]
                        })
                        .collect()
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwoModeState {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = TwoModeStateRepr::deserialize(deserializer)?;
        let dim = repr.cutoff + 1;
        if repr.amplitudes.len() != dim || repr.amplitudes.iter().any(|row| row.len() != dim) {
            return Err(D::Error::custom("amplitude matrix does not match cutoff"));
        }
        let m = DMatrix::from_fn(dim, dim, |i, j| {
            let [re, im] = repr.amplitudes[i][j];
            Complex64::new(re, im)
        });
        TwoModeState::from_matrix(m).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct DensityOperatorRepr {
    cutoff: usize,
    matrix: Vec<Vec<[f64; 2]>>,
    trace_deficit: f64,
}

impl Serialize for DensityOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let dim = self.matrix.nrows();
        DensityOperatorRepr {
            cutoff: self.cutoff(),
            matrix: (0..dim)
                .map(|i| {
                    (0..dim)
                        .map(|j| {
                            let a = self.matrix[(i, j)];
                            [a.re, a.im]
                        })
                        .collect()
                })
                .collect(),
            trace_deficit: self.trace_deficit(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DensityOperator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = DensityOperatorRepr::deserialize(deserializer)?;
        let dim = repr.cutoff + 1;
        if repr.matrix.len() != dim || repr.matrix.iter().any(|row| row.len() != dim) {
            return Err(D::Error::custom("matrix does not match cutoff"));
        }
        let m = DMatrix::from_fn(dim, dim, |i, j| {
            let [re, im] = repr.matrix[i][j];
            Complex64::new(re, im)
        });
        DensityOperator::from_matrix(m).map_err(D::Error::custom)
    }
}
