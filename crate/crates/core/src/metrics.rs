//! Accuracy and performance descriptors shared by the experiments.

use num_complex::Complex64;
use std::time::{Duration, Instant};
use thiserror::Error;

use crate::discretize::SampledPotential;

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("relative error against a zero reference is undefined")]
    ZeroReference,
    #[error("arrays differ in length: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("non-finite integrand at grid index {index}")]
    NonFiniteInput { index: usize },
}

/// Error descriptors for one (scheme, n) experiment cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub relative: f64,
    pub msre: Option<f64>,
    /// Wall-clock seconds divided by the number of samples processed.
    pub runtime_per_sample: f64,
}

/// `|computed - analytical| / |analytical|`.
pub fn relative_error(computed: Complex64, analytical: Complex64) -> Result<f64, MetricsError> {
    let denom = analytical.norm();
    if denom == 0.0 {
        return Err(MetricsError::ZeroReference);
    }
    Ok((computed - analytical).norm() / denom)
}

/// Mean squared relative error, falling back to the plain squared difference
/// wherever the reference vanishes.
pub fn msre(computed: &[Complex64], analytical: &[Complex64]) -> Result<f64, MetricsError> {
    if computed.len() != analytical.len() {
        return Err(MetricsError::LengthMismatch {
            left: computed.len(),
            right: analytical.len(),
        });
    }
    if computed.is_empty() {
        return Err(MetricsError::LengthMismatch { left: 0, right: 0 });
    }
    let mut acc = 0.0;
    for (c, a) in computed.iter().zip(analytical) {
        let d = (c - a).norm_sqr();
        let w = a.norm_sqr();
        acc += if w == 0.0 { d } else { d / w };
    }
    Ok(acc / computed.len() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergySource {
    /// Values are `a(xi)`: integrand `-(1/pi) log |a|^2`.
    FromA,
    /// Values are `r(xi)`: integrand `(1/pi) log(1 + |r|^2)`.
    FromR,
}

/// Energy carried by the continuous spectrum, by trapezoidal quadrature over
/// a uniform real grid.
pub fn continuous_energy(
    values: &[Complex64],
    xi_grid: &[f64],
    source: EnergySource,
) -> Result<f64, MetricsError> {
    if values.len() != xi_grid.len() {
        return Err(MetricsError::LengthMismatch {
            left: values.len(),
            right: xi_grid.len(),
        });
    }
    if values.len() < 2 {
        return Err(MetricsError::LengthMismatch {
            left: values.len(),
            right: 2,
        });
    }
    let integrand: Vec<f64> = values
        .iter()
        .enumerate()
        .map(|(index, v)| {
            let y = match source {
                EnergySource::FromA => -(v.norm_sqr()).ln() / std::f64::consts::PI,
                EnergySource::FromR => (1.0 + v.norm_sqr()).ln() / std::f64::consts::PI,
            };
            if y.is_finite() {
                Ok(y)
            } else {
                Err(MetricsError::NonFiniteInput { index })
            }
        })
        .collect::<Result<_, _>>()?;
    let mut acc = 0.0;
    for (k, pair) in integrand.windows(2).enumerate() {
        acc += 0.5 * (pair[0] + pair[1]) * (xi_grid[k + 1] - xi_grid[k]);
    }
    Ok(acc)
}

/// Advisory upper bound on `Im(xi)` for contour sizing: half the discrete
/// `L^2` norm of the potential, `(1/2) sum |q_m|^2 dt`.
pub fn imag_bound_from_energy(pot: &SampledPotential) -> f64 {
    0.5 * pot.dt() * pot.samples().iter().map(|q| q.norm_sqr()).sum::<f64>()
}

/// Median wall-clock duration of `f` over `repeats` runs (at least 3).
pub fn median_runtime<F: FnMut()>(repeats: usize, mut f: F) -> Duration {
    let reps = repeats.max(3);
    let mut times: Vec<Duration> = (0..reps)
        .map(|_| {
            let t0 = Instant::now();
            f();
            t0.elapsed()
        })
        .collect();
    times.sort();
    times[reps / 2]
}
