//! Midpoint sampling of a potential onto a uniform grid, with CSV exchange.
//!
//! All integrators in [`crate::zss`] consume a [`SampledPotential`]: `n`
//! values of `q` taken at the midpoints `t_m = -L + (m - 1/2) dt` of the `n`
//! subintervals of `[-L, L]`, `dt = 2L/n`. Midpoint sampling is what keeps
//! the one-step schemes second-order accurate.
//!
//! The CSV form (`t,q_re,q_im`, one row per sample) exists for
//! cross-validation against external tools.

use num_complex::Complex64;
use std::io::{self, BufRead, Write};
use thiserror::Error;

use crate::profiles::ProfileSpec;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("grid needs at least two samples, got {n}")]
    TooFewSamples { n: usize },
    #[error("half-width must be positive and finite, got {half_width}")]
    InvalidHalfWidth { half_width: f64 },
    #[error("csv row {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error("csv rows are not a uniform midpoint grid (row {line})")]
    NonUniform { line: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A potential sampled at subinterval midpoints of `[-L, L]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledPotential {
    samples: Vec<Complex64>,
    half_width: f64,
    dt: f64,
}

impl SampledPotential {
    /// Sample a profile with `n` midpoints over `[-half_width, half_width]`.
    pub fn sample(spec: &ProfileSpec, half_width: f64, n: usize) -> Result<Self, GridError> {
        if n < 2 {
            return Err(GridError::TooFewSamples { n });
        }
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(GridError::InvalidHalfWidth { half_width });
        }
        let dt = 2.0 * half_width / n as f64;
        let samples = (0..n)
            .map(|k| spec.evaluate_q(-half_width + (k as f64 + 0.5) * dt))
            .collect();
        Ok(SampledPotential {
            samples,
            half_width,
            dt,
        })
    }

    /// Wrap raw midpoint samples (used by the CSV importer and by tests that
    /// need potentials with no closed form).
    pub fn from_samples(samples: Vec<Complex64>, half_width: f64) -> Result<Self, GridError> {
        if samples.len() < 2 {
            return Err(GridError::TooFewSamples { n: samples.len() });
        }
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(GridError::InvalidHalfWidth { half_width });
        }
        let dt = 2.0 * half_width / samples.len() as f64;
        Ok(SampledPotential {
            samples,
            half_width,
            dt,
        })
    }

    pub fn n(&self) -> usize {
        self.samples.len()
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// Midpoint time of subinterval `k` (zero-based).
    pub fn midpoint(&self, k: usize) -> f64 {
        -self.half_width + (k as f64 + 0.5) * self.dt
    }

    /// `t,q_re,q_im` rows, one per sample. Floats are written in shortest
    /// round-trip scientific form, so export/import is lossless.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "t,q_re,q_im")?;
        for (k, q) in self.samples.iter().enumerate() {
            writeln!(w, "{:e},{:e},{:e}", self.midpoint(k), q.re, q.im)?;
        }
        Ok(())
    }

    /// Parse rows written by [`Self::write_csv`] (or by an external tool
    /// using the same layout) back into a sampled potential.
    pub fn read_csv<R: BufRead>(r: R) -> Result<Self, GridError> {
        let mut rows: Vec<(f64, Complex64)> = Vec::new();
        for (idx, line) in r.lines().enumerate() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if idx == 0 && trimmed.starts_with('t') {
                continue; // header
            }
            let mut fields = trimmed.split(',');
            let mut next = |what: &str| -> Result<f64, GridError> {
                fields
                    .next()
                    .ok_or_else(|| GridError::Csv {
                        line: idx + 1,
                        reason: format!("missing {what} column"),
                    })?
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| GridError::Csv {
                        line: idx + 1,
                        reason: format!("{what}: {e}"),
                    })
            };
            let t = next("t")?;
            let re = next("q_re")?;
            let im = next("q_im")?;
            rows.push((t, Complex64::new(re, im)));
        }
        if rows.len() < 2 {
            return Err(GridError::TooFewSamples { n: rows.len() });
        }
        let dt = rows[1].0 - rows[0].0;
        if !(dt.is_finite() && dt > 0.0) {
            return Err(GridError::NonUniform { line: 2 });
        }
        for (k, pair) in rows.windows(2).enumerate() {
            let step = pair[1].0 - pair[0].0;
            if (step - dt).abs() > 1e-9 * dt {
                return Err(GridError::NonUniform { line: k + 3 });
            }
        }
        // Midpoint grid: the first sample sits half a step inside -L.
        let half_width = -(rows[0].0 - 0.5 * dt);
        let right = rows.last().unwrap().0 + 0.5 * dt;
        if !(half_width > 0.0) || (right - half_width).abs() > 1e-9 * half_width.max(1.0) {
            return Err(GridError::NonUniform {
                line: rows.len() + 1,
            });
        }
        Ok(SampledPotential {
            samples: rows.into_iter().map(|(_, q)| q).collect(),
            half_width,
            dt,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::ProfileSpec;
    use approx::assert_relative_eq;

    #[test]
    fn midpoints_tile_the_interval() {
        let spec = ProfileSpec::over_soliton(2.0, 30.0);
        let pot = SampledPotential::sample(&spec, 2.0, 4).unwrap();
        assert_eq!(pot.n(), 4);
        assert_relative_eq!(pot.dt(), 1.0);
        let mids: Vec<f64> = (0..4).map(|k| pot.midpoint(k)).collect();
        assert_eq!(mids, vec![-1.5, -0.5, 0.5, 1.5]);
        for (k, q) in pot.samples().iter().enumerate() {
            assert_relative_eq!(q.re, 2.0 / mids[k].cosh(), epsilon = 1e-15);
        }
    }

    #[test]
    fn rejects_degenerate_grids() {
        let spec = ProfileSpec::rectangular(1.0, 1.0);
        assert!(matches!(
            SampledPotential::sample(&spec, 1.0, 1),
            Err(GridError::TooFewSamples { n: 1 })
        ));
        assert!(matches!(
            SampledPotential::sample(&spec, -1.0, 8),
            Err(GridError::InvalidHalfWidth { .. })
        ));
    }

    #[test]
    fn midpoint_riemann_sum_approximates_energy() {
        // integral of A^2 sech^2 over the line is 2 A^2.
        let spec = ProfileSpec::over_soliton(1.5, 30.0);
        let pot = SampledPotential::sample(&spec, 30.0, 4096).unwrap();
        let sum: f64 = pot.samples().iter().map(|q| q.norm_sqr()).sum::<f64>() * pot.dt();
        assert_relative_eq!(sum, 2.0 * 1.5 * 1.5, max_relative = 1e-8);
    }

    #[test]
    fn csv_round_trip_is_lossless() {
        let spec = ProfileSpec::phased_soliton(20.0);
        let pot = SampledPotential::sample(&spec, 20.0, 64).unwrap();
        let mut buf = Vec::new();
        pot.write_csv(&mut buf).unwrap();
        let back = SampledPotential::read_csv(buf.as_slice()).unwrap();
        assert_eq!(pot, back);
    }

    #[test]
    fn csv_import_rejects_ragged_grids() {
        let text = "t,q_re,q_im\n-0.5,1.0,0.0\n0.1,1.0,0.0\n0.5,1.0,0.0\n";
        assert!(matches!(
            SampledPotential::read_csv(text.as_bytes()),
            Err(GridError::NonUniform { .. })
        ));
        let bad = "t,q_re,q_im\n-0.5,1.0\n0.5,1.0,0.0\n";
        assert!(matches!(
            SampledPotential::read_csv(bad.as_bytes()),
            Err(GridError::Csv { .. })
        ));
    }
}
