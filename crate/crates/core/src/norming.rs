//! Norming constants c_j (and the b_j they derive from).
//!
//! Three routes with very different numerical behaviour:
//!
//! * residue of r(xi) over a small circle around the eigenvalue,
//! * the fraction b(xi_j)/a'(xi_j) from a single scattering pass,
//! * the bidirectional scheme: propagate a left wave G from -L and a right
//!   wave H from +L to the interval centre, where G = b_j H at an
//!   eigenvalue. This avoids evaluating b at the truncation edges, where
//!   the exponential factors destroy single-directional accuracy for
//!   large Im(xi).

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::discretize::SampledPotential;
use crate::hybrid::{hybrid_eigenvalues, HybridConfig, HybridError};
use crate::mat2::Mat2;
use crate::zss::{scatter, transfer_matrix, Scheme};
use crate::ZssError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormingMethod {
    /// Residue of r over a circle with the given node count.
    ContourResidue { n_points: usize },
    /// b(xi_j) / a'(xi_j) from one scattering pass.
    Fraction,
    /// Bidirectional b_j combined with a' from the derivative pass.
    BidirectionalFraction,
}

impl std::str::FromStr for NormingMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "residue" => Ok(NormingMethod::ContourResidue { n_points: 64 }),
            "fraction" => Ok(NormingMethod::Fraction),
            "bidirectional" => Ok(NormingMethod::BidirectionalFraction),
            other => Err(format!(
                "unknown norming method '{other}' (expected residue, fraction or bidirectional)"
            )),
        }
    }
}

impl std::fmt::Display for NormingMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormingMethod::ContourResidue { .. } => f.write_str("residue"),
            NormingMethod::Fraction => f.write_str("fraction"),
            NormingMethod::BidirectionalFraction => f.write_str("bidirectional"),
        }
    }
}

#[derive(Debug, Error)]
pub enum NormingError {
    #[error(transparent)]
    Zss(#[from] ZssError),
    #[error(transparent)]
    Hybrid(#[from] HybridError),
    /// The left/right wave component ratios disagree: xi is not close
    /// enough to a discrete eigenvalue for G and H to be linearly dependent.
    /// `defect` is the relative ratio disagreement (gate: 0.1).
    #[error("{xi} does not behave like an eigenvalue (ratio defect {defect:.2e})")]
    NotAnEigenvalue { xi: Complex64, defect: f64 },
    #[error("scattering ratio non-finite at {xi}")]
    NonFinite { xi: Complex64 },
    #[error("bidirectional matrices exist only for bo and al, not {scheme}")]
    UnsupportedScheme { scheme: Scheme },
    #[error("bidirectional meeting point needs an even sample count, got {n}")]
    OddSampleCount { n: usize },
}

/// One solitonic degree of freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub xi: Complex64,
    pub c: Complex64,
    /// Spectral amplitude b_j when the method computes one.
    pub b: Option<Complex64>,
}

/// Eigenvalues with norming data, sorted by descending imaginary part.
/// Entries whose norming computation failed are reported in `failures`
/// instead of silently dropping the eigenvalue.
#[derive(Debug)]
pub struct DiscreteSpectrum {
    pub entries: Vec<SpectrumEntry>,
    pub failures: Vec<(Complex64, NormingError)>,
}

/// c_j as the residue of r(xi) = b/a: trapezoidal quadrature over a circle
/// of `radius` around the (simple) pole at xi_j.
pub fn residue_contour(
    pot: &SampledPotential,
    xi_j: Complex64,
    scheme: Scheme,
    n_points: usize,
    radius: f64,
) -> Result<Complex64, NormingError> {
    assert!(n_points >= 8, "need at least 8 circle nodes");
    assert!(radius > 0.0, "radius must be positive");
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n_points {
        let dir = Complex64::cis(std::f64::consts::TAU * k as f64 / n_points as f64);
        let xi = xi_j + radius * dir;
        let sc = scatter(pot, xi, scheme, false)?;
        let r = sc.b / sc.a;
        if !r.is_finite() {
            return Err(NormingError::NonFinite { xi });
        }
        sum += r * dir;
    }
    Ok(sum * radius / n_points as f64)
}

/// Default circle radius for [`residue_contour`]: half the distance to the
/// nearest other eigenvalue or to the real axis, whichever is smaller,
/// capped at 0.2.
pub fn default_residue_radius(xi_j: Complex64, others: &[Complex64]) -> f64 {
    let nearest = others
        .iter()
        .filter(|&&o| o != xi_j)
        .map(|o| (o - xi_j).norm())
        .fold(f64::INFINITY, f64::min);
    (0.5 * nearest.min(xi_j.im)).min(0.2)
}

/// c_j = b(xi_j) / a'(xi_j) from a single derivative-propagating pass.
pub fn residue_fraction(
    pot: &SampledPotential,
    xi_j: Complex64,
    scheme: Scheme,
) -> Result<Complex64, NormingError> {
    let sc = scatter(pot, xi_j, scheme, true)?;
    let c = sc.b / sc.a_prime.expect("derivative requested");
    if !c.is_finite() {
        return Err(NormingError::NonFinite { xi: xi_j });
    }
    Ok(c)
}

/// One step of the left-wave (G) or right-wave (H) recursion. `dt` is
/// signed: the right wave walks from +L down to the centre with dt < 0.
fn directional_step(scheme: Scheme, q: Complex64, xi: Complex64, dt: f64, left: bool) -> Mat2 {
    match scheme {
        Scheme::Bo => {
            // The phase factor turns the ZSS propagator into the exact
            // frozen-step exponential of the G (left) or H (right) system.
            let bracket = transfer_matrix(scheme, xi, q, q, 0.0, dt, false)
                .expect("bo always has a transfer matrix")
                .m;
            let sign = if left { 1.0 } else { -1.0 };
            bracket.scale((Complex64::i() * xi * sign * dt).exp())
        }
        Scheme::Al => {
            let nu = 1.0 / (1.0 + dt * dt * q.norm_sqr()).sqrt();
            let rot = (2.0 * Complex64::i() * xi * dt).exp();
            let one = Complex64::new(1.0, 0.0);
            let m = if left {
                Mat2::new(one, q * dt, -q.conj() * dt, rot)
            } else {
                Mat2::new(1.0 / rot, q * dt, -q.conj() * dt, one)
            };
            m.scale(Complex64::new(nu, 0.0))
        }
        other => unreachable!("directional step undefined for {other}"),
    }
}

/// Left/right wave component ratios G_1/H_1 and G_2/H_2 at t = 0, plus the
/// magnitude-preferred proportionality estimate (the ratio with the larger
/// denominator).
fn bidirectional_ratios(
    pot: &SampledPotential,
    xi_j: Complex64,
    scheme: Scheme,
) -> Result<(Complex64, Complex64, Complex64), NormingError> {
    if !matches!(scheme, Scheme::Bo | Scheme::Al) {
        return Err(NormingError::UnsupportedScheme { scheme });
    }
    let n = pot.n();
    if n % 2 != 0 {
        return Err(NormingError::OddSampleCount { n });
    }
    let dt = pot.dt();
    let q = pot.samples();

    let mut g = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    for qm in &q[..n / 2] {
        g = directional_step(scheme, *qm, xi_j, dt, true).mul_vec(g);
    }
    let mut h = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
    for qm in q[n / 2..].iter().rev() {
        h = directional_step(scheme, *qm, xi_j, -dt, false).mul_vec(h);
    }
    if !(g[0].is_finite() && g[1].is_finite() && h[0].is_finite() && h[1].is_finite()) {
        return Err(NormingError::NonFinite { xi: xi_j });
    }

    let r1 = g[0] / h[0];
    let r2 = g[1] / h[1];
    let b = if h[0].norm() >= h[1].norm() { r1 } else { r2 };
    Ok((r1, r2, b))
}

/// b_j from simultaneous left/right scattering meeting at t = 0.
///
/// At an eigenvalue the waves are linearly dependent, G(0) = beta H(0), and
/// both component ratios must agree on beta; in the crate's sign convention
/// (see [`crate::zss`]) the returned constant is b_j = -beta. Ratio
/// disagreement beyond 10% (or a degenerate ratio) means xi_j is not an
/// eigenvalue of the sampled potential.
pub fn bidirectional_b(
    pot: &SampledPotential,
    xi_j: Complex64,
    scheme: Scheme,
) -> Result<Complex64, NormingError> {
    let (r1, r2, beta) = bidirectional_ratios(pot, xi_j, scheme)?;
    if !beta.is_finite() || beta.norm() == 0.0 {
        return Err(NormingError::NotAnEigenvalue {
            xi: xi_j,
            defect: f64::INFINITY,
        });
    }
    let defect = (r1 - r2).norm() / beta.norm();
    if defect > 0.1 {
        return Err(NormingError::NotAnEigenvalue { xi: xi_j, defect });
    }
    Ok(-beta)
}

/// Eigenvalues via the hybrid search, then a norming constant per
/// eigenvalue using the requested method. Failures are collected per entry,
/// never silently dropped and never fatal for the other entries.
pub fn full_discrete_spectrum(
    pot: &SampledPotential,
    scheme: Scheme,
    hybrid_cfg: &HybridConfig,
    norming: NormingMethod,
) -> Result<DiscreteSpectrum, NormingError> {
    let eigenvalues: Vec<Complex64> = hybrid_eigenvalues(pot, hybrid_cfg)?
        .into_iter()
        .map(|e| e.value)
        .collect();

    let results: Vec<Result<SpectrumEntry, (Complex64, NormingError)>> =
        eigenvalues
            .par_iter()
            .map(|&xi| {
                let entry =
                    match norming {
                        NormingMethod::ContourResidue { n_points } => {
                            let radius = default_residue_radius(xi, &eigenvalues);
                            residue_contour(pot, xi, scheme, n_points, radius)
                                .map(|c| SpectrumEntry { xi, c, b: None })
                        }
                        NormingMethod::Fraction => scatter(pot, xi, scheme, true)
                            .map_err(NormingError::from)
                            .and_then(|sc| {
                                let c = sc.b / sc.a_prime.expect("derivative requested");
                                if c.is_finite() {
                                    Ok(SpectrumEntry {
                                        xi,
                                        c,
                                        b: Some(sc.b),
                                    })
                                } else {
                                    Err(NormingError::NonFinite { xi })
                                }
                            }),
                        NormingMethod::BidirectionalFraction => bidirectional_b(pot, xi, scheme)
                            .and_then(|b| {
                                let sc = scatter(pot, xi, scheme, true)?;
                                let c = b / sc.a_prime.expect("derivative requested");
                                if c.is_finite() {
                                    Ok(SpectrumEntry { xi, c, b: Some(b) })
                                } else {
                                    Err(NormingError::NonFinite { xi })
                                }
                            }),
                    };
                entry.map_err(|e| (xi, e))
            })
            .collect();

    let mut entries = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(e) => entries.push(e),
            Err(f) => failures.push(f),
        }
    }
    Ok(DiscreteSpectrum { entries, failures })
}

/// Soliton amplitude 2 Im(xi_j).
pub fn soliton_amplitude(xi_j: Complex64) -> f64 {
    2.0 * xi_j.im
}

/// Soliton frequency -2 Re(xi_j).
pub fn soliton_frequency(xi_j: Complex64) -> f64 {
    -2.0 * xi_j.re
}

/// Soliton centre position -(1/2 Im xi_j) ln(|c_j| / 2 Im xi_j).
pub fn soliton_center(xi_j: Complex64, c_j: Complex64) -> f64 {
    -(c_j.norm() / (2.0 * xi_j.im)).ln() / (2.0 * xi_j.im)
}

/// Soliton phase -arg(-i c_j), zero for the canonical c = i soliton.
pub fn soliton_phase(c_j: Complex64) -> f64 {
    -(-Complex64::i() * c_j).arg()
}
