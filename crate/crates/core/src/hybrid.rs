//! Hybrid eigenvalue search: coarse contour-integration estimates refined by
//! an iterative root finder.
//!
//! The coarse stage runs [`crate::contour::dl_locate`] on the numerically
//! computed a(xi) with a deliberately modest node count — the estimates only
//! need to land in each zero's basin of attraction. Every estimate is then
//! polished with [`crate::rootfind::find_root`]. A failed refinement keeps
//! the coarse value (flagged `refined: false`) rather than dropping the
//! eigenvalue, so the search never loses a zero the contour stage saw.

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

use crate::contour::{dl_locate, Contour, ContourError, MomentMode};
use crate::discretize::SampledPotential;
use crate::rootfind::{find_root, RootConfig, RootMethod, RootStatus};
use crate::zss::{scatter, Scheme};

/// Node count that is usually enough for the coarse stage.
pub const DEFAULT_COARSE_POINTS: usize = 400;

/// Coarse zeros closer than this are treated as one zero split by
/// quadrature noise and merged before refinement.
const COARSE_MERGE_TOL: f64 = 1e-3;

/// Refined roots closer than this are considered the same eigenvalue.
const REFINED_DEDUPE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridConfig {
    pub contour: Contour,
    pub coarse_mode: MomentMode,
    pub refine: RootConfig,
    pub scheme: Scheme,
}

impl HybridConfig {
    /// Sensible defaults for the scheme: exact log-derivative quadrature and
    /// Newton-Raphson when the scheme provides a'(xi), the derivative-free
    /// pair (aDL + Muller) otherwise.
    pub fn new(contour: Contour, scheme: Scheme) -> Self {
        let (coarse_mode, method) = if scheme.supports_derivative() {
            (MomentMode::Dl, RootMethod::NewtonRaphson)
        } else {
            (MomentMode::Adl, RootMethod::Muller)
        };
        HybridConfig {
            contour,
            coarse_mode,
            refine: RootConfig::new(method),
            scheme,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridEigenvalue {
    pub value: Complex64,
    /// False when the iterative stage failed and `value` is the coarse
    /// contour estimate.
    pub refined: bool,
}

#[derive(Debug, Error)]
pub enum HybridError {
    #[error("coarse contour stage failed: {0}")]
    Contour(#[from] ContourError),
    #[error("scheme {scheme} provides no derivative, required by the refinement method")]
    DerivativeUnavailable { scheme: Scheme },
}

fn nan() -> Complex64 {
    Complex64::new(f64::NAN, f64::NAN)
}

/// Locate the discrete eigenvalues of the potential inside the contour.
///
/// Output is sorted by descending imaginary part. Identical inputs produce
/// identical output: the quadrature, rooting, and refinement stages are all
/// deterministic.
pub fn hybrid_eigenvalues(
    pot: &SampledPotential,
    cfg: &HybridConfig,
) -> Result<Vec<HybridEigenvalue>, HybridError> {
    let scheme = cfg.scheme;
    if cfg.refine.method.needs_derivative() && !scheme.supports_derivative() {
        return Err(HybridError::DerivativeUnavailable { scheme });
    }

    // Coarse stage: zeros of the numeric a(xi) from contour integration.
    let coarse = {
        let mut f = |z: Complex64| scatter(pot, z, scheme, false).map(|r| r.a).unwrap_or(nan());
        if scheme.supports_derivative() {
            let mut fp = |z: Complex64| {
                scatter(pot, z, scheme, true)
                    .map(|r| r.a_prime.unwrap())
                    .unwrap_or(nan())
            };
            dl_locate(&mut f, Some(&mut fp), &cfg.contour, cfg.coarse_mode)?
        } else {
            dl_locate(&mut f, None, &cfg.contour, cfg.coarse_mode)?
        }
    };
    let coarse = merge_close(coarse, COARSE_MERGE_TOL);
    if coarse.is_empty() {
        return Ok(Vec::new());
    }

    let roi = cfg
        .refine
        .roi
        .unwrap_or_else(|| cfg.contour.bounding_region().inflate(1.1));
    let refine_cfg = RootConfig {
        roi: Some(roi),
        ..cfg.refine
    };

    // Refinements are independent; run them in parallel.
    let mut entries: Vec<(HybridEigenvalue, Complex64)> = coarse
        .par_iter()
        .map(|&guess| {
            let mut f = |z: Complex64| scatter(pot, z, scheme, false).map(|r| r.a).unwrap_or(nan());
            let outcome = if scheme.supports_derivative() {
                let mut fp = |z: Complex64| {
                    scatter(pot, z, scheme, true)
                        .map(|r| r.a_prime.unwrap())
                        .unwrap_or(nan())
                };
                find_root(&mut f, Some(&mut fp), guess, &refine_cfg)
            } else {
                find_root(&mut f, None, guess, &refine_cfg)
            };
            let accepted = match (outcome.status, outcome.root) {
                (RootStatus::Converged, Some(root)) if roi.contains(root) => {
                    // Refinement must not move us up the residual surface.
                    let coarse_abs = f(guess).norm();
                    let refined_abs = f(root).norm();
                    (refined_abs <= coarse_abs || !coarse_abs.is_finite()).then_some(root)
                }
                _ => None,
            };
            match accepted {
                Some(root) => (
                    HybridEigenvalue {
                        value: root,
                        refined: true,
                    },
                    guess,
                ),
                None => (
                    HybridEigenvalue {
                        value: guess,
                        refined: false,
                    },
                    guess,
                ),
            }
        })
        .collect();

    // Two refinements collapsing onto one zero means one of them wandered;
    // give the orphan its coarse estimate back.
    for i in 0..entries.len() {
        if !entries[i].0.refined {
            continue;
        }
        let collides = entries[..i]
            .iter()
            .any(|(e, _)| e.refined && (e.value - entries[i].0.value).norm() < REFINED_DEDUPE_TOL);
        if collides {
            entries[i].0 = HybridEigenvalue {
                value: entries[i].1,
                refined: false,
            };
        }
    }

    let mut out: Vec<HybridEigenvalue> = entries.into_iter().map(|(e, _)| e).collect();
    out.sort_by(|a, b| {
        b.value
            .im
            .partial_cmp(&a.value.im)
            .unwrap()
            .then(a.value.re.partial_cmp(&b.value.re).unwrap())
    });
    Ok(out)
}

/// Collapse points closer than `tol` to their cluster centroid, keeping the
/// first-seen order of cluster representatives.
fn merge_close(points: Vec<Complex64>, tol: f64) -> Vec<Complex64> {
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for p in points {
        match clusters
            .iter_mut()
            .find(|(c, n)| (*c / *n as f64 - p).norm() < tol)
        {
            Some((sum, n)) => {
                *sum += p;
                *n += 1;
            }
            None => clusters.push((p, 1)),
        }
    }
    clusters
        .into_iter()
        .map(|(sum, n)| sum / n as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::ProfileSpec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sampled(spec: &ProfileSpec, half_width: f64, n: usize) -> SampledPotential {
        SampledPotential::sample(spec, half_width, n).unwrap()
    }

    #[test]
    fn refines_the_phased_soliton_eigenvalue() {
        let pot = sampled(&ProfileSpec::phased_soliton(30.0), 30.0, 1024);
        let contour = Contour::rectangle(-1.0, 1.0, 0.1, 2.0, DEFAULT_COARSE_POINTS);
        let cfg = HybridConfig::new(contour, Scheme::Bo);
        let out = hybrid_eigenvalues(&pot, &cfg).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].refined);
        // The refinement polishes the zero of the discretized a, which for
        // this chirped potential sits about 2.1e-4 from the true eigenvalue
        // at this step size (the frozen-carrier O(dt^2) error of the scheme).
        assert!(
            (out[0].value - c(0.5, 0.5)).norm() < 5e-4,
            "got {}",
            out[0].value
        );
    }

    #[test]
    fn finds_all_five_over_soliton_eigenvalues() {
        let pot = sampled(&ProfileSpec::over_soliton(5.0, 30.0), 30.0, 1024);
        let contour = Contour::rectangle(-1.0, 1.0, 0.1, 5.0, DEFAULT_COARSE_POINTS);
        let cfg = HybridConfig::new(contour, Scheme::Bo);
        let out = hybrid_eigenvalues(&pot, &cfg).unwrap();
        assert_eq!(out.len(), 5);
        for (k, e) in out.iter().enumerate() {
            assert!(e.refined, "k={k}");
            let expect = c(0.0, 4.5 - k as f64);
            assert!(
                (e.value - expect).norm() < 1e-3,
                "k={k}: {} vs {expect}",
                e.value
            );
        }
    }

    #[test]
    fn zero_potential_yields_no_eigenvalues() {
        let pot = sampled(&ProfileSpec::rectangular(0.0, 1.0), 2.0, 64);
        let contour = Contour::rectangle(-1.0, 1.0, 0.1, 2.0, 64);
        let cfg = HybridConfig::new(contour, Scheme::Bo);
        assert!(hybrid_eigenvalues(&pot, &cfg).unwrap().is_empty());
    }

    #[test]
    fn every_scheme_and_finder_recovers_the_full_ladder() {
        let pot = sampled(&ProfileSpec::over_soliton(5.0, 30.0), 30.0, 1024);
        let contour = Contour::rectangle(-1.0, 1.0, 0.1, 5.0, DEFAULT_COARSE_POINTS);
        for scheme in Scheme::ALL {
            for method in RootMethod::ALL {
                if method.needs_derivative() && !scheme.supports_derivative() {
                    continue;
                }
                let mut cfg = HybridConfig::new(contour, scheme);
                cfg.refine = RootConfig::new(method);
                let out = hybrid_eigenvalues(&pot, &cfg).unwrap();
                assert_eq!(out.len(), 5, "{scheme}/{method}: {out:?}");
            }
        }
    }

    #[test]
    fn rk4_with_newton_is_rejected() {
        let pot = sampled(&ProfileSpec::phased_soliton(20.0), 20.0, 256);
        let contour = Contour::rectangle(-1.0, 1.0, 0.1, 2.0, 64);
        let mut cfg = HybridConfig::new(contour, Scheme::Rk4);
        cfg.refine = RootConfig::new(RootMethod::NewtonRaphson);
        assert!(matches!(
            hybrid_eigenvalues(&pot, &cfg),
            Err(HybridError::DerivativeUnavailable {
                scheme: Scheme::Rk4
            })
        ));
    }

    #[test]
    fn failed_refinement_keeps_the_coarse_estimate() {
        let pot = sampled(&ProfileSpec::over_soliton(5.0, 30.0), 30.0, 1024);
        let contour = Contour::rectangle(-1.0, 1.0, 0.1, 5.0, DEFAULT_COARSE_POINTS);
        let mut cfg = HybridConfig::new(contour, Scheme::Bo);
        // One iteration cannot reach the step-size tolerance, so every
        // refinement fails and the coarse values must survive.
        cfg.refine.max_iter = 1;
        let out = hybrid_eigenvalues(&pot, &cfg).unwrap();
        assert_eq!(out.len(), 5);
        for e in &out {
            assert!(!e.refined);
        }
    }

    #[test]
    fn refinement_does_not_increase_the_residual() {
        let pot = sampled(&ProfileSpec::over_soliton(5.0, 30.0), 30.0, 1024);
        let contour = Contour::rectangle(-1.0, 1.0, 0.1, 5.0, DEFAULT_COARSE_POINTS);
        let cfg = HybridConfig::new(contour, Scheme::Bo);
        let refined = hybrid_eigenvalues(&pot, &cfg).unwrap();
        let mut coarse_cfg = cfg;
        coarse_cfg.refine.max_iter = 1; // forces coarse values through
        let coarse = hybrid_eigenvalues(&pot, &coarse_cfg).unwrap();
        assert_eq!(refined.len(), coarse.len());
        for (r, c0) in refined.iter().zip(&coarse) {
            let abs = |z: Complex64| scatter(&pot, z, Scheme::Bo, false).unwrap().a.norm();
            assert!(
                abs(r.value) <= abs(c0.value) + 1e-18,
                "{} vs {}",
                r.value,
                c0.value
            );
        }
    }

    #[test]
    fn identical_inputs_give_identical_results() {
        let pot = sampled(&ProfileSpec::over_soliton(2.25, 30.0), 30.0, 512);
        let contour = Contour::rectangle(-1.0, 1.0, 0.1, 3.0, 400);
        let cfg = HybridConfig::new(contour, Scheme::Al);
        let a = hybrid_eigenvalues(&pot, &cfg).unwrap();
        let b = hybrid_eigenvalues(&pot, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn merge_collapses_split_zeros() {
        let pts = vec![c(0.0, 1.0), c(0.0, 1.0 + 5e-4), c(0.5, 0.5)];
        let merged = merge_close(pts, 1e-3);
        assert_eq!(merged.len(), 2);
        assert!((merged[0] - c(0.0, 1.00025)).norm() < 1e-12);
        assert!((merged[1] - c(0.5, 0.5)).norm() < 1e-12);
    }
}
