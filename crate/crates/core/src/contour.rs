//! Zero counting and Delves-Lyness zero location on closed contours.
//!
//! The pipeline: count the zeros N inside the contour by the argument
//! principle, compute the power-sum moments s_p = sum z_i^p for p = 1..N by
//! quadrature of z^p f'/f (or its derivative-free approximation), convert to
//! elementary symmetric polynomials with Newton's identities, and read the
//! zeros off as roots of the monic polynomial. Quadrature nodes sit in the
//! interiors of the contour's sides — never on corners — allocated
//! proportionally to side length, path traversed counterclockwise.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ContourShape {
    Rectangle {
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
    },
    AnnularSector {
        rho_min: f64,
        rho_max: f64,
        theta_min: f64,
        theta_max: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contour {
    pub shape: ContourShape,
    pub n_points: usize,
}

#[derive(Debug, Error)]
pub enum ContourError {
    /// The counting integral stayed too far from an integer even after the
    /// node count was doubled once; the contour likely passes close to a
    /// zero, or the discretization is far too coarse.
    #[error("zero count ambiguous: raw value {raw} is not close to an integer")]
    AmbiguousCount { raw: f64 },
    #[error("mode requires the derivative f'")]
    DerivativeRequired,
    /// f (or f') evaluated to zero / non-finite at a path node.
    #[error("function evaluation failed at path node {node}")]
    Evaluation { node: usize },
    #[error("polynomial rooting did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// (1/2 pi i) contour integral of f'/f.
    LogDerivative,
    /// Accumulated principal-branch argument increments of f, over 2 pi.
    PhaseIncrement,
    /// Derivative-free first-order approximation of the log-derivative.
    Approximated,
}

impl std::str::FromStr for CountMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "log-derivative" | "logderivative" | "ld" => Ok(CountMode::LogDerivative),
            "phase" | "phase-increment" => Ok(CountMode::PhaseIncrement),
            "approximated" | "adl" => Ok(CountMode::Approximated),
            other => Err(format!(
                "unknown count mode '{other}' (expected log-derivative, phase or approximated)"
            )),
        }
    }
}

impl std::fmt::Display for CountMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CountMode::LogDerivative => "log-derivative",
            CountMode::PhaseIncrement => "phase-increment",
            CountMode::Approximated => "approximated",
        })
    }
}

/// Which quadrature the moment integrals use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentMode {
    /// Exact log-derivative z^p f'/f (Delves-Lyness; needs f').
    Dl,
    /// Derivative-free approximation z_k^p (1 - f(z_{k-1})/f(z_k)).
    Adl,
}

impl std::str::FromStr for MomentMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dl" => Ok(MomentMode::Dl),
            "adl" => Ok(MomentMode::Adl),
            other => Err(format!(
                "unknown moment mode '{other}' (expected dl or adl)"
            )),
        }
    }
}

impl std::fmt::Display for MomentMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MomentMode::Dl => "dl",
            MomentMode::Adl => "adl",
        })
    }
}

/// Power sums s_p of the zeros inside a contour, p = 1..=count.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentSet {
    pub s: Vec<Complex64>,
}

impl MomentSet {
    pub fn count(&self) -> usize {
        self.s.len()
    }
}

/// One side of the integration path.
enum Side {
    Segment {
        start: Complex64,
        end: Complex64,
    },
    /// theta_end < theta_start encodes a clockwise-traversed arc.
    Arc {
        rho: f64,
        theta_start: f64,
        theta_end: f64,
    },
}

impl Side {
    fn len(&self) -> f64 {
        match self {
            Side::Segment { start, end } => (end - start).norm(),
            Side::Arc {
                rho,
                theta_start,
                theta_end,
            } => rho * (theta_end - theta_start).abs(),
        }
    }

    /// Node k of m on this side: position and its directed path element.
    fn node(&self, k: usize, m: usize) -> (Complex64, Complex64) {
        let t = (k as f64 + 0.5) / m as f64;
        match self {
            Side::Segment { start, end } => {
                let step = end - start;
                (start + t * step, step / m as f64)
            }
            Side::Arc {
                rho,
                theta_start,
                theta_end,
            } => {
                let span = theta_end - theta_start;
                let z = rho * Complex64::new(0.0, theta_start + t * span).exp();
                (z, Complex64::new(0.0, span / m as f64) * z)
            }
        }
    }
}

impl Contour {
    pub fn rectangle(re_min: f64, re_max: f64, im_min: f64, im_max: f64, n_points: usize) -> Self {
        assert!(re_min < re_max && im_min < im_max, "degenerate rectangle");
        assert!(n_points >= 16, "need at least 16 path nodes");
        Contour {
            shape: ContourShape::Rectangle {
                re_min,
                re_max,
                im_min,
                im_max,
            },
            n_points,
        }
    }

    pub fn annular_sector(
        rho_min: f64,
        rho_max: f64,
        theta_min: f64,
        theta_max: f64,
        n_points: usize,
    ) -> Self {
        assert!(0.0 <= rho_min && rho_min < rho_max, "invalid radii");
        let span = theta_max - theta_min;
        assert!(span > 0.0 && span <= TAU + 1e-12, "invalid angular span");
        assert!(n_points >= 16, "need at least 16 path nodes");
        Contour {
            shape: ContourShape::AnnularSector {
                rho_min,
                rho_max,
                theta_min,
                theta_max,
            },
            n_points,
        }
    }

    fn with_points(&self, n_points: usize) -> Contour {
        Contour {
            shape: self.shape,
            n_points,
        }
    }

    fn sides(&self) -> Vec<Side> {
        match self.shape {
            ContourShape::Rectangle {
                re_min,
                re_max,
                im_min,
                im_max,
            } => {
                let c = Complex64::new;
                vec![
                    Side::Segment {
                        start: c(re_min, im_min),
                        end: c(re_max, im_min),
                    },
                    Side::Segment {
                        start: c(re_max, im_min),
                        end: c(re_max, im_max),
                    },
                    Side::Segment {
                        start: c(re_max, im_max),
                        end: c(re_min, im_max),
                    },
                    Side::Segment {
                        start: c(re_min, im_max),
                        end: c(re_min, im_min),
                    },
                ]
            }
            ContourShape::AnnularSector {
                rho_min,
                rho_max,
                theta_min,
                theta_max,
            } => {
                let dir = Complex64::cis;
                vec![
                    Side::Segment {
                        start: rho_min * dir(theta_min),
                        end: rho_max * dir(theta_min),
                    },
                    Side::Arc {
                        rho: rho_max,
                        theta_start: theta_min,
                        theta_end: theta_max,
                    },
                    Side::Segment {
                        start: rho_max * dir(theta_max),
                        end: rho_min * dir(theta_max),
                    },
                    // Inner arc runs backwards to keep the interior on the left.
                    Side::Arc {
                        rho: rho_min,
                        theta_start: theta_max,
                        theta_end: theta_min,
                    },
                ]
            }
        }
    }

    /// Counterclockwise path nodes, each paired with its directed path
    /// element dz (the exact sub-segment the node represents, so that
    /// sum g(z_k) dz_k is the midpoint rule on the true contour).
    pub fn path_nodes(&self) -> Vec<(Complex64, Complex64)> {
        let sides = self.sides();
        let lens: Vec<f64> = sides.iter().map(Side::len).collect();
        let counts = allocate_nodes(self.n_points, &lens);
        let mut nodes = Vec::with_capacity(self.n_points);
        for (side, &m) in sides.iter().zip(&counts) {
            for k in 0..m {
                nodes.push(side.node(k, m));
            }
        }
        nodes
    }

    /// Axis-aligned bounding box, e.g. for a refinement region of interest.
    pub fn bounding_region(&self) -> crate::rootfind::Region {
        match self.shape {
            ContourShape::Rectangle {
                re_min,
                re_max,
                im_min,
                im_max,
            } => crate::rootfind::Region::new(re_min, re_max, im_min, im_max),
            ContourShape::AnnularSector {
                rho_min,
                rho_max,
                theta_min,
                theta_max,
            } => {
                let mut pts = Vec::new();
                for rho in [rho_min, rho_max] {
                    for theta in [theta_min, theta_max] {
                        pts.push(rho * Complex64::cis(theta));
                    }
                }
                // Axis extremes of the outer arc that fall inside the span.
                let mut axis = theta_min.div_euclid(PI / 2.0) * PI / 2.0;
                while axis <= theta_max {
                    if axis >= theta_min {
                        pts.push(rho_max * Complex64::cis(axis));
                    }
                    axis += PI / 2.0;
                }
                let re_min = pts.iter().map(|p| p.re).fold(f64::INFINITY, f64::min);
                let re_max = pts.iter().map(|p| p.re).fold(f64::NEG_INFINITY, f64::max);
                let im_min = pts.iter().map(|p| p.im).fold(f64::INFINITY, f64::min);
                let im_max = pts.iter().map(|p| p.im).fold(f64::NEG_INFINITY, f64::max);
                crate::rootfind::Region::new(re_min, re_max, im_min, im_max)
            }
        }
    }
}

/// Split `n` nodes across sides proportionally to length (largest-remainder
/// rounding); every side of positive length gets at least one node.
fn allocate_nodes(n: usize, lens: &[f64]) -> Vec<usize> {
    let total: f64 = lens.iter().sum();
    assert!(total > 0.0, "contour has zero perimeter");
    let mut counts: Vec<usize> = Vec::with_capacity(lens.len());
    let mut fracs: Vec<(usize, f64)> = Vec::new();
    let mut assigned = 0usize;
    for (i, &len) in lens.iter().enumerate() {
        let quota = n as f64 * len / total;
        let base = quota.floor() as usize;
        counts.push(base);
        assigned += base;
        fracs.push((i, quota - base as f64));
    }
    fracs.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));
    for (i, _) in fracs.iter().take(n.saturating_sub(assigned)) {
        counts[*i] += 1;
    }
    // No empty sides: steal from the best-endowed one.
    for i in 0..lens.len() {
        if lens[i] > 0.0 && counts[i] == 0 {
            let donor = (0..lens.len()).max_by_key(|&j| counts[j]).unwrap();
            counts[donor] -= 1;
            counts[i] = 1;
        }
    }
    counts
}

const TWO_PI_I: Complex64 = Complex64::new(0.0, TAU);

/// Reborrow an optional trait-object reference for a nested call.
fn reborrow<'a>(
    opt: &'a mut Option<&mut dyn FnMut(Complex64) -> Complex64>,
) -> Option<&'a mut dyn FnMut(Complex64) -> Complex64> {
    match opt {
        Some(p) => Some(&mut **p),
        None => None,
    }
}

fn eval_path(
    f: &mut dyn FnMut(Complex64) -> Complex64,
    nodes: &[(Complex64, Complex64)],
) -> Result<Vec<Complex64>, ContourError> {
    let mut values = Vec::with_capacity(nodes.len());
    for (k, (z, _)) in nodes.iter().enumerate() {
        let v = f(*z);
        if !v.is_finite() || v.norm() == 0.0 {
            return Err(ContourError::Evaluation { node: k });
        }
        values.push(v);
    }
    Ok(values)
}

fn raw_count(
    f: &mut dyn FnMut(Complex64) -> Complex64,
    mut f_prime: Option<&mut dyn FnMut(Complex64) -> Complex64>,
    contour: &Contour,
    mode: CountMode,
) -> Result<f64, ContourError> {
    let nodes = contour.path_nodes();
    match mode {
        CountMode::LogDerivative => {
            let fp = f_prime.as_mut().ok_or(ContourError::DerivativeRequired)?;
            let fv = eval_path(f, &nodes)?;
            let mut sum = Complex64::new(0.0, 0.0);
            for (k, ((z, dz), v)) in nodes.iter().zip(&fv).enumerate() {
                let d = fp(*z);
                if !d.is_finite() {
                    return Err(ContourError::Evaluation { node: k });
                }
                sum += d / v * dz;
            }
            Ok((sum / TWO_PI_I).re)
        }
        CountMode::PhaseIncrement => {
            let fv = eval_path(f, &nodes)?;
            let mut total = 0.0;
            for k in 0..fv.len() {
                let prev = fv[(k + fv.len() - 1) % fv.len()];
                total += (fv[k] / prev).arg();
            }
            Ok(total / TAU)
        }
        CountMode::Approximated => {
            let fv = eval_path(f, &nodes)?;
            let mut sum = Complex64::new(0.0, 0.0);
            for k in 0..fv.len() {
                let prev = fv[(k + fv.len() - 1) % fv.len()];
                sum += 1.0 - prev / fv[k];
            }
            Ok((sum / TWO_PI_I).re)
        }
    }
}

/// Count the zeros of `f` inside the contour by the argument principle.
///
/// Returns the rounded count together with the raw (non-integer) estimate.
/// If the raw value sits more than 0.4 from the nearest admissible integer
/// the node count is doubled once; persistent ambiguity is an error.
pub fn count_zeros(
    f: &mut dyn FnMut(Complex64) -> Complex64,
    mut f_prime: Option<&mut dyn FnMut(Complex64) -> Complex64>,
    contour: &Contour,
    mode: CountMode,
) -> Result<(usize, f64), ContourError> {
    let mut raw = raw_count(f, reborrow(&mut f_prime), contour, mode)?;
    let mut rounded = raw.round();
    if (raw - rounded).abs() > 0.4 || rounded < 0.0 {
        let denser = contour.with_points(contour.n_points * 2);
        raw = raw_count(f, reborrow(&mut f_prime), &denser, mode)?;
        rounded = raw.round();
        if (raw - rounded).abs() > 0.4 || rounded < 0.0 {
            return Err(ContourError::AmbiguousCount { raw });
        }
    }
    Ok((rounded as usize, raw))
}

/// Power-sum moments s_p = sum_i z_i^p over the zeros z_i inside the
/// contour, for p = 1..=n_moments. Path values of f (and f' in DL mode) are
/// computed once and reused for every p.
pub fn moments(
    f: &mut dyn FnMut(Complex64) -> Complex64,
    mut f_prime: Option<&mut dyn FnMut(Complex64) -> Complex64>,
    contour: &Contour,
    n_moments: usize,
    mode: MomentMode,
) -> Result<MomentSet, ContourError> {
    if n_moments == 0 {
        return Ok(MomentSet { s: Vec::new() });
    }
    let nodes = contour.path_nodes();
    let fv = eval_path(f, &nodes)?;
    // Per-node log-derivative element: either (f'/f) dz or its
    // derivative-free surrogate 1 - f_{k-1}/f_k.
    let elements: Vec<Complex64> = match mode {
        MomentMode::Dl => {
            let fp = f_prime.as_mut().ok_or(ContourError::DerivativeRequired)?;
            let mut el = Vec::with_capacity(nodes.len());
            for (k, ((z, dz), v)) in nodes.iter().zip(&fv).enumerate() {
                let d = fp(*z);
                if !d.is_finite() {
                    return Err(ContourError::Evaluation { node: k });
                }
                el.push(d / v * dz);
            }
            el
        }
        MomentMode::Adl => (0..fv.len())
            .map(|k| {
                let prev = fv[(k + fv.len() - 1) % fv.len()];
                1.0 - prev / fv[k]
            })
            .collect(),
    };
    let mut powers: Vec<Complex64> = vec![Complex64::new(1.0, 0.0); nodes.len()];
    let mut s = Vec::with_capacity(n_moments);
    for _ in 1..=n_moments {
        let mut sum = Complex64::new(0.0, 0.0);
        for (k, (z, _)) in nodes.iter().enumerate() {
            powers[k] *= z;
            sum += powers[k] * elements[k];
        }
        s.push(sum / TWO_PI_I);
    }
    Ok(MomentSet { s })
}

/// Coefficients sigma_1..sigma_N of the monic polynomial
/// z^N + sigma_1 z^{N-1} + ... + sigma_N whose roots have the given power
/// sums, via Newton's identities:
/// sigma_p = -(s_p + sum_{j=1}^{p-1} sigma_{p-j} s_j) / p.
pub fn newton_identities(moments: &MomentSet) -> Vec<Complex64> {
    let s = &moments.s;
    let mut sigma: Vec<Complex64> = Vec::with_capacity(s.len());
    for p in 1..=s.len() {
        let mut acc = s[p - 1];
        for j in 1..p {
            acc += sigma[p - j - 1] * s[j - 1];
        }
        sigma.push(-acc / p as f64);
    }
    sigma
}

/// All roots of z^N + sigma[0] z^{N-1} + ... + sigma[N-1] by Aberth-Ehrlich
/// simultaneous iteration. Initial guesses sit on a circle of radius
/// 1 + max_p |sigma_p|^{1/p} (a Cauchy-type root bound), slightly rotated
/// off the axes.
pub fn polynomial_roots(sigma: &[Complex64]) -> Result<Vec<Complex64>, ContourError> {
    let n = sigma.len();
    assert!(n >= 1, "polynomial must have degree at least 1");
    let radius = 1.0
        + sigma
            .iter()
            .enumerate()
            .map(|(i, c)| c.norm().powf(1.0 / (i + 1) as f64))
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| radius * Complex64::cis(TAU * k as f64 / n as f64 + 0.4))
        .collect();

    // Horner evaluation of p and p', plus the coefficient-magnitude bound
    // used for the backward-error convergence test.
    let eval = |x: Complex64| -> (Complex64, Complex64, f64) {
        let mut p = Complex64::new(1.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        let mut bound = 1.0;
        let ax = x.norm();
        for c in sigma {
            dp = dp * x + p;
            p = p * x + c;
            bound = bound * ax + c.norm();
        }
        (p, dp, bound)
    };

    const MAX_SWEEPS: usize = 200;
    for _ in 0..MAX_SWEEPS {
        let mut all_converged = true;
        for k in 0..n {
            let (p, dp, bound) = eval(z[k]);
            if p.norm() <= 1e-12 * bound.max(1.0) {
                continue;
            }
            all_converged = false;
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != k {
                    repulsion += 1.0 / (z[k] - z[j]);
                }
            }
            let step = p / (dp - p * repulsion);
            if step.is_finite() {
                z[k] -= step;
            } else {
                // Coincident guesses or a stationary point: nudge and retry.
                let nudge = Complex64::new(0.01, 0.02) * (1.0 + z[k].norm());
                z[k] += nudge;
            }
        }
        if all_converged {
            return Ok(z);
        }
    }
    Err(ContourError::NoConvergence { sweeps: MAX_SWEEPS })
}

/// Delves-Lyness zero location: count, moments, Newton's identities,
/// polynomial rooting. Output sorted by descending imaginary part (ties by
/// ascending real part).
pub fn dl_locate(
    f: &mut dyn FnMut(Complex64) -> Complex64,
    mut f_prime: Option<&mut dyn FnMut(Complex64) -> Complex64>,
    contour: &Contour,
    mode: MomentMode,
) -> Result<Vec<Complex64>, ContourError> {
    let count_mode = match mode {
        MomentMode::Dl => CountMode::LogDerivative,
        MomentMode::Adl => CountMode::Approximated,
    };
    let (n, _raw) = count_zeros(f, reborrow(&mut f_prime), contour, count_mode)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let ms = moments(f, f_prime, contour, n, mode)?;
    let sigma = newton_identities(&ms);
    let mut roots = polynomial_roots(&sigma)?;
    roots.sort_by(|a, b| {
        b.im.partial_cmp(&a.im)
            .unwrap()
            .then(a.re.partial_cmp(&b.re).unwrap())
    });
    Ok(roots)
}
