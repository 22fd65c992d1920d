//! Scalar complex root finders and the sequential multi-root driver.
//!
//! Five iterations are available: Newton-Raphson (needs the derivative),
//! secant, Sidi's method with a cubic fitting polynomial, Steffensen, and
//! Muller. All run until the step size drops below `tol_step` (an
//! alternative stop on the change of function values can be selected),
//! the iteration budget is spent, or the iterates abandon the region of
//! interest.
//!
//! [`multi_root`] chains one finder through a whole cluster of zeros:
//! locate, validate against the region, deflate, re-seed randomly inside the
//! region on failure (seeded RNG, so runs are reproducible bit for bit).

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootMethod {
    NewtonRaphson,
    Secant,
    Sidi3,
    Steffensen,
    Muller,
}

impl RootMethod {
    pub const ALL: [RootMethod; 5] = [
        RootMethod::NewtonRaphson,
        RootMethod::Secant,
        RootMethod::Sidi3,
        RootMethod::Steffensen,
        RootMethod::Muller,
    ];

    pub fn needs_derivative(self) -> bool {
        self == RootMethod::NewtonRaphson
    }

    pub fn name(self) -> &'static str {
        match self {
            RootMethod::NewtonRaphson => "nr",
            RootMethod::Secant => "secant",
            RootMethod::Sidi3 => "sidi",
            RootMethod::Steffensen => "steffensen",
            RootMethod::Muller => "muller",
        }
    }
}

impl std::str::FromStr for RootMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "nr" | "newton" | "newton-raphson" => Ok(RootMethod::NewtonRaphson),
            "secant" => Ok(RootMethod::Secant),
            "sidi" | "sidi3" => Ok(RootMethod::Sidi3),
            "steffensen" => Ok(RootMethod::Steffensen),
            "muller" => Ok(RootMethod::Muller),
            other => Err(format!(
                "unknown root method '{other}' (expected nr, secant, sidi, steffensen or muller)"
            )),
        }
    }
}

impl std::fmt::Display for RootMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Axis-aligned rectangle in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Region {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Region {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Self {
        assert!(re_min < re_max && im_min < im_max, "degenerate region");
        Region {
            re_min,
            re_max,
            im_min,
            im_max,
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    /// Uniform sample, used for re-seeding the multi-root search.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Complex64 {
        let re = rng.gen_range(self.re_min..self.re_max);
        let im = rng.gen_range(self.im_min..self.im_max);
        Complex64::new(re, im)
    }

    /// Grow the rectangle about its center by `factor` (e.g. 1.1 for +10%).
    pub fn inflate(&self, factor: f64) -> Region {
        let cx = 0.5 * (self.re_min + self.re_max);
        let cy = 0.5 * (self.im_min + self.im_max);
        let hw = 0.5 * (self.re_max - self.re_min) * factor;
        let hh = 0.5 * (self.im_max - self.im_min) * factor;
        Region {
            re_min: cx - hw,
            re_max: cx + hw,
            im_min: cy - hh,
            im_max: cy + hh,
        }
    }
}

/// What "converged" means: step size or change of function value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StopRule {
    #[default]
    StepSize,
    ValueDelta,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootConfig {
    pub method: RootMethod,
    pub tol_step: f64,
    pub max_iter: usize,
    pub roi: Option<Region>,
    pub stop: StopRule,
}

impl RootConfig {
    pub fn new(method: RootMethod) -> Self {
        RootConfig {
            method,
            tol_step: 1e-10,
            max_iter: 1000,
            roi: None,
            stop: StopRule::StepSize,
        }
    }

    pub fn with_roi(mut self, roi: Region) -> Self {
        self.roi = Some(roi);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootStatus {
    Converged,
    MaxIterExceeded,
    LeftRoi,
    NumericalFailure,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOutcome {
    /// Present exactly when `status == Converged`.
    pub root: Option<Complex64>,
    pub iterations: usize,
    pub status: RootStatus,
    /// `|f|` at the final iterate, when it could be evaluated (diagnostic).
    pub residual: Option<f64>,
}

impl RootOutcome {
    fn failed(status: RootStatus, iterations: usize, residual: Option<f64>) -> Self {
        RootOutcome {
            root: None,
            iterations,
            status,
            residual,
        }
    }
}

#[derive(Debug, Error)]
pub enum RootError {
    /// The multi-root search ran out of retries with some zeros still
    /// missing; the ones it did locate are returned for inspection.
    #[error("located {} of {expected} zeros", found.len())]
    Incomplete {
        found: Vec<Complex64>,
        expected: usize,
    },
}

/// Abort runaway iterations after this many consecutive iterates outside the
/// region of interest.
const ROI_STRIKES: usize = 10;

/// Relative + absolute offset used to fabricate secant/Muller starting
/// points around the initial guess.
const BOOTSTRAP_OFFSET: f64 = 1e-3;

fn divided_difference(x1: Complex64, f1: Complex64, x2: Complex64, f2: Complex64) -> Complex64 {
    (f2 - f1) / (x2 - x1)
}

/// Find one root of `f` starting from `guess`.
///
/// `f_prime` is consulted only by Newton-Raphson; passing `None` there
/// reports `NumericalFailure` immediately. Non-finite function values or
/// iterates (for instance from evaluating a deflated function exactly at a
/// deflation point) also surface as `NumericalFailure`; drivers are expected
/// to retry from a perturbed guess.
pub fn find_root(
    f: &mut dyn FnMut(Complex64) -> Complex64,
    mut f_prime: Option<&mut dyn FnMut(Complex64) -> Complex64>,
    guess: Complex64,
    cfg: &RootConfig,
) -> RootOutcome {
    assert!(
        cfg.tol_step > 0.0 && cfg.max_iter >= 1,
        "invalid root configuration"
    );
    if cfg.method.needs_derivative() && f_prime.is_none() {
        return RootOutcome::failed(RootStatus::NumericalFailure, 0, None);
    }

    // History of recent iterates, newest last. Secant-family methods seed it
    // with offset points around the guess; those fabricated points do not
    // count as iterations.
    let mut history: Vec<(Complex64, Complex64)> = Vec::new();
    let push = |hist: &mut Vec<(Complex64, Complex64)>, x: Complex64, fx: Complex64| {
        hist.push((x, fx));
        if hist.len() > 4 {
            hist.remove(0);
        }
    };

    let f0 = f(guess);
    if !f0.is_finite() {
        return RootOutcome::failed(RootStatus::NumericalFailure, 0, None);
    }
    match cfg.method {
        RootMethod::Muller => {
            let off = guess * BOOTSTRAP_OFFSET;
            let spread = Complex64::new(BOOTSTRAP_OFFSET, 0.0);
            for x in [guess - off - spread, guess + off + spread] {
                let fx = f(x);
                if !fx.is_finite() {
                    return RootOutcome::failed(RootStatus::NumericalFailure, 0, None);
                }
                push(&mut history, x, fx);
            }
            push(&mut history, guess, f0);
        }
        RootMethod::Secant | RootMethod::Sidi3 => {
            let second = guess * (1.0 + BOOTSTRAP_OFFSET) + BOOTSTRAP_OFFSET;
            let fs = f(second);
            if !fs.is_finite() {
                return RootOutcome::failed(RootStatus::NumericalFailure, 0, None);
            }
            push(&mut history, guess, f0);
            push(&mut history, second, fs);
        }
        RootMethod::NewtonRaphson | RootMethod::Steffensen => {
            push(&mut history, guess, f0);
        }
    }

    let mut strikes = if cfg.roi.map_or(true, |r| r.contains(guess)) {
        0
    } else {
        1
    };
    for iteration in 1..=cfg.max_iter {
        let (x, fx) = *history.last().unwrap();
        let x_next = if fx.norm() == 0.0 {
            // Exact zero: stay put so the step-size rule fires. Without this
            // Steffensen's probe would evaluate 0/0.
            x
        } else {
            match cfg.method {
                RootMethod::NewtonRaphson => {
                    let d = f_prime.as_mut().unwrap()(x);
                    if !d.is_finite() || d.norm() == 0.0 {
                        return RootOutcome::failed(
                            RootStatus::NumericalFailure,
                            iteration - 1,
                            Some(fx.norm()),
                        );
                    }
                    x - fx / d
                }
                RootMethod::Secant => {
                    let (xp, fp) = history[history.len() - 2];
                    let slope = divided_difference(xp, fp, x, fx);
                    x - fx / slope
                }
                RootMethod::Sidi3 => {
                    // Warm up with secant steps until four points exist, then use
                    // the derivative of the cubic Newton interpolant at x_k.
                    if history.len() < 4 {
                        let (xp, fp) = history[history.len() - 2];
                        let slope = divided_difference(xp, fp, x, fx);
                        x - fx / slope
                    } else {
                        // Points ordered oldest..newest: x_{k-3}..x_k.
                        let pts: Vec<(Complex64, Complex64)> = history.clone();
                        let d1 = |i: usize, j: usize| {
                            divided_difference(pts[i].0, pts[i].1, pts[j].0, pts[j].1)
                        };
                        let f32_ = d1(3, 2);
                        let f21 = d1(2, 1);
                        let f10 = d1(1, 0);
                        let f321 = (f21 - f32_) / (pts[1].0 - pts[3].0);
                        let f210 = (f10 - f21) / (pts[0].0 - pts[2].0);
                        let f3210 = (f210 - f321) / (pts[0].0 - pts[3].0);
                        let dx1 = pts[3].0 - pts[2].0;
                        let dx2 = pts[3].0 - pts[1].0;
                        let p_prime = f32_ + f321 * dx1 + f3210 * dx1 * dx2;
                        x - fx / p_prime
                    }
                }
                RootMethod::Steffensen => {
                    let probe = f(x + fx);
                    if !probe.is_finite() {
                        return RootOutcome::failed(
                            RootStatus::NumericalFailure,
                            iteration - 1,
                            Some(fx.norm()),
                        );
                    }
                    let denom = probe - fx;
                    x - fx * fx / denom
                }
                RootMethod::Muller => {
                    let (x0, g0) = history[history.len() - 3];
                    let (x1, g1) = history[history.len() - 2];
                    let w = divided_difference(x1, g1, x, fx) + divided_difference(x0, g0, x, fx)
                        - divided_difference(x0, g0, x1, g1);
                    let g = {
                        let a = divided_difference(x1, g1, x, fx);
                        let b = divided_difference(x0, g0, x1, g1);
                        (a - b) / (x - x0)
                    };
                    let sq = (w * w - 4.0 * fx * g).sqrt();
                    let d1 = w + sq;
                    let d2 = w - sq;
                    let d = if d1.norm() >= d2.norm() { d1 } else { d2 };
                    if d.norm() == 0.0 || !d.is_finite() {
                        return RootOutcome::failed(
                            RootStatus::NumericalFailure,
                            iteration - 1,
                            Some(fx.norm()),
                        );
                    }
                    x - 2.0 * fx / d
                }
            }
        };

        if !x_next.is_finite() {
            return RootOutcome::failed(RootStatus::NumericalFailure, iteration, Some(fx.norm()));
        }
        if let Some(roi) = cfg.roi {
            if roi.contains(x_next) {
                strikes = 0;
            } else {
                strikes += 1;
                if strikes >= ROI_STRIKES {
                    return RootOutcome::failed(RootStatus::LeftRoi, iteration, Some(fx.norm()));
                }
            }
        }

        let f_next = f(x_next);
        let converged = match cfg.stop {
            StopRule::StepSize => (x_next - x).norm() < cfg.tol_step,
            StopRule::ValueDelta => f_next.is_finite() && (f_next - fx).norm() < cfg.tol_step,
        };
        if converged {
            return RootOutcome {
                root: Some(x_next),
                iterations: iteration,
                status: RootStatus::Converged,
                residual: f_next.is_finite().then(|| f_next.norm()),
            };
        }
        if !f_next.is_finite() {
            return RootOutcome::failed(RootStatus::NumericalFailure, iteration, None);
        }
        push(&mut history, x_next, f_next);
    }
    let last = history.last().unwrap();
    RootOutcome::failed(
        RootStatus::MaxIterExceeded,
        cfg.max_iter,
        Some(last.1.norm()),
    )
}

/// `f(x) / prod (x - x_i)`: divide out already-located zeros so the next
/// search cannot land on them. Evaluating exactly at a deflation point
/// produces a non-finite value, which finders report as `NumericalFailure`.
pub fn deflate<'a>(
    mut f: impl FnMut(Complex64) -> Complex64 + 'a,
    located: &[Complex64],
) -> impl FnMut(Complex64) -> Complex64 + 'a {
    let located = located.to_vec();
    move |x| {
        let mut v = f(x);
        for r in &located {
            v /= x - r;
        }
        v
    }
}

/// Locate `n_expected` zeros of `f` inside `roi`, one at a time, deflating
/// after each find and re-seeding from the (seeded) RNG after each failure.
/// The first search starts from `guess`; up to three attempts are spent per
/// zero.
pub fn multi_root(
    f: &mut dyn FnMut(Complex64) -> Complex64,
    mut f_prime: Option<&mut dyn FnMut(Complex64) -> Complex64>,
    guess: Complex64,
    n_expected: usize,
    roi: Region,
    cfg: &RootConfig,
    rng_seed: u64,
) -> Result<Vec<Complex64>, RootError> {
    assert!(n_expected >= 1, "expected zero count must be at least 1");
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut found: Vec<Complex64> = Vec::new();
    let mut current_guess = guess;
    let search_cfg = RootConfig {
        roi: Some(cfg.roi.unwrap_or(roi)),
        ..*cfg
    };

    while found.len() < n_expected {
        let mut attempts = 0;
        let root = loop {
            let outcome = {
                let mut fc = {
                    let found_ref = &found;
                    let f = &mut *f;
                    move |x: Complex64| {
                        let mut v = f(x);
                        for r in found_ref {
                            v /= x - r;
                        }
                        v
                    }
                };
                // Quotient rule on the deflated function:
                // fc' = (f' - f * sum 1/(x - x_i)) / prod (x - x_i).
                match f_prime.as_mut() {
                    Some(fp) => {
                        let found_ref = &found;
                        // Both closures need f; rebuild fc without capturing it
                        // mutably twice by interleaving evaluations.
                        let cell = std::cell::RefCell::new((&mut *f, &mut **fp));
                        let mut fc2 = |x: Complex64| {
                            let mut v = (cell.borrow_mut().0)(x);
                            for r in found_ref {
                                v /= x - r;
                            }
                            v
                        };
                        let mut fcp = |x: Complex64| {
                            let mut guard = cell.borrow_mut();
                            let fv = (guard.0)(x);
                            let dv = (guard.1)(x);
                            drop(guard);
                            let mut sum = Complex64::new(0.0, 0.0);
                            let mut prod = Complex64::new(1.0, 0.0);
                            for r in found_ref {
                                sum += 1.0 / (x - r);
                                prod *= x - r;
                            }
                            (dv - fv * sum) / prod
                        };
                        find_root(&mut fc2, Some(&mut fcp), current_guess, &search_cfg)
                    }
                    None => find_root(&mut fc, None, current_guess, &search_cfg),
                }
            };
            attempts += 1;
            if let (RootStatus::Converged, Some(r)) = (outcome.status, outcome.root) {
                if roi.contains(r) {
                    break Some(r);
                }
            }
            if attempts >= 3 {
                break None;
            }
            current_guess = roi.sample(&mut rng);
        };
        match root {
            Some(r) => {
                found.push(r);
                current_guess = roi.sample(&mut rng);
            }
            None => {
                return Err(RootError::Incomplete {
                    found,
                    expected: n_expected,
                })
            }
        }
    }
    Ok(found)
}
