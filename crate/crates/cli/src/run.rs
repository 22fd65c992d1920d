//! Shared plumbing for the subcommands: flag-value grammars, the work
//! budget, and profile construction with CLI-grade validation (library
//! preconditions are enforced here so bad flags exit with a usage error
//! instead of a panic deep in the numerics).

use std::str::FromStr;
use std::time::{Duration, Instant};

use zsnft::{Complex64, ProfileKind, ProfileSpec};

/// Sample counts: either a single value or `lo..hi` with both endpoints
/// powers of two, expanded by doubling (`256..1024` -> 256, 512, 1024).
#[derive(Clone, Debug)]
pub struct NSpec(pub Vec<usize>);

impl FromStr for NSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_one = |tok: &str| -> Result<usize, String> {
            tok.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad sample count '{tok}': {e}"))
        };
        let values = match s.split_once("..") {
            Some((lo, hi)) => {
                let lo = parse_one(lo)?;
                let hi = parse_one(hi)?;
                if !lo.is_power_of_two() || !hi.is_power_of_two() {
                    return Err(format!(
                        "range endpoints must be powers of two, got {lo}..{hi}"
                    ));
                }
                if lo > hi {
                    return Err(format!("empty range {lo}..{hi}"));
                }
                let mut v = Vec::new();
                let mut n = lo;
                while n <= hi {
                    v.push(n);
                    n *= 2;
                }
                v
            }
            None => vec![parse_one(s)?],
        };
        for &n in &values {
            if n < 2 || n % 2 != 0 {
                return Err(format!("sample count must be even and at least 2, got {n}"));
            }
            if n > 1 << 22 {
                return Err(format!("sample count {n} is past the 2^22 sanity cap"));
            }
        }
        Ok(NSpec(values))
    }
}

/// Uniform real spectral grid `lo:hi:step`.
#[derive(Clone, Copy, Debug)]
pub struct XiGrid {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl XiGrid {
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize + 1;
        (0..count).map(|k| self.lo + k as f64 * self.step).collect()
    }
}

impl FromStr for XiGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected lo:hi:step, got '{s}'"));
        }
        let f = |tok: &str, what: &str| -> Result<f64, String> {
            tok.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad {what} '{tok}': {e}"))
        };
        let grid = XiGrid {
            lo: f(parts[0], "lo")?,
            hi: f(parts[1], "hi")?,
            step: f(parts[2], "step")?,
        };
        if !(grid.lo.is_finite() && grid.hi.is_finite() && grid.step.is_finite()) {
            return Err(format!("grid bounds must be finite, got '{s}'"));
        }
        if grid.lo >= grid.hi || grid.step <= 0.0 {
            return Err(format!("need lo < hi and step > 0, got '{s}'"));
        }
        if (grid.hi - grid.lo) / grid.step > 2e6 {
            return Err(format!("grid '{s}' has more than 2e6 points"));
        }
        Ok(grid)
    }
}

/// Axis-aligned rectangle `re_min:re_max:im_min:im_max` in the complex
/// plane, used for contours, guess lattices and regions of interest.
#[derive(Clone, Copy, Debug)]
pub struct RectArg {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl RectArg {
    pub fn center(&self) -> Complex64 {
        Complex64::new(
            0.5 * (self.re_min + self.re_max),
            0.5 * (self.im_min + self.im_max),
        )
    }
}

impl FromStr for RectArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(format!("expected re_min:re_max:im_min:im_max, got '{s}'"));
        }
        let mut v = [0.0; 4];
        for (slot, tok) in v.iter_mut().zip(&parts) {
            *slot = tok
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("bad rectangle bound '{tok}': {e}"))?;
            if !slot.is_finite() {
                return Err(format!("rectangle bounds must be finite, got '{s}'"));
            }
        }
        if v[0] >= v[1] || v[2] >= v[3] {
            return Err(format!("degenerate rectangle '{s}'"));
        }
        Ok(RectArg {
            re_min: v[0],
            re_max: v[1],
            im_min: v[2],
            im_max: v[3],
        })
    }
}

/// Guess-lattice resolution `WxH` (columns x rows).
#[derive(Clone, Copy, Debug)]
pub struct Lattice {
    pub cols: usize,
    pub rows: usize,
}

impl FromStr for Lattice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (w, h) = s
            .split_once('x')
            .ok_or_else(|| format!("expected WxH, got '{s}'"))?;
        let cols = w
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad width '{w}': {e}"))?;
        let rows = h
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad height '{h}': {e}"))?;
        if cols == 0 || rows == 0 || cols > 4096 || rows > 4096 {
            return Err(format!(
                "lattice must be between 1x1 and 4096x4096, got '{s}'"
            ));
        }
        Ok(Lattice { cols, rows })
    }
}

/// One complex value `re,im`.
#[derive(Clone, Copy, Debug)]
pub struct CxArg(pub Complex64);

impl FromStr for CxArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (re, im) = s
            .split_once(',')
            .ok_or_else(|| format!("expected re,im, got '{s}'"))?;
        let re = re
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad real part '{re}': {e}"))?;
        let im = im
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad imag part '{im}': {e}"))?;
        if !(re.is_finite() && im.is_finite()) {
            return Err(format!("complex value must be finite, got '{s}'"));
        }
        Ok(CxArg(Complex64::new(re, im)))
    }
}

/// Amplitude sweep: a single value, a comma list, or `lo..hi` walked with
/// the `--A-step` increment.
#[derive(Clone, Debug)]
pub enum ASweep {
    List(Vec<f64>),
    Range { lo: f64, hi: f64 },
}

impl ASweep {
    pub fn values(&self, step: f64) -> Result<Vec<f64>, String> {
        match self {
            ASweep::List(v) => Ok(v.clone()),
            ASweep::Range { lo, hi } => {
                if step <= 0.0 || !step.is_finite() {
                    return Err(format!("--A-step must be positive and finite, got {step}"));
                }
                if (hi - lo) / step > 1e5 {
                    return Err("amplitude range has more than 1e5 points".into());
                }
                let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
                Ok((0..count).map(|k| lo + k as f64 * step).collect())
            }
        }
    }
}

impl FromStr for ASweep {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_one = |tok: &str| -> Result<f64, String> {
            let v = tok
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("bad amplitude '{tok}': {e}"))?;
            if !v.is_finite() || v < 0.0 {
                return Err(format!(
                    "amplitude must be finite and non-negative, got '{tok}'"
                ));
            }
            Ok(v)
        };
        if let Some((lo, hi)) = s.split_once("..") {
            let lo = parse_one(lo)?;
            let hi = parse_one(hi)?;
            if lo > hi {
                return Err(format!("empty amplitude range '{s}'"));
            }
            return Ok(ASweep::Range { lo, hi });
        }
        let list: Result<Vec<f64>, String> = s.split(',').map(parse_one).collect();
        let list = list?;
        if list.is_empty() {
            return Err("empty amplitude list".into());
        }
        Ok(ASweep::List(list))
    }
}

/// Wall-clock ceiling on the work done by one invocation. Work units poll
/// [`Budget::exhausted`] before starting and report themselves skipped once
/// the ceiling has passed, so an over-budget run still writes every row.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    start: Instant,
    limit: Duration,
}

impl Budget {
    pub fn new(seconds: f64) -> Result<Self, String> {
        if !(seconds.is_finite() && seconds >= 0.0) {
            return Err(format!(
                "--budget-seconds must be finite and non-negative, got {seconds}"
            ));
        }
        Ok(Budget {
            start: Instant::now(),
            limit: Duration::from_secs_f64(seconds),
        })
    }

    pub fn exhausted(&self) -> bool {
        self.start.elapsed() >= self.limit
    }
}

pub const SKIPPED: &str = "skipped: budget exhausted";

/// Run `f`, returning its value and (when `timing` is set) the elapsed
/// wall-clock seconds. Timing columns stay empty otherwise so identical
/// invocations produce byte-identical output.
pub fn maybe_time<T>(timing: bool, f: impl FnOnce() -> T) -> (T, Option<f64>) {
    if timing {
        let t0 = Instant::now();
        let v = f();
        (v, Some(t0.elapsed().as_secs_f64()))
    } else {
        (f(), None)
    }
}

/// Validated profile construction; `phased` has its amplitude pinned to one.
pub fn build_profile(
    kind: ProfileKind,
    amplitude: Option<f64>,
    half_width: f64,
) -> Result<ProfileSpec, String> {
    if !(half_width.is_finite() && half_width > 0.0) {
        return Err(format!("--L must be finite and positive, got {half_width}"));
    }
    match kind {
        ProfileKind::PhasedSoliton => match amplitude {
            None => Ok(ProfileSpec::phased_soliton(half_width)),
            Some(a) if a == 1.0 => Ok(ProfileSpec::phased_soliton(half_width)),
            Some(a) => Err(format!("the phased soliton has amplitude 1, got --A {a}")),
        },
        _ => {
            let a = amplitude.ok_or_else(|| format!("profile '{kind}' requires --A"))?;
            if !(a.is_finite() && a >= 0.0) {
                return Err(format!("--A must be finite and non-negative, got {a}"));
            }
            Ok(ProfileSpec::new(kind, a, half_width))
        }
    }
}

/// Relative error with the standard fallback: plain absolute difference
/// where the reference vanishes.
pub fn rel_or_abs(computed: Complex64, reference: Complex64) -> f64 {
    let d = (computed - reference).norm();
    let r = reference.norm();
    if r == 0.0 {
        d
    } else {
        d / r
    }
}

/// Relative distance from each located zero to the nearest closed-form
/// eigenvalue, when the profile has a closed-form set.
pub fn oracle_errors(zeros: &[Complex64], oracle: &[Complex64]) -> Vec<Option<f64>> {
    zeros
        .iter()
        .map(|z| {
            oracle
                .iter()
                .map(|r| (z - r).norm() / r.norm())
                .min_by(|a, b| a.partial_cmp(b).unwrap())
        })
        .collect()
}
