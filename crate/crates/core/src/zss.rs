//! Integrators for the focusing Zakharov-Shabat scattering problem.
//!
//! Five one-step transfer-matrix schemes plus a Runge-Kutta integrator
//! propagate the Jost solution across a [`SampledPotential`] and read off
//! `a(xi)`, `b(xi)` and (for the transfer-matrix schemes) `da/dxi`:
//!
//! * `Bo` — Boffetta-Osborne: exact exponential of each piecewise-constant
//!   step of the raw system. Exact for the rectangle.
//! * `Al` — Ablowitz-Ladik one-step matrix (raw system).
//! * `BoMod`, `AlMod` — the same two ideas applied to the envelope system
//!   `chi = phi .* (exp(i xi t), exp(-i xi t))`, with the oscillating factor
//!   `exp(2 i xi t)` frozen at the subinterval midpoint.
//! * `Cn` — Crank-Nicolson (trapezoidal) step on the raw system; the sample
//!   past the right edge is taken as zero.
//! * `Rk4` — classic Runge-Kutta on the envelope system; boundary-stage
//!   potential values come from cubic interpolation of the midpoint samples
//!   so the scheme keeps its fourth order. No derivative propagation.
//!
//! The raw schemes internally propagate `psi = Phi exp(-i xi L)`, which
//! starts at `(1, 0)` and gives `a = psi_1(L) exp(2 i xi L)`, `b = -psi_2(L)`.
//! The sign in `b` fixes the convention used throughout the crate: a positive
//! rectangle barrier has `b(0) = sin(2AL) > 0` and a fundamental soliton has
//! norming constant `b_j / a'(xi_j) = +i`.
//! This keeps the representable range symmetric: components are capped at
//! 1e150 and a breach reports [`ZssError::NumericalOverflow`] (the classic
//! `b`-side pathology of strongly solitonic potentials at complex `xi`). In
//! practice `Im(xi) * L` up to about 170 is safe.

use num_complex::Complex64;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

use crate::discretize::SampledPotential;
use crate::mat2::Mat2;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Hard ceiling on propagated state components.
pub const OVERFLOW_CAP: f64 = 1e150;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    Bo,
    BoMod,
    Al,
    AlMod,
    Cn,
    Rk4,
}

impl Scheme {
    pub const ALL: [Scheme; 6] = [
        Scheme::Bo,
        Scheme::BoMod,
        Scheme::Al,
        Scheme::AlMod,
        Scheme::Cn,
        Scheme::Rk4,
    ];

    /// Does the scheme integrate the envelope system (no carrier wave in the
    /// state)?
    pub fn is_envelope(self) -> bool {
        matches!(self, Scheme::BoMod | Scheme::AlMod | Scheme::Rk4)
    }

    /// Can the scheme propagate `da/dxi` alongside the state?
    pub fn supports_derivative(self) -> bool {
        !matches!(self, Scheme::Rk4)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Scheme::Bo => "bo",
            Scheme::BoMod => "bomod",
            Scheme::Al => "al",
            Scheme::AlMod => "almod",
            Scheme::Cn => "cn",
            Scheme::Rk4 => "rk4",
        };
        f.write_str(name)
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bo" => Ok(Scheme::Bo),
            "bomod" => Ok(Scheme::BoMod),
            "al" => Ok(Scheme::Al),
            "almod" => Ok(Scheme::AlMod),
            "cn" => Ok(Scheme::Cn),
            "rk4" => Ok(Scheme::Rk4),
            other => Err(format!(
                "unknown scheme '{other}' (expected bo, bomod, al, almod, cn or rk4)"
            )),
        }
    }
}

#[derive(Debug, Error)]
pub enum ZssError {
    #[error("{scheme} has no one-step transfer matrix")]
    NoTransferMatrix { scheme: Scheme },
    #[error("{scheme} does not propagate da/dxi")]
    DerivativeUnsupported { scheme: Scheme },
    #[error("propagated state exceeded {OVERFLOW_CAP:e} near t = {t}")]
    NumericalOverflow { t: f64 },
    #[error("singular Crank-Nicolson step near t = {t}")]
    SingularStep { t: f64 },
    #[error("grid point {index}: {source}")]
    AtGridPoint { index: usize, source: Box<ZssError> },
}

/// Scattering coefficients at one spectral point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringResult {
    pub xi: Complex64,
    pub a: Complex64,
    pub b: Complex64,
    /// `da/dxi`, present when requested from a scheme that supports it.
    pub a_prime: Option<Complex64>,
}

impl ScatteringResult {
    /// Reflection coefficient `r = b/a`.
    pub fn r(&self) -> Complex64 {
        self.b / self.a
    }
}

/// One subinterval transfer matrix, optionally with its `xi`-derivative.
#[derive(Debug, Clone, Copy)]
pub struct TransferStep {
    pub m: Mat2,
    pub dm_dxi: Option<Mat2>,
}

/// `cosh(sqrt(w))`, `sinh(sqrt(w))/sqrt(w)` and the `w`-derivative of the
/// latter — all even in `sqrt(w)`, hence single-valued in `w`. The series
/// branch avoids both the removable singularity at `w = 0` and the
/// cancellation that the closed form `(f1 - f2)/(2w)` suffers for small `w`.
fn even_exponentials(w: Complex64) -> (Complex64, Complex64, Complex64) {
    if w.norm() < 1e-3 {
        let f1 = ONE + w / 2.0 + w * w / 24.0 + w * w * w / 720.0;
        let f2 = ONE + w / 6.0 + w * w / 120.0 + w * w * w / 5040.0;
        let f2p = ONE / 6.0 + w / 60.0 + w * w / 1680.0 + w * w * w / 90720.0;
        (f1, f2, f2p)
    } else {
        let z = w.sqrt();
        let f1 = z.cosh();
        let f2 = z.sinh() / z;
        let f2p = (f1 - f2) / (2.0 * w);
        (f1, f2, f2p)
    }
}

/// Transfer matrix of one subinterval for the five one-step schemes.
///
/// `q` is the midpoint sample of the subinterval, `q_next` the next one
/// (used only by `Cn`; pass zero past the right edge), `t_mid` the midpoint
/// time (used only by the envelope schemes).
pub fn transfer_matrix(
    scheme: Scheme,
    xi: Complex64,
    q: Complex64,
    q_next: Complex64,
    t_mid: f64,
    dt: f64,
    want_derivative: bool,
) -> Result<TransferStep, ZssError> {
    let step = match scheme {
        Scheme::Bo => {
            let w = -(xi * xi + q.norm_sqr()) * dt * dt; // (kappa dt)^2
            let (f1, f2, f2p) = even_exponentials(w);
            let m = Mat2::new(
                f1 - I * xi * dt * f2,
                q * dt * f2,
                -q.conj() * dt * f2,
                f1 + I * xi * dt * f2,
            );
            let dm = want_derivative.then(|| {
                let dt3 = dt * dt * dt;
                let diag_re = -xi * dt * dt * f2;
                let diag_im = I * dt * f2 - 2.0 * I * xi * xi * dt3 * f2p;
                Mat2::new(
                    diag_re - diag_im,
                    -2.0 * q * xi * dt3 * f2p,
                    2.0 * q.conj() * xi * dt3 * f2p,
                    diag_re + diag_im,
                )
            });
            TransferStep { m, dm_dxi: dm }
        }
        Scheme::Al => {
            let nu = 1.0 / (1.0 + dt * dt * q.norm_sqr()).sqrt();
            let e = (-I * xi * dt).exp();
            let m = Mat2::new(nu * e, nu * dt * q, -nu * dt * q.conj(), nu / e);
            let dm =
                want_derivative.then(|| Mat2::new(-I * dt * nu * e, ZERO, ZERO, I * dt * nu / e));
            TransferStep { m, dm_dxi: dm }
        }
        Scheme::BoMod => {
            let mag = q.norm();
            if mag == 0.0 {
                return Ok(TransferStep {
                    m: Mat2::identity(),
                    dm_dxi: want_derivative.then(Mat2::zero),
                });
            }
            let g = mag * dt;
            let (cos_g, sin_g) = (g.cos(), g.sin());
            let carrier = (2.0 * I * xi * t_mid).exp();
            let up = (q / mag) * carrier; // exp(i arg q) exp(2 i xi t)
            let dn = (q.conj() / mag) / carrier;
            let m = Mat2::new(
                Complex64::new(cos_g, 0.0),
                sin_g * up,
                -sin_g * dn,
                Complex64::new(cos_g, 0.0),
            );
            let dm = want_derivative.then(|| {
                let f = 2.0 * I * t_mid * sin_g;
                Mat2::new(ZERO, f * up, f * dn, ZERO)
            });
            TransferStep { m, dm_dxi: dm }
        }
        Scheme::AlMod => {
            let nu = 1.0 / (1.0 + dt * dt * q.norm_sqr()).sqrt();
            let carrier = (2.0 * I * xi * t_mid).exp();
            let up = q * dt * carrier;
            let dn = q.conj() * dt / carrier;
            let m = Mat2::new(
                Complex64::new(nu, 0.0),
                nu * up,
                -nu * dn,
                Complex64::new(nu, 0.0),
            );
            let dm = want_derivative.then(|| {
                let f = 2.0 * I * t_mid * nu;
                Mat2::new(ZERO, f * up, f * dn, ZERO)
            });
            TransferStep { m, dm_dxi: dm }
        }
        Scheme::Cn => {
            let s = 0.5 * dt;
            // I - s P(q_next) and I + s P(q) for P = [[-i xi, q], [-q*, i xi]].
            let plus = Mat2::new(
                ONE + s * I * xi,
                -s * q_next,
                s * q_next.conj(),
                ONE - s * I * xi,
            );
            let minus = Mat2::new(ONE - s * I * xi, s * q, -s * q.conj(), ONE + s * I * xi);
            let r = plus.inverse().ok_or(ZssError::SingularStep { t: t_mid })?;
            let m = r * minus;
            let dm = want_derivative.then(|| {
                // dT/dxi = s R D (T + I), D = dP/dxi = diag(-i, i).
                let d = Mat2::new(-I, ZERO, ZERO, I);
                (r * d * (m + Mat2::identity())).scale(Complex64::new(s, 0.0))
            });
            TransferStep { m, dm_dxi: dm }
        }
        Scheme::Rk4 => return Err(ZssError::NoTransferMatrix { scheme }),
    };
    Ok(step)
}

fn check_state(v: [Complex64; 2], t: f64) -> Result<(), ZssError> {
    let mag = v[0].norm().max(v[1].norm());
    if !(mag <= OVERFLOW_CAP) {
        return Err(ZssError::NumericalOverflow { t });
    }
    Ok(())
}

/// Scattering coefficients of a sampled potential at one spectral point.
pub fn scatter(
    pot: &SampledPotential,
    xi: Complex64,
    scheme: Scheme,
    want_derivative: bool,
) -> Result<ScatteringResult, ZssError> {
    if scheme == Scheme::Rk4 {
        if want_derivative {
            return Err(ZssError::DerivativeUnsupported { scheme });
        }
        return scatter_rk4(pot, xi);
    }
    let n = pot.n();
    let dt = pot.dt();
    let l = pot.half_width();
    let samples = pot.samples();
    let mut v = [ONE, ZERO];
    let mut vp = [ZERO, ZERO];
    for m in 0..n {
        let q_next = if m + 1 < n { samples[m + 1] } else { ZERO };
        let step = transfer_matrix(
            scheme,
            xi,
            samples[m],
            q_next,
            pot.midpoint(m),
            dt,
            want_derivative,
        )?;
        if let Some(dm) = step.dm_dxi {
            let forced = dm.mul_vec(v);
            vp = step.m.mul_vec(vp);
            vp = [vp[0] + forced[0], vp[1] + forced[1]];
        }
        v = step.m.mul_vec(v);
        check_state(v, pot.midpoint(m) + 0.5 * dt)?;
    }
    let result = if scheme.is_envelope() {
        ScatteringResult {
            xi,
            a: v[0],
            b: -v[1],
            a_prime: want_derivative.then(|| vp[0]),
        }
    } else {
        let e2 = (2.0 * I * xi * l).exp();
        ScatteringResult {
            xi,
            a: v[0] * e2,
            b: -v[1],
            a_prime: want_derivative.then(|| (vp[0] + 2.0 * I * l * v[0]) * e2),
        }
    };
    Ok(result)
}

/// Potential values at the `n + 1` subinterval boundaries, interpolated from
/// the midpoint samples (cubic inside, one-sided at the edges; degree drops
/// with very short grids).
fn boundary_samples(samples: &[Complex64]) -> Vec<Complex64> {
    let n = samples.len();
    let q = |k: usize| samples[k];
    let mut out = Vec::with_capacity(n + 1);
    if n >= 4 {
        for j in 0..=n {
            let v = if j == 0 {
                (35.0 * q(0) - 35.0 * q(1) + 21.0 * q(2) - 5.0 * q(3)) / 16.0
            } else if j == 1 {
                (5.0 * q(0) + 15.0 * q(1) - 5.0 * q(2) + q(3)) / 16.0
            } else if j == n - 1 {
                (q(n - 4) - 5.0 * q(n - 3) + 15.0 * q(n - 2) + 5.0 * q(n - 1)) / 16.0
            } else if j == n {
                (-5.0 * q(n - 4) + 21.0 * q(n - 3) - 35.0 * q(n - 2) + 35.0 * q(n - 1)) / 16.0
            } else {
                (-q(j - 2) + 9.0 * q(j - 1) + 9.0 * q(j) - q(j + 1)) / 16.0
            };
            out.push(v);
        }
    } else if n == 3 {
        out.push(1.875 * q(0) - 1.25 * q(1) + 0.375 * q(2));
        out.push(0.375 * q(0) + 0.75 * q(1) - 0.125 * q(2));
        out.push(-0.125 * q(0) + 0.75 * q(1) + 0.375 * q(2));
        out.push(0.375 * q(0) - 1.25 * q(1) + 1.875 * q(2));
    } else {
        out.push(1.5 * q(0) - 0.5 * q(1));
        out.push(0.5 * (q(0) + q(1)));
        out.push(-0.5 * q(0) + 1.5 * q(1));
    }
    out
}

/// Classic fourth-order Runge-Kutta on the envelope system.
pub fn scatter_rk4(pot: &SampledPotential, xi: Complex64) -> Result<ScatteringResult, ZssError> {
    let n = pot.n();
    let dt = pot.dt();
    let l = pot.half_width();
    let samples = pot.samples();
    let bounds = boundary_samples(samples);
    let rhs = |t: f64, q: Complex64, x: [Complex64; 2]| -> [Complex64; 2] {
        let carrier = (2.0 * I * xi * t).exp();
        [q * carrier * x[1], -q.conj() / carrier * x[0]]
    };
    let mut x = [ONE, ZERO];
    for m in 0..n {
        let t0 = -l + m as f64 * dt;
        let tm = t0 + 0.5 * dt;
        let t1 = t0 + dt;
        let k1 = rhs(t0, bounds[m], x);
        let k2 = rhs(
            tm,
            samples[m],
            [x[0] + 0.5 * dt * k1[0], x[1] + 0.5 * dt * k1[1]],
        );
        let k3 = rhs(
            tm,
            samples[m],
            [x[0] + 0.5 * dt * k2[0], x[1] + 0.5 * dt * k2[1]],
        );
        let k4 = rhs(t1, bounds[m + 1], [x[0] + dt * k3[0], x[1] + dt * k3[1]]);
        for i in 0..2 {
            x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        check_state(x, t1)?;
    }
    Ok(ScatteringResult {
        xi,
        a: x[0],
        b: -x[1],
        a_prime: None,
    })
}

/// `scatter` over a real grid, in parallel, results ordered as the input.
pub fn continuous_spectrum(
    pot: &SampledPotential,
    xi_grid: &[f64],
    scheme: Scheme,
) -> Result<Vec<ScatteringResult>, ZssError> {
    let per_point: Vec<Result<ScatteringResult, ZssError>> = xi_grid
        .par_iter()
        .map(|&x| scatter(pot, Complex64::new(x, 0.0), scheme, false))
        .collect();
    per_point
        .into_iter()
        .enumerate()
        .map(|(index, r)| {
            r.map_err(|e| ZssError::AtGridPoint {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}
