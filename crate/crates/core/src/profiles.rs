//! Closed-form test potentials and their analytic scattering data.
//!
//! Three classical potentials with known nonlinear Fourier spectra serve as
//! oracles for every numerical routine in the crate:
//!
//! * `OverSoliton` — `q(t) = A sech t`. Scattering coefficients are gamma
//!   ratios; eigenvalues sit at `(A - 1/2 - k) i`.
//! * `Rectangular` — `q(t) = A` on `[-L, L]`, zero outside. Everything is
//!   elementary trigonometry in `s = sqrt(xi^2 + A^2)`; eigenvalues solve a
//!   transcendental equation handled by a scan-and-bisect oracle.
//! * `PhasedSoliton` — `q(t) = exp(-i t) sech t`, a single soliton with
//!   eigenvalue `1/2 + i/2`, norming constant `i`, and zero reflection.
//!
//! Sign conventions match the numerical scattering in [`crate::zss`]: the
//! rectangle has `b(0) = sin(2AL) > 0` for small `AL`, and norming constants
//! are the residues of `r = b/a` in that same convention (so the phased
//! soliton's constant is `+i`).

use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

use crate::special::{gamma, recip_gamma};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Error, PartialEq)]
pub enum ProfileError {
    /// No closed-form norming constant for the requested eigenvalue.
    #[error("no closed-form norming constant at xi = {xi}")]
    UnsupportedEigenvalue { xi: Complex64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    OverSoliton,
    Rectangular,
    PhasedSoliton,
}

impl std::str::FromStr for ProfileKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "over" | "over-soliton" | "sech" => Ok(ProfileKind::OverSoliton),
            "rect" | "rectangular" => Ok(ProfileKind::Rectangular),
            "phased" | "phased-soliton" => Ok(ProfileKind::PhasedSoliton),
            other => Err(format!(
                "unknown profile '{other}' (expected over, rect or phased)"
            )),
        }
    }
}

impl std::fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ProfileKind::OverSoliton => "over",
            ProfileKind::Rectangular => "rect",
            ProfileKind::PhasedSoliton => "phased",
        })
    }
}

/// A test potential: kind, amplitude `A` and half-width `L`.
///
/// For `Rectangular` the half-width is the support of the box; for the two
/// sech-based potentials it is the truncation half-width used when sampling
/// (their closed-form spectra are those of the infinite line).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSpec {
    pub kind: ProfileKind,
    pub amplitude: f64,
    pub half_width: f64,
}

impl ProfileSpec {
    pub fn new(kind: ProfileKind, amplitude: f64, half_width: f64) -> Self {
        assert!(
            amplitude.is_finite() && amplitude >= 0.0,
            "amplitude must be finite and non-negative"
        );
        assert!(
            half_width.is_finite() && half_width > 0.0,
            "half-width must be finite and positive"
        );
        ProfileSpec {
            kind,
            amplitude,
            half_width,
        }
    }

    pub fn over_soliton(amplitude: f64, half_width: f64) -> Self {
        Self::new(ProfileKind::OverSoliton, amplitude, half_width)
    }

    pub fn rectangular(amplitude: f64, half_width: f64) -> Self {
        Self::new(ProfileKind::Rectangular, amplitude, half_width)
    }

    /// The unit soliton `exp(-i t) sech t`; amplitude is fixed at one.
    pub fn phased_soliton(half_width: f64) -> Self {
        Self::new(ProfileKind::PhasedSoliton, 1.0, half_width)
    }

    /// Potential value at time `t`.
    pub fn evaluate_q(&self, t: f64) -> Complex64 {
        match self.kind {
            ProfileKind::OverSoliton => Complex64::new(self.amplitude * sech(t), 0.0),
            ProfileKind::Rectangular => {
                if t.abs() <= self.half_width {
                    Complex64::new(self.amplitude, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }
            ProfileKind::PhasedSoliton => {
                let s = sech(t);
                Complex64::new(t.cos() * s, -t.sin() * s)
            }
        }
    }

    /// Analytic `a(xi)`, valid on the real axis and in the upper half plane.
    ///
    /// For `PhasedSoliton` this is the standard reflectionless coefficient
    /// `(xi - xi_0)/(xi - conj(xi_0))` of the unit soliton (a derived
    /// standard form, not a quoted one); it is intended for eigenvalue and
    /// basin oracles.
    pub fn analytic_a(&self, xi: Complex64) -> Complex64 {
        match self.kind {
            ProfileKind::OverSoliton => {
                let a = self.amplitude;
                let g = gamma(Complex64::new(0.5, 0.0) - I * xi);
                g * g
                    * recip_gamma(Complex64::new(0.5 - a, 0.0) - I * xi)
                    * recip_gamma(Complex64::new(0.5 + a, 0.0) - I * xi)
            }
            ProfileKind::Rectangular => {
                let (c, s) = self.rect_trig(xi);
                (2.0 * I * xi * self.half_width).exp() * (c - I * xi * s)
            }
            ProfileKind::PhasedSoliton => {
                let xi0 = phased_eigenvalue();
                (xi - xi0) / (xi - xi0.conj())
            }
        }
    }

    /// Analytic `b(xi)` on the real axis, in the crate's sign convention
    /// (positive barrier gives `b(0) > 0`; see [`crate::zss`]).
    ///
    /// The phased soliton is reflectionless, so its `b` vanishes there.
    pub fn analytic_b(&self, xi: Complex64) -> Complex64 {
        match self.kind {
            ProfileKind::OverSoliton => {
                // sin(pi A) sech(pi xi)
                let amp = (PI * self.amplitude).sin();
                amp / (PI * xi).cosh()
            }
            ProfileKind::Rectangular => {
                // (A / s) sin(2 s L)
                let (_, s) = self.rect_trig(xi);
                self.amplitude * s
            }
            ProfileKind::PhasedSoliton => Complex64::new(0.0, 0.0),
        }
    }

    /// Analytic reflection coefficient `r(xi) = b(xi)/a(xi)` on the real axis.
    pub fn analytic_r(&self, xi: Complex64) -> Complex64 {
        match self.kind {
            ProfileKind::OverSoliton => self.analytic_b(xi) / self.analytic_a(xi),
            ProfileKind::Rectangular => {
                // A exp(-2 i xi L) S / (C - i xi S), pole-free except at the
                // actual poles of r (the eigenvalue condition C = i xi S).
                let (c, s) = self.rect_trig(xi);
                let l = self.half_width;
                self.amplitude * (-2.0 * I * xi * l).exp() * s / (c - I * xi * s)
            }
            ProfileKind::PhasedSoliton => Complex64::new(0.0, 0.0),
        }
    }

    /// Discrete eigenvalues in the upper half plane, sorted by descending
    /// imaginary part.
    pub fn analytic_eigenvalues(&self) -> Vec<Complex64> {
        match self.kind {
            ProfileKind::OverSoliton => {
                let mut out = Vec::new();
                let mut im = self.amplitude - 0.5;
                while im > 1e-12 {
                    out.push(Complex64::new(0.0, im));
                    im -= 1.0;
                }
                out
            }
            ProfileKind::Rectangular => self.rect_eigenvalues(),
            ProfileKind::PhasedSoliton => vec![phased_eigenvalue()],
        }
    }

    /// Closed-form norming constant at the eigenvalue `xi_j`.
    ///
    /// Available everywhere for the rectangle, at the topmost eigenvalue of
    /// the over-soliton, and at the single eigenvalue of the phased soliton.
    pub fn analytic_norming(&self, xi_j: Complex64) -> Result<Complex64, ProfileError> {
        match self.kind {
            ProfileKind::OverSoliton => {
                let a = self.amplitude;
                let top = Complex64::new(0.0, a - 0.5);
                if a <= 0.5 || (xi_j - top).norm() > 1e-3 {
                    return Err(ProfileError::UnsupportedEigenvalue { xi: xi_j });
                }
                let g = gamma(Complex64::new(a, 0.0));
                Ok(I * gamma(Complex64::new(2.0 * a, 0.0)) / (g * g))
            }
            ProfileKind::Rectangular => {
                // Residue of the analytic r at xi_j:
                //   c = -i (A^2 + xi^2) exp(-2 i xi L) S / (A (2 L C - S)).
                let (c, s) = self.rect_trig(xi_j);
                let a = self.amplitude;
                let l = self.half_width;
                let num = -I * (a * a + xi_j * xi_j) * (-2.0 * I * xi_j * l).exp() * s;
                Ok(num / (a * (2.0 * l * c - s)))
            }
            ProfileKind::PhasedSoliton => {
                if (xi_j - phased_eigenvalue()).norm() > 1e-3 {
                    return Err(ProfileError::UnsupportedEigenvalue { xi: xi_j });
                }
                Ok(I)
            }
        }
    }

    /// `cos(2 s L)` and `sin(2 s L)/s` for `s = sqrt(xi^2 + A^2)`.
    ///
    /// Both are even in `s`, i.e. single-valued functions of `w = xi^2 + A^2`,
    /// so no square-root branch choice can leak into the coefficients. Near
    /// `w = 0` (the corner `xi = +/- i A`) the pair switches to series.
    fn rect_trig(&self, xi: Complex64) -> (Complex64, Complex64) {
        let w = xi * xi + self.amplitude * self.amplitude;
        let two_l = 2.0 * self.half_width;
        let z2 = w * (two_l * two_l);
        if z2.norm() < 1e-3 {
            let cos = ONE - z2 / 2.0 + z2 * z2 / 24.0 - z2 * z2 * z2 / 720.0;
            let sinc = ONE - z2 / 6.0 + z2 * z2 / 120.0 - z2 * z2 * z2 / 5040.0;
            (cos, two_l * sinc)
        } else {
            let s = w.sqrt();
            let z = two_l * s;
            (z.cos(), z.sin() / s)
        }
    }

    /// Eigenvalues of the rectangle: `xi = i y`, `0 < y < A`, where
    /// `G(y) = cos(2 beta L) + y sin(2 beta L)/beta = 0`, `beta^2 = A^2 - y^2`.
    ///
    /// `G` is even in `beta` (well defined through `beta = 0`) and free of the
    /// spurious root that the `tan` form of the equation has at `y = A`.
    /// A scan with step `A/200` brackets the sign changes; bisection refines
    /// each bracket to machine precision.
    fn rect_eigenvalues(&self) -> Vec<Complex64> {
        let a = self.amplitude;
        if a <= 0.0 {
            return Vec::new();
        }
        let g = |y: f64| -> f64 {
            let xi = Complex64::new(0.0, y);
            let (c, s) = self.rect_trig(xi);
            // For real y both c and s are real up to roundoff.
            c.re + y * s.re
        };
        let step = a / 200.0;
        let mut roots = Vec::new();
        let mut y0 = step * 1e-6; // strictly inside (0, A)
        let mut g0 = g(y0);
        while y0 < a - step * 1e-6 {
            let y1 = (y0 + step).min(a - step * 1e-6);
            let g1 = g(y1);
            if g0 == 0.0 {
                roots.push(y0);
            } else if g0 * g1 < 0.0 {
                let (mut lo, mut hi, mut glo) = (y0, y1, g0);
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break; // interval exhausted at machine precision
                    }
                    let gm = g(mid);
                    if glo * gm <= 0.0 {
                        hi = mid;
                    } else {
                        lo = mid;
                        glo = gm;
                    }
                }
                roots.push(0.5 * (lo + hi));
            }
            y0 = y1;
            g0 = g1;
        }
        roots.sort_by(|p, q| q.partial_cmp(p).unwrap());
        roots.into_iter().map(|y| Complex64::new(0.0, y)).collect()
    }
}

fn phased_eigenvalue() -> Complex64 {
    Complex64::new(0.5, 0.5)
}

fn sech(t: f64) -> f64 {
    1.0 / t.cosh() // cosh overflows to +inf for |t| > ~710, giving a clean 0
}
