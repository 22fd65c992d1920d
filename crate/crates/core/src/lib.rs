//! Nonlinear Fourier transform (direct scattering transform) of the focusing
//! Zakharov-Shabat problem
//!
//! ```text
//!   d/dt [phi1]   [ -i xi    q(t) ] [phi1]
//!        [phi2] = [ -q*(t)   i xi ] [phi2]
//! ```
//!
//! for decaying potentials `q(t)` truncated to `[-L, L]`. The crate computes
//! the continuous scattering coefficients `a(xi)`, `b(xi)` and `r = b/a` on
//! the real axis, locates solitonic eigenvalues (zeros of `a` in the upper
//! half plane) and evaluates the associated norming constants `c_j`.
//!
//! Module map:
//!
//! * [`profiles`] — closed-form test potentials (hyperbolic secant, rectangle,
//!   phased soliton) with analytic scattering data used as oracles,
//! * [`discretize`] — midpoint sampling of a potential onto a uniform grid,
//!   plus CSV import/export,
//! * [`zss`] — transfer-matrix and Runge-Kutta integrators for the scattering
//!   problem, with `d a / d xi` propagation,
//! * [`rootfind`] — scalar complex root finders (Newton-Raphson, secant,
//!   Sidi, Steffensen, Muller) and sequential multi-root search with
//!   deflation,
//! * [`contour`] — argument-principle zero counting, contour moments, Newton
//!   identities and polynomial root recovery (Delves-Lyness),
//! * [`hybrid`] — contour pass for approximate eigenvalues followed by
//!   iterative refinement,
//! * [`norming`] — norming constants via contour residue, `b/a'` fraction and
//!   the bidirectional fraction, plus full discrete-spectrum assembly,
//! * [`metrics`] — error measures, continuous-spectrum energy and timing
//!   helpers,
//! * [`special`] — complex gamma function used by the analytic oracles.

pub mod contour;
pub mod discretize;
pub mod hybrid;
pub mod mat2;
pub mod metrics;
pub mod norming;
pub mod profiles;
pub mod rootfind;
pub mod special;
pub mod zss;

pub use num_complex::Complex64;

pub use contour::{Contour, ContourError, ContourShape, CountMode, MomentMode, MomentSet};
pub use discretize::{GridError, SampledPotential};
pub use hybrid::{HybridConfig, HybridEigenvalue, HybridError};
pub use metrics::{EnergySource, ErrorReport, MetricsError};
pub use norming::{DiscreteSpectrum, NormingError, NormingMethod, SpectrumEntry};
pub use profiles::{ProfileError, ProfileKind, ProfileSpec};
pub use rootfind::{Region, RootConfig, RootMethod, RootOutcome, RootStatus, StopRule};
pub use zss::{ScatteringResult, Scheme, ZssError};
