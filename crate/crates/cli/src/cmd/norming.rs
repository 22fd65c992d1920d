//! `norming`: norming-constant accuracy across an amplitude sweep. Each
//! method is evaluated at the profile's closed-form top eigenvalue, so the
//! rows isolate norming error from eigenvalue-location error and compare
//! directly against the closed-form constant (the gamma-ratio formula for
//! the sech family).

use clap::Args;
use rayon::prelude::*;

use zsnft::norming::{bidirectional_b, residue_contour, residue_fraction};
use zsnft::zss::scatter;
use zsnft::{norming, Complex64, NormingMethod, ProfileKind, SampledPotential, Scheme};

use super::{check_n, IoArgs};
use crate::output::{emit, fmt_e, opt_e, push_row, sanitize};
use crate::run::{build_profile, maybe_time, rel_or_abs, ASweep, Budget, SKIPPED};

const HEADER: &str = "amplitude,method,scheme,c_re,c_im,rel_err,runtime,status";

#[derive(Args, Debug)]
#[command(after_help = "\
Columns: amplitude, method, scheme, c_re, c_im, rel_err, runtime, status.
Every method evaluates the norming constant at the closed-form top eigenvalue
of the profile; rel_err compares against the closed-form constant. Rows whose
computation failed carry the reason in status and leave the value columns
empty. runtime is empty unless --timing.")]
pub struct NormingArgs {
    /// Test potential: over (A sech t), rect (height-A box on [-L, L]) or
    /// phased (exp(-i t) sech t)
    #[arg(long)]
    pub profile: ProfileKind,

    /// Amplitude sweep: single value, comma list, or lo..hi walked with
    /// --A-step; required for over and rect, fixed at 1 for phased
    #[arg(long = "A")]
    pub amplitude: Option<ASweep>,

    /// Increment for lo..hi amplitude ranges
    #[arg(long = "A-step", default_value_t = 0.25)]
    pub a_step: f64,

    /// Truncation half-width: the potential is sampled on [-L, L]
    #[arg(long = "L")]
    pub half_width: f64,

    /// Sample count
    #[arg(long, default_value_t = 4096)]
    pub n: usize,

    /// Scattering scheme
    #[arg(long, default_value_t = Scheme::Bo)]
    pub scheme: Scheme,

    /// Norming methods, comma separated: residue, fraction, bidirectional
    #[arg(long, value_delimiter = ',',
          default_values_t = vec![NormingMethod::ContourResidue { n_points: 64 },
                                  NormingMethod::Fraction,
                                  NormingMethod::BidirectionalFraction])]
    pub methods: Vec<NormingMethod>,

    /// Circle nodes for the residue method
    #[arg(long, default_value_t = 64)]
    pub residue_points: usize,

    /// Circle radius for the residue method (default: half the gap to the
    /// nearest other eigenvalue or to the real axis, capped at 0.2)
    #[arg(long)]
    pub residue_radius: Option<f64>,

    #[command(flatten)]
    pub io: IoArgs,
}

pub fn run(args: &NormingArgs) -> Result<bool, String> {
    check_n(args.n)?;
    if args.residue_points < 8 {
        return Err(format!(
            "--residue-points must be at least 8, got {}",
            args.residue_points
        ));
    }
    if let Some(r) = args.residue_radius {
        if !(r.is_finite() && r > 0.0) {
            return Err(format!("--residue-radius must be positive, got {r}"));
        }
    }
    let needs_derivative = args.methods.iter().any(|m| {
        matches!(
            m,
            NormingMethod::Fraction | NormingMethod::BidirectionalFraction
        )
    });
    if needs_derivative && !args.scheme.supports_derivative() {
        return Err(format!(
            "fraction methods need da/dxi, which {} does not propagate",
            args.scheme
        ));
    }
    if args
        .methods
        .iter()
        .any(|m| matches!(m, NormingMethod::BidirectionalFraction))
        && !matches!(args.scheme, Scheme::Bo | Scheme::Al)
    {
        return Err(format!(
            "bidirectional matrices exist only for bo and al, not {}",
            args.scheme
        ));
    }

    let amplitudes = match (&args.amplitude, args.profile) {
        (Some(sweep), _) => sweep.values(args.a_step)?,
        (None, ProfileKind::PhasedSoliton) => vec![1.0],
        (None, kind) => return Err(format!("profile '{kind}' requires --A")),
    };
    // Surface bad amplitudes (for instance a sweep over the phased soliton)
    // as a usage error before any work happens.
    for &a in &amplitudes {
        build_profile(args.profile, Some(a), args.half_width)?;
    }
    // The FromStr default pins 64 circle nodes; apply the flag.
    let methods: Vec<NormingMethod> = args
        .methods
        .iter()
        .map(|m| match m {
            NormingMethod::ContourResidue { .. } => NormingMethod::ContourResidue {
                n_points: args.residue_points,
            },
            other => *other,
        })
        .collect();

    let budget = Budget::new(args.io.budget_seconds)?;
    let timing = args.io.timing;
    let cells: Vec<(f64, NormingMethod)> = amplitudes
        .iter()
        .flat_map(|&a| methods.iter().map(move |&m| (a, m)))
        .collect();

    let rows: Vec<Vec<String>> = cells
        .par_iter()
        .map(|&(a, method)| {
            let mut row = vec![fmt_e(a), method.to_string(), args.scheme.to_string()];
            if budget.exhausted() {
                row.extend([
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    SKIPPED.into(),
                ]);
                return row;
            }
            let (cell, runtime) = maybe_time(timing, || compute(a, method, args));
            match cell {
                Ok((c, rel)) => {
                    row.extend([
                        fmt_e(c.re),
                        fmt_e(c.im),
                        fmt_e(rel),
                        opt_e(runtime),
                        String::new(),
                    ]);
                }
                Err(status) => {
                    row.extend([
                        String::new(),
                        String::new(),
                        String::new(),
                        opt_e(runtime),
                        sanitize(&status),
                    ]);
                }
            }
            row
        })
        .collect();

    let mut out = String::from(HEADER);
    out.push('\n');
    let mut partial = false;
    for row in rows {
        if !row.last().map(String::is_empty).unwrap_or(true) {
            partial = true;
        }
        push_row(&mut out, &row);
    }

    emit(args.io.out.as_deref(), &out).map_err(|e| format!("writing output: {e}"))?;
    Ok(partial)
}

/// One sweep cell: the norming constant at the closed-form top eigenvalue
/// and its relative error against the closed-form constant.
fn compute(a: f64, method: NormingMethod, args: &NormingArgs) -> Result<(Complex64, f64), String> {
    let spec = build_profile(args.profile, Some(a), args.half_width).expect("validated earlier");
    let eigenvalues = spec.analytic_eigenvalues();
    let xi_top = eigenvalues
        .iter()
        .copied()
        .max_by(|x, y| x.im.partial_cmp(&y.im).unwrap())
        .ok_or_else(|| "no discrete eigenvalues".to_string())?;
    let c_ref = spec.analytic_norming(xi_top).map_err(|e| e.to_string())?;
    let pot =
        SampledPotential::sample(&spec, spec.half_width, args.n).map_err(|e| e.to_string())?;

    let c = match method {
        NormingMethod::ContourResidue { n_points } => {
            let radius = args
                .residue_radius
                .unwrap_or_else(|| norming::default_residue_radius(xi_top, &eigenvalues));
            residue_contour(&pot, xi_top, args.scheme, n_points, radius)
                .map_err(|e| e.to_string())?
        }
        NormingMethod::Fraction => {
            residue_fraction(&pot, xi_top, args.scheme).map_err(|e| e.to_string())?
        }
        NormingMethod::BidirectionalFraction => {
            let b = bidirectional_b(&pot, xi_top, args.scheme).map_err(|e| e.to_string())?;
            let sc = scatter(&pot, xi_top, args.scheme, true).map_err(|e| e.to_string())?;
            let c = b / sc.a_prime.expect("derivative requested");
            if !c.is_finite() {
                return Err(format!("scattering ratio non-finite at {xi_top}"));
            }
            c
        }
    };
    Ok((c, rel_or_abs(c, c_ref)))
}
