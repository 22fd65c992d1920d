//! `basin`: convergence-basin map. For a lattice of initial guesses over a
//! rectangle, run each iterative root finder against the numeric a(xi) and
//! record where it lands. Cells record non-convergence as data, not as a
//! run failure — mapping divergence is the point of the command.

use clap::Args;
use rayon::prelude::*;

use zsnft::zss::scatter;
use zsnft::{Complex64, Region, RootConfig, RootMethod, RootStatus, SampledPotential, Scheme};

use super::{check_n, IoArgs, ProfileArgs};
use crate::output::{emit, fmt_e, opt_e, push_row};
use crate::run::{maybe_time, Budget, Lattice, RectArg, SKIPPED};

const HEADER: &str =
    "method,guess_re,guess_im,converged,accurate,root_re,root_im,iterations,runtime,status";

#[derive(Args, Debug)]
#[command(after_help = "\
Columns: method, guess_re, guess_im, converged, accurate, root_re, root_im,
iterations, runtime, status. Guesses sit at cell midpoints of the WxH lattice
over the rectangle. converged is 0/1; accurate is 1 when the landed root is
within 1% relative distance of a closed-form eigenvalue (empty when the
profile has none). status names the failure mode of diverged cells
(max-iterations, left-roi, numerical-failure); runtime is empty unless
--timing.")]
pub struct BasinArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,

    /// Sample count for the numeric a(xi)
    #[arg(long, default_value_t = 1024)]
    pub n: usize,

    /// Scattering scheme behind the search
    #[arg(long, default_value_t = Scheme::Bo)]
    pub scheme: Scheme,

    /// Root finders to map, comma separated
    #[arg(long, value_delimiter = ',',
          default_values_t = vec![RootMethod::NewtonRaphson, RootMethod::Secant,
                                  RootMethod::Sidi3, RootMethod::Steffensen,
                                  RootMethod::Muller])]
    pub methods: Vec<RootMethod>,

    /// Guess rectangle re_min:re_max:im_min:im_max
    #[arg(long, default_value = "-1:2:0.05:2", allow_hyphen_values = true)]
    pub rect: RectArg,

    /// Lattice resolution WxH across the rectangle
    #[arg(long, default_value = "60x60")]
    pub lattice: Lattice,

    /// Iteration cap per cell
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,

    /// Region of interest: iterates that stray outside are abandoned
    /// (defaults to the guess rectangle inflated threefold)
    #[arg(long, allow_hyphen_values = true)]
    pub roi: Option<RectArg>,

    #[command(flatten)]
    pub io: IoArgs,
}

pub fn run(args: &BasinArgs) -> Result<bool, String> {
    let spec = args.profile.build()?;
    check_n(args.n)?;
    if args.max_iter == 0 {
        return Err("--max-iter must be at least 1".into());
    }
    if args.methods.iter().any(|m| m.needs_derivative()) && !args.scheme.supports_derivative() {
        return Err(format!(
            "nr needs da/dxi, which {} does not propagate",
            args.scheme
        ));
    }
    let budget = Budget::new(args.io.budget_seconds)?;
    let pot =
        SampledPotential::sample(&spec, spec.half_width, args.n).map_err(|e| e.to_string())?;
    let oracle = spec.analytic_eigenvalues();
    let roi = match args.roi {
        Some(r) => Region::new(r.re_min, r.re_max, r.im_min, r.im_max),
        None => Region::new(
            args.rect.re_min,
            args.rect.re_max,
            args.rect.im_min,
            args.rect.im_max,
        )
        .inflate(3.0),
    };

    let d_re = (args.rect.re_max - args.rect.re_min) / args.lattice.cols as f64;
    let d_im = (args.rect.im_max - args.rect.im_min) / args.lattice.rows as f64;
    let cells = args.lattice.cols * args.lattice.rows;

    let mut out = String::from(HEADER);
    out.push('\n');
    let mut partial = false;

    for &method in &args.methods {
        let mut cfg = RootConfig::new(method).with_roi(roi);
        cfg.max_iter = args.max_iter;
        let timing = args.io.timing;

        let rows: Vec<Vec<String>> = (0..cells)
            .into_par_iter()
            .map(|idx| {
                let guess = Complex64::new(
                    args.rect.re_min + (idx % args.lattice.cols) as f64 * d_re + 0.5 * d_re,
                    args.rect.im_min + (idx / args.lattice.cols) as f64 * d_im + 0.5 * d_im,
                );
                let mut row = vec![method.to_string(), fmt_e(guess.re), fmt_e(guess.im)];
                if budget.exhausted() {
                    row.extend([
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        SKIPPED.into(),
                    ]);
                    return row;
                }

                let mut f = |z: Complex64| {
                    scatter(&pot, z, args.scheme, false)
                        .map(|r| r.a)
                        .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
                };
                let mut fp = |z: Complex64| {
                    scatter(&pot, z, args.scheme, true)
                        .map(|r| r.a_prime.unwrap())
                        .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
                };
                let (outcome, runtime) = maybe_time(timing, || {
                    if method.needs_derivative() {
                        zsnft::rootfind::find_root(&mut f, Some(&mut fp), guess, &cfg)
                    } else {
                        zsnft::rootfind::find_root(&mut f, None, guess, &cfg)
                    }
                });

                let accurate = outcome
                    .root
                    .map(|root| oracle.iter().any(|r| (root - r).norm() / r.norm() < 0.01));
                row.push(((outcome.status == RootStatus::Converged) as u8).to_string());
                row.push(match (oracle.is_empty(), outcome.root, accurate) {
                    (true, _, _) => String::new(),
                    (false, None, _) => "0".into(),
                    (false, Some(_), Some(hit)) => (hit as u8).to_string(),
                    (false, Some(_), None) => "0".into(),
                });
                match outcome.root {
                    Some(root) => {
                        row.push(fmt_e(root.re));
                        row.push(fmt_e(root.im));
                    }
                    None => {
                        row.push(String::new());
                        row.push(String::new());
                    }
                }
                row.push(outcome.iterations.to_string());
                row.push(opt_e(runtime));
                row.push(
                    match outcome.status {
                        RootStatus::Converged => "",
                        RootStatus::MaxIterExceeded => "max-iterations",
                        RootStatus::LeftRoi => "left-roi",
                        RootStatus::NumericalFailure => "numerical-failure",
                    }
                    .into(),
                );
                row
            })
            .collect();

        for row in rows {
            if row.last().map(String::as_str) == Some(SKIPPED) {
                partial = true;
            }
            push_row(&mut out, &row);
        }
    }

    emit(args.io.out.as_deref(), &out).map_err(|e| format!("writing output: {e}"))?;
    Ok(partial)
}
