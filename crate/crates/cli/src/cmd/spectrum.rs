//! `spectrum`: continuous-spectrum accuracy sweep. For every scheme and
//! sample count, scatter across a real spectral grid and compare a(xi) and
//! b(xi) against the profile's closed form.

use clap::Args;
use rayon::prelude::*;

use zsnft::zss::scatter;
use zsnft::{metrics, Complex64, SampledPotential, ScatteringResult, Scheme, ZssError};

use super::{check_n, IoArgs, ProfileArgs};
use crate::output::{emit, fmt_e, opt_e, push_row, sanitize};
use crate::run::{maybe_time, rel_or_abs, Budget, NSpec, XiGrid, SKIPPED};

const HEADER: &str = "scheme,n,amplitude,xi,err_a,err_b,msre,runtime_per_sample,status";

#[derive(Args, Debug)]
#[command(after_help = "\
Columns: scheme, n, amplitude, xi, err_a, err_b, msre, runtime_per_sample, status.
err_a/err_b are per-point relative errors against the closed-form coefficients
(absolute difference where the reference vanishes). msre and runtime_per_sample
are per-(scheme, n) block values, repeated on each row of the block; msre
averages the squared relative error of a(xi) over the grid, and
runtime_per_sample is wall seconds per potential sample per spectral point
(empty unless --timing). status is empty on success.")]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,

    /// Schemes to sweep, comma separated
    #[arg(long, value_delimiter = ',',
          default_values_t = vec![Scheme::Bo, Scheme::BoMod, Scheme::Al,
                                  Scheme::AlMod, Scheme::Cn, Scheme::Rk4])]
    pub schemes: Vec<Scheme>,

    /// Sample counts: a single even value or lo..hi with power-of-two
    /// endpoints, expanded by doubling
    #[arg(long)]
    pub n: NSpec,

    /// Real spectral grid lo:hi:step
    #[arg(long, default_value = "-10:10:0.1", allow_hyphen_values = true)]
    pub xi_grid: XiGrid,

    #[command(flatten)]
    pub io: IoArgs,
}

pub fn run(args: &SpectrumArgs) -> Result<bool, String> {
    let spec = args.profile.build()?;
    for &n in &args.n.0 {
        check_n(n)?;
    }
    let budget = Budget::new(args.io.budget_seconds)?;
    let xi = args.xi_grid.points();

    let mut out = String::from(HEADER);
    out.push('\n');
    let mut partial = false;

    for &scheme in &args.schemes {
        for &n in &args.n.0 {
            let base = [scheme.to_string(), n.to_string(), fmt_e(spec.amplitude)];
            if budget.exhausted() {
                partial = true;
                for &x in &xi {
                    let mut row = base.to_vec();
                    row.extend([
                        fmt_e(x),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                        SKIPPED.into(),
                    ]);
                    push_row(&mut out, &row);
                }
                continue;
            }

            let pot =
                SampledPotential::sample(&spec, spec.half_width, n).map_err(|e| e.to_string())?;
            let (results, elapsed) = maybe_time(args.io.timing, || {
                xi.par_iter()
                    .map(|&x| scatter(&pot, Complex64::new(x, 0.0), scheme, false))
                    .collect::<Vec<Result<ScatteringResult, ZssError>>>()
            });
            let per_sample = elapsed.map(|t| t / (xi.len() * n) as f64);

            let mut computed = Vec::new();
            let mut reference = Vec::new();
            for (&x, res) in xi.iter().zip(&results) {
                if let Ok(sc) = res {
                    computed.push(sc.a);
                    reference.push(spec.analytic_a(Complex64::new(x, 0.0)));
                }
            }
            let block_msre = (!computed.is_empty())
                .then(|| metrics::msre(&computed, &reference).expect("lengths match"));

            for (&x, res) in xi.iter().zip(&results) {
                let z = Complex64::new(x, 0.0);
                let mut row = base.to_vec();
                row.push(fmt_e(x));
                match res {
                    Ok(sc) => {
                        row.push(fmt_e(rel_or_abs(sc.a, spec.analytic_a(z))));
                        row.push(fmt_e(rel_or_abs(sc.b, spec.analytic_b(z))));
                        row.push(opt_e(block_msre));
                        row.push(opt_e(per_sample));
                        row.push(String::new());
                    }
                    Err(e) => {
                        partial = true;
                        row.extend([
                            String::new(),
                            String::new(),
                            opt_e(block_msre),
                            opt_e(per_sample),
                            sanitize(&e.to_string()),
                        ]);
                    }
                }
                push_row(&mut out, &row);
            }
        }
    }

    emit(args.io.out.as_deref(), &out).map_err(|e| format!("writing output: {e}"))?;
    Ok(partial)
}
