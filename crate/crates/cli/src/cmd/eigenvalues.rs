//! `eigenvalues`: locate the discrete spectrum with any of the root-search
//! pipelines — sequential multi-root with deflation, pure contour
//! integration (exact or derivative-free quadrature), or the hybrid
//! coarse-contour-plus-refinement search.

use std::str::FromStr;

use clap::Args;

use zsnft::contour::dl_locate;
use zsnft::rootfind::{multi_root, RootError};
use zsnft::zss::scatter;
use zsnft::{
    Complex64, Contour, HybridConfig, MomentMode, Region, RootConfig, RootMethod, SampledPotential,
    Scheme,
};

use super::{check_n, IoArgs, ProfileArgs};
use crate::output::{emit, Json};
use crate::run::{maybe_time, oracle_errors, Budget, CxArg, RectArg, SKIPPED};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigMethod {
    MultiRoot,
    Dl,
    Adl,
    Hybrid,
}

impl FromStr for EigMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "multiroot" | "multi-root" => Ok(EigMethod::MultiRoot),
            "dl" => Ok(EigMethod::Dl),
            "adl" => Ok(EigMethod::Adl),
            "hybrid" => Ok(EigMethod::Hybrid),
            other => Err(format!(
                "unknown method '{other}' (expected multiroot, dl, adl or hybrid)"
            )),
        }
    }
}

impl std::fmt::Display for EigMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EigMethod::MultiRoot => "multiroot",
            EigMethod::Dl => "dl",
            EigMethod::Adl => "adl",
            EigMethod::Hybrid => "hybrid",
        })
    }
}

#[derive(Args, Debug)]
#[command(after_help = "\
Emits one JSON object; methods[] has an entry per requested method with the
located zeros (sorted by descending imaginary part), the per-zero relative
error against the closed-form eigenvalues when the profile has them, the
count, a status string and the wall-clock runtime (null unless --timing).")]
pub struct EigenvaluesArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,

    /// Sample count for the numeric a(xi)
    #[arg(long, default_value_t = 1024)]
    pub n: usize,

    /// Scattering scheme behind the search
    #[arg(long, default_value_t = Scheme::Bo)]
    pub scheme: Scheme,

    /// Location methods to run, comma separated: hybrid, dl, adl, multiroot
    #[arg(long, value_delimiter = ',', default_values_t = vec![EigMethod::Hybrid])]
    pub methods: Vec<EigMethod>,

    /// Search contour re_min:re_max:im_min:im_max in the upper half plane
    #[arg(long, default_value = "-1:1:0.1:5", allow_hyphen_values = true)]
    pub contour: RectArg,

    /// Quadrature nodes on the contour
    #[arg(long, default_value_t = 400)]
    pub contour_points: usize,

    /// Iterative refinement method for hybrid and multiroot; defaults to nr
    /// when the scheme propagates da/dxi, muller otherwise
    #[arg(long)]
    pub refine: Option<RootMethod>,

    /// Iteration cap for the iterative stages
    #[arg(long, default_value_t = 1000)]
    pub max_iter: usize,

    /// Zero count multiroot searches for; defaults to the closed-form count
    #[arg(long)]
    pub expected: Option<usize>,

    /// Initial guess re,im for multiroot; defaults to the contour center
    #[arg(long, allow_hyphen_values = true)]
    pub guess: Option<CxArg>,

    #[command(flatten)]
    pub io: IoArgs,
}

struct MethodReport {
    method: EigMethod,
    status: String,
    zeros: Vec<Complex64>,
    refined: Option<Vec<bool>>,
    runtime: Option<f64>,
}

pub fn run(args: &EigenvaluesArgs) -> Result<bool, String> {
    let spec = args.profile.build()?;
    check_n(args.n)?;
    if args.contour.im_min <= 0.0 {
        return Err("the contour must sit strictly inside the upper half plane".into());
    }
    if args.contour_points < 16 {
        return Err(format!(
            "--contour-points must be at least 16, got {}",
            args.contour_points
        ));
    }
    if args.max_iter == 0 {
        return Err("--max-iter must be at least 1".into());
    }
    let refine = args.refine.unwrap_or(if args.scheme.supports_derivative() {
        RootMethod::NewtonRaphson
    } else {
        RootMethod::Muller
    });
    if refine.needs_derivative() && !args.scheme.supports_derivative() {
        return Err(format!(
            "{} needs da/dxi, which {} does not propagate",
            refine, args.scheme
        ));
    }
    if args.methods.contains(&EigMethod::Dl) && !args.scheme.supports_derivative() {
        return Err(format!(
            "dl needs da/dxi, which {} does not propagate",
            args.scheme
        ));
    }
    let oracle = spec.analytic_eigenvalues();
    let expected = match (args.methods.contains(&EigMethod::MultiRoot), args.expected) {
        (true, Some(k)) if k >= 1 => k,
        (true, Some(k)) => return Err(format!("--expected must be at least 1, got {k}")),
        (true, None) if !oracle.is_empty() => oracle.len(),
        (true, None) => {
            return Err("the profile has no closed-form zero count; pass --expected".into())
        }
        (false, _) => 0,
    };

    let budget = Budget::new(args.io.budget_seconds)?;
    let pot =
        SampledPotential::sample(&spec, spec.half_width, args.n).map_err(|e| e.to_string())?;
    let contour = Contour::rectangle(
        args.contour.re_min,
        args.contour.re_max,
        args.contour.im_min,
        args.contour.im_max,
        args.contour_points,
    );
    let guess = args
        .guess
        .map(|c| c.0)
        .unwrap_or_else(|| args.contour.center());

    let reports: Vec<MethodReport> = args
        .methods
        .iter()
        .map(|&method| {
            if budget.exhausted() {
                return MethodReport {
                    method,
                    status: SKIPPED.into(),
                    zeros: Vec::new(),
                    refined: None,
                    runtime: None,
                };
            }
            let (outcome, runtime) = maybe_time(args.io.timing, || {
                locate(method, &pot, args, &contour, refine, guess, expected)
            });
            let (status, zeros, refined) = outcome;
            MethodReport {
                method,
                status,
                zeros,
                refined,
                runtime,
            }
        })
        .collect();

    let partial = reports.iter().any(|r| r.status != "ok");
    let doc = render(args, &spec.analytic_eigenvalues(), &reports);
    emit(args.io.out.as_deref(), &doc.render()).map_err(|e| format!("writing output: {e}"))?;
    Ok(partial)
}

fn nan() -> Complex64 {
    Complex64::new(f64::NAN, f64::NAN)
}

/// Run one location method; returns (status, zeros sorted by descending
/// imaginary part, per-zero refined flags for hybrid).
fn locate(
    method: EigMethod,
    pot: &SampledPotential,
    args: &EigenvaluesArgs,
    contour: &Contour,
    refine: RootMethod,
    guess: Complex64,
    expected: usize,
) -> (String, Vec<Complex64>, Option<Vec<bool>>) {
    let scheme = args.scheme;
    let mut f = |z: Complex64| scatter(pot, z, scheme, false).map(|r| r.a).unwrap_or(nan());
    let mut fp = |z: Complex64| {
        scatter(pot, z, scheme, true)
            .map(|r| r.a_prime.unwrap())
            .unwrap_or(nan())
    };

    match method {
        EigMethod::Hybrid => {
            let mut cfg = HybridConfig::new(*contour, scheme);
            cfg.refine.method = refine;
            cfg.refine.max_iter = args.max_iter;
            match zsnft::hybrid::hybrid_eigenvalues(pot, &cfg) {
                Ok(found) => {
                    let zeros: Vec<Complex64> = found.iter().map(|e| e.value).collect();
                    let refined = found.iter().map(|e| e.refined).collect();
                    ("ok".into(), zeros, Some(refined))
                }
                Err(e) => (format!("error: {e}"), Vec::new(), None),
            }
        }
        EigMethod::Dl | EigMethod::Adl => {
            let mode = if method == EigMethod::Dl {
                MomentMode::Dl
            } else {
                MomentMode::Adl
            };
            let result = if method == EigMethod::Dl {
                dl_locate(&mut f, Some(&mut fp), contour, mode)
            } else {
                dl_locate(&mut f, None, contour, mode)
            };
            match result {
                Ok(zeros) => ("ok".into(), zeros, None),
                Err(e) => (format!("error: {e}"), Vec::new(), None),
            }
        }
        EigMethod::MultiRoot => {
            let roi = Region::new(
                args.contour.re_min,
                args.contour.re_max,
                args.contour.im_min,
                args.contour.im_max,
            );
            let mut cfg = RootConfig::new(refine);
            cfg.max_iter = args.max_iter;
            let fp_opt: Option<&mut dyn FnMut(Complex64) -> Complex64> =
                if refine.needs_derivative() {
                    Some(&mut fp)
                } else {
                    None
                };
            match multi_root(&mut f, fp_opt, guess, expected, roi, &cfg, args.io.seed) {
                Ok(mut zeros) => {
                    sort_desc_im(&mut zeros);
                    ("ok".into(), zeros, None)
                }
                Err(RootError::Incomplete {
                    mut found,
                    expected,
                }) => {
                    sort_desc_im(&mut found);
                    (
                        format!("incomplete: located {} of {expected}", found.len()),
                        found,
                        None,
                    )
                }
            }
        }
    }
}

fn sort_desc_im(zeros: &mut [Complex64]) {
    zeros.sort_by(|a, b| {
        b.im.partial_cmp(&a.im)
            .unwrap()
            .then(a.re.partial_cmp(&b.re).unwrap())
    });
}

fn render(args: &EigenvaluesArgs, oracle: &[Complex64], reports: &[MethodReport]) -> Json {
    let methods: Vec<Json> = reports
        .iter()
        .map(|r| {
            let errors = oracle_errors(&r.zeros, oracle);
            let zeros: Vec<Json> = r
                .zeros
                .iter()
                .enumerate()
                .map(|(k, z)| {
                    Json::Obj(vec![
                        ("re", Json::Num(z.re)),
                        ("im", Json::Num(z.im)),
                        (
                            "refined",
                            match &r.refined {
                                Some(flags) => Json::Bool(flags[k]),
                                None => Json::Null,
                            },
                        ),
                        ("relative_error", Json::opt_num(errors[k])),
                    ])
                })
                .collect();
            Json::Obj(vec![
                ("method", Json::Str(r.method.to_string())),
                ("status", Json::Str(r.status.clone())),
                ("count", Json::Int(r.zeros.len() as i64)),
                ("runtime_seconds", Json::opt_num(r.runtime)),
                ("zeros", Json::Arr(zeros)),
            ])
        })
        .collect();

    let spec = args.profile.build().expect("validated earlier");
    Json::Obj(vec![
        ("command", Json::Str("eigenvalues".into())),
        (
            "profile",
            Json::Obj(vec![
                ("kind", Json::Str(spec.kind.to_string())),
                ("amplitude", Json::Num(spec.amplitude)),
                ("half_width", Json::Num(spec.half_width)),
            ]),
        ),
        ("n", Json::Int(args.n as i64)),
        ("scheme", Json::Str(args.scheme.to_string())),
        ("seed", Json::Int(args.io.seed as i64)),
        (
            "contour",
            Json::Obj(vec![
                ("re_min", Json::Num(args.contour.re_min)),
                ("re_max", Json::Num(args.contour.re_max)),
                ("im_min", Json::Num(args.contour.im_min)),
                ("im_max", Json::Num(args.contour.im_max)),
                ("n_points", Json::Int(args.contour_points as i64)),
            ]),
        ),
        ("methods", Json::Arr(methods)),
    ])
}
