//! `count-zeros`: argument-principle zero counts of the numeric a(xi)
//! inside a rectangular contour, in all three counting modes.

use clap::Args;

use zsnft::contour::count_zeros;
use zsnft::zss::scatter;
use zsnft::{Complex64, Contour, ContourError, CountMode, SampledPotential, Scheme};

use super::{check_n, IoArgs, ProfileArgs};
use crate::output::{emit, Json};
use crate::run::{maybe_time, Budget, RectArg, SKIPPED};

#[derive(Args, Debug)]
#[command(after_help = "\
Emits one JSON object; modes[] has an entry per counting mode with the
rounded count, the raw (non-integer) winding estimate, the deviation
|raw - count|, a status string and the wall-clock runtime (null unless
--timing). An ambiguous count reports its raw value with a null count.")]
pub struct CountZerosArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,

    /// Sample count for the numeric a(xi)
    #[arg(long, default_value_t = 1024)]
    pub n: usize,

    /// Scattering scheme
    #[arg(long, default_value_t = Scheme::Bo)]
    pub scheme: Scheme,

    /// Counting contour re_min:re_max:im_min:im_max in the upper half plane
    #[arg(long, default_value = "-1:1:0.05:5.5", allow_hyphen_values = true)]
    pub contour: RectArg,

    /// Quadrature nodes on the contour
    #[arg(long, default_value_t = 512)]
    pub contour_points: usize,

    #[command(flatten)]
    pub io: IoArgs,
}

const MODES: [CountMode; 3] = [
    CountMode::LogDerivative,
    CountMode::PhaseIncrement,
    CountMode::Approximated,
];

pub fn run(args: &CountZerosArgs) -> Result<bool, String> {
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

    let mut partial = false;
    let mut modes = Vec::new();
    for mode in MODES {
        if budget.exhausted() {
            partial = true;
            modes.push(mode_entry(mode, SKIPPED.into(), None, None, None));
            continue;
        }
        if mode == CountMode::LogDerivative && !args.scheme.supports_derivative() {
            partial = true;
            let status = format!("error: {} does not propagate da/dxi", args.scheme);
            modes.push(mode_entry(mode, status, None, None, None));
            continue;
        }

        let scheme = args.scheme;
        let mut f = |z: Complex64| {
            scatter(&pot, z, scheme, false)
                .map(|r| r.a)
                .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
        };
        let mut fp = |z: Complex64| {
            scatter(&pot, z, scheme, true)
                .map(|r| r.a_prime.unwrap())
                .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
        };
        let (outcome, runtime) = maybe_time(args.io.timing, || {
            if mode == CountMode::LogDerivative {
                count_zeros(&mut f, Some(&mut fp), &contour, mode)
            } else {
                count_zeros(&mut f, None, &contour, mode)
            }
        });
        match outcome {
            Ok((count, raw)) => {
                modes.push(mode_entry(
                    mode,
                    "ok".into(),
                    Some(count),
                    Some(raw),
                    runtime,
                ));
            }
            Err(ContourError::AmbiguousCount { raw }) => {
                partial = true;
                modes.push(mode_entry(
                    mode,
                    "ambiguous".into(),
                    None,
                    Some(raw),
                    runtime,
                ));
            }
            Err(e) => {
                partial = true;
                modes.push(mode_entry(mode, format!("error: {e}"), None, None, runtime));
            }
        }
    }

    let doc = Json::Obj(vec![
        ("command", Json::Str("count-zeros".into())),
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
        ("modes", Json::Arr(modes)),
    ]);
    emit(args.io.out.as_deref(), &doc.render()).map_err(|e| format!("writing output: {e}"))?;
    Ok(partial)
}

fn mode_entry(
    mode: CountMode,
    status: String,
    count: Option<usize>,
    raw: Option<f64>,
    runtime: Option<f64>,
) -> Json {
    let deviation = match (count, raw) {
        (Some(c), Some(r)) => Some((r - c as f64).abs()),
        _ => None,
    };
    Json::Obj(vec![
        ("mode", Json::Str(mode.to_string())),
        ("status", Json::Str(status)),
        (
            "count",
            match count {
                Some(c) => Json::Int(c as i64),
                None => Json::Null,
            },
        ),
        ("raw", Json::opt_num(raw)),
        ("deviation", Json::opt_num(deviation)),
        ("runtime_seconds", Json::opt_num(runtime)),
    ])
}
