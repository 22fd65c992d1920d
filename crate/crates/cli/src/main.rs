//! `zsnft` — nonlinear Fourier (direct scattering) spectra of the focusing
//! Zakharov-Shabat system, as a batch tool.
//!
//! Every subcommand is deterministic for fixed flags and seed (timed runs
//! excepted), writes CSV for sweep data and JSON for structured spectra,
//! and exits 0 on full success, 1 when some work units failed or were
//! skipped, 2 on invalid usage.

mod cmd;
mod output;
mod run;

use std::process::ExitCode;

use clap::Parser;

#[derive(Parser, Debug)]
#[command(
    name = "zsnft",
    version,
    about = "Nonlinear Fourier spectra of the focusing Zakharov-Shabat system",
    after_help = "\
Flag grammar: long flags only. Sample counts accept lo..hi ranges with
power-of-two endpoints, expanded by doubling; real grids are lo:hi:step;
rectangles are re_min:re_max:im_min:im_max; amplitude sweeps accept a single
value, a comma list, or lo..hi walked with --A-step.

CSV files are UTF-8, comma separated, floats in shortest round-trip
scientific form, complex values as two re/im columns. JSON numbers carry 17
significant digits; schemas for the JSON outputs ship in crates/cli/schemas/.

Exit codes: 0 all work units succeeded, 1 some failed or were skipped (see
the status fields), 2 invalid usage. ZSNFT_THREADS caps the worker pool."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Subcommand, Debug)]
enum Cmd {
    /// Continuous-spectrum accuracy sweep over schemes, sample counts and a
    /// real grid (CSV)
    Spectrum(cmd::spectrum::SpectrumArgs),
    /// Discrete eigenvalues by multi-root search, contour integration or
    /// the hybrid pipeline (JSON)
    Eigenvalues(cmd::eigenvalues::EigenvaluesArgs),
    /// Convergence-basin map of the iterative root finders over a guess
    /// lattice (CSV)
    Basin(cmd::basin::BasinArgs),
    /// Norming constants across an amplitude sweep (CSV)
    Norming(cmd::norming::NormingArgs),
    /// Argument-principle zero counts in all three modes (JSON)
    CountZeros(cmd::count_zeros::CountZerosArgs),
    /// Discretize a profile and export its samples (CSV)
    Sample(cmd::sample::SampleArgs),
}

fn main() -> ExitCode {
    if let Err(msg) = init_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Spectrum(args) => cmd::spectrum::run(args),
        Cmd::Eigenvalues(args) => cmd::eigenvalues::run(args),
        Cmd::Basin(args) => cmd::basin::run(args),
        Cmd::Norming(args) => cmd::norming::run(args),
        Cmd::CountZeros(args) => cmd::count_zeros::run(args),
        Cmd::Sample(args) => cmd::sample::run(args),
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("warning: some work units failed or were skipped; see the status fields");
            ExitCode::from(1)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// ZSNFT_THREADS caps the rayon pool used for sweep cells and the
/// library's internal parallelism; unset means one worker per core.
fn init_threads() -> Result<(), String> {
    match std::env::var("ZSNFT_THREADS") {
        Ok(v) => {
            let k: usize = v
                .trim()
                .parse()
                .map_err(|e| format!("ZSNFT_THREADS '{v}': {e}"))?;
            if k == 0 {
                return Err("ZSNFT_THREADS must be at least 1".into());
            }
            rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build_global()
                .map_err(|e| format!("thread pool: {e}"))
        }
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(format!("ZSNFT_THREADS: {e}")),
    }
}
