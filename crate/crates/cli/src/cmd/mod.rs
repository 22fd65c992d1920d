//! One module per subcommand. Every command builds its whole output in
//! memory, then writes it in one shot, so a partially failed run still
//! produces a complete, parseable file.

pub mod basin;
pub mod count_zeros;
pub mod eigenvalues;
pub mod norming;
pub mod sample;
pub mod spectrum;

use std::path::PathBuf;

use zsnft::{ProfileKind, ProfileSpec};

use crate::run::build_profile;

/// The test potential, shared by every subcommand.
#[derive(clap::Args, Debug)]
pub struct ProfileArgs {
    /// Test potential: over (A sech t), rect (height-A box on [-L, L]) or
    /// phased (exp(-i t) sech t)
    #[arg(long)]
    pub profile: ProfileKind,

    /// Amplitude A; required for over and rect, fixed at 1 for phased
    #[arg(long = "A")]
    pub amplitude: Option<f64>,

    /// Truncation half-width: the potential is sampled on [-L, L]
    #[arg(long = "L")]
    pub half_width: f64,
}

impl ProfileArgs {
    pub fn build(&self) -> Result<ProfileSpec, String> {
        build_profile(self.profile, self.amplitude, self.half_width)
    }
}

/// Output, reproducibility and work-ceiling flags.
#[derive(clap::Args, Debug)]
pub struct IoArgs {
    /// Output file; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Seed for the stages that draw random guesses
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Wall-clock ceiling in seconds; work units past it are reported as
    /// skipped and the run exits with code 1
    #[arg(long, default_value_t = 600.0)]
    pub budget_seconds: f64,

    /// Fill the runtime columns (timed runs are not byte-reproducible)
    #[arg(long, default_value_t = false)]
    pub timing: bool,
}

/// Even-n validation shared by the scattering commands: the bidirectional
/// norming scheme meets at t = 0, which must be a sample boundary.
pub fn check_n(n: usize) -> Result<(), String> {
    if n < 2 || n % 2 != 0 {
        return Err(format!("--n must be even and at least 2, got {n}"));
    }
    if n > 1 << 22 {
        return Err(format!("--n {n} is past the 2^22 sanity cap"));
    }
    Ok(())
}
